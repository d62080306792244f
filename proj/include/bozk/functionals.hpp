#pragma once

#include <optional>
#include <string>

#include "bozk/exponent.hpp"
#include "bozk/field.hpp"

namespace bozk {

// Every scalar functional of a field at fixed p.  The derived entries are
// definitional combinations of the measured ones:
//   hdot = dxsq + dysq, hfull = l2sq + hdot, I = hfull/2,
//   S = I - J/(p+2), K = (l2sq + dysq)/2 - J/(p+2), E = hdot/2 - J/(p+2).
struct FunctionalReport {
    double p_value = 0;
    std::string p_str;
    double l2sq = 0;   // |u|_{L2}^2
    double dxsq = 0;   // |Dx^{1/2} u|_{L2}^2
    double dysq = 0;   // |u_y|_{L2}^2
    double hdot = 0;
    double hfull = 0;
    double J = 0;      // integral of u^{p+2}
    double I = 0;
    double S = 0;
    double K = 0;
    double E = 0;
    std::optional<double> A;  // Weinstein quotient, present only when J > 0

    std::string to_json() const;
};

FunctionalReport eval_functionals(const RealField& u, const Exponent& p);

// Scale-invariant quotient |Dx^{1/2}u|^p |u_y|^{p/2} |u|^{(4-p)/2} / J(u).
// Requires J(u) > 0.
double weinstein_quotient(const RealField& u, const Exponent& p);
double weinstein_quotient(const FunctionalReport& r, const Exponent& p);

// omega(x,y) = kappa * u(xi x, mu y) tuned so that K(omega) = 0 and the
// norm targets determined by the ground-state scale are met.
struct ScalingTriple {
    double kappa = 0, xi = 0, mu = 0;
    RealField omega;
    double K_omega = 0;       // measured K of the resampled omega
    double dxsq_omega = 0;    // measured |Dx^{1/2} omega|^2
};

// `ground` supplies the ground-state dxsq the normalization targets.
ScalingTriple scale_normalize(const RealField& u, const Exponent& p,
                              const FunctionalReport& ground);

} // namespace bozk
