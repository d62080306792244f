#include "bozk/functionals.hpp"

#include <cmath>
#include <sstream>

#include "bozk/fft.hpp"
#include "bozk/operators.hpp"

#include "json.hpp"

namespace bozk {

FunctionalReport eval_functionals(const RealField& u, const Exponent& p) {
    if (!u.all_finite()) throw std::invalid_argument("eval_functionals: non-finite field");
    const Grid2D& g = u.grid();
    Spectrum2D s = fft_forward(u);
    const double w = g.cell_area() / double(g.size());

    double l2 = 0, dx = 0, dyn = 0;
    for (int iy = 0; iy < g.ny; ++iy) {
        double ky = (iy == g.ny / 2) ? 0.0 : g.ky[iy];
        double ky2 = ky * ky;
        for (int ix = 0; ix < g.nx; ++ix) {
            double m = std::norm(s.at(ix, iy));
            l2 += m;
            dx += std::abs(g.kx[ix]) * m;
            dyn += ky2 * m;
        }
    }

    FunctionalReport r;
    r.p_value = p.value();
    r.p_str = p.str();
    r.l2sq = l2 * w;
    r.dxsq = dx * w;
    r.dysq = dyn * w;
    r.hdot = r.dxsq + r.dysq;
    r.hfull = r.l2sq + r.hdot;
    r.J = inner(u, power_nonlinearity(u, p));
    r.I = 0.5 * r.hfull;
    r.S = r.I - r.J / (p.value() + 2.0);
    r.K = 0.5 * (r.l2sq + r.dysq) - r.J / (p.value() + 2.0);
    r.E = 0.5 * r.hdot - r.J / (p.value() + 2.0);
    if (r.J > 0.0) r.A = weinstein_quotient(r, p);
    return r;
}

double weinstein_quotient(const FunctionalReport& r, const Exponent& p) {
    if (!(r.J > 0.0))
        throw std::invalid_argument("weinstein_quotient: J(u) <= 0, field inadmissible");
    double pv = p.value();
    return std::pow(r.dxsq, pv / 2.0) * std::pow(r.dysq, pv / 4.0) *
           std::pow(r.l2sq, (4.0 - pv) / 4.0) / r.J;
}

double weinstein_quotient(const RealField& u, const Exponent& p) {
    FunctionalReport r = eval_functionals(u, p);
    if (r.l2sq == 0.0) throw std::invalid_argument("weinstein_quotient: zero field");
    return weinstein_quotient(r, p);
}

ScalingTriple scale_normalize(const RealField& u, const Exponent& p,
                              const FunctionalReport& ground) {
    FunctionalReport r = eval_functionals(u, p);
    double pv = p.value();
    if (!(r.J > 0.0))
        throw std::invalid_argument("scale_normalize: J(u) <= 0");
    if (!(r.dysq > 0.0))
        throw std::invalid_argument("scale_normalize: vanishing |u_y| (mu undefined)");
    if (!(ground.dxsq > 0.0))
        throw std::invalid_argument("scale_normalize: ground report lacks dxsq");

    // closed forms: kappa^p = 2(p+2)/(4-p) |u|^2 / J(u),
    //               mu^{-2} = (4-p)/p |u_y|^2 / |u|^2,
    // then xi from the J target kappa^{p+2} J(u) / (mu xi) = (p+2)/p dxsq_phi.
    double kappa = std::pow(2.0 * (pv + 2.0) / (4.0 - pv) * r.l2sq / r.J, 1.0 / pv);
    double mu = std::sqrt(pv / (4.0 - pv) * r.l2sq / r.dysq);
    double xi = pv * std::pow(kappa, pv + 2.0) * r.J / ((pv + 2.0) * mu * ground.dxsq);

    const Grid2D& g = u.grid();
    std::vector<double> xs(g.nx), ys(g.ny);
    for (int i = 0; i < g.nx; ++i) xs[i] = xi * g.x(i);
    for (int m = 0; m < g.ny; ++m) ys[m] = mu * g.y(m);
    ScalingTriple t;
    t.kappa = kappa;
    t.xi = xi;
    t.mu = mu;
    t.omega = resample_scaled(u, xs, ys);
    t.omega *= kappa;
    FunctionalReport ro = eval_functionals(t.omega, p);
    t.K_omega = ro.K;
    t.dxsq_omega = ro.dxsq;
    return t;
}

std::string FunctionalReport::to_json() const {
    nlohmann::json j{
        {"p", p_str},       {"p_value", p_value}, {"l2sq", l2sq}, {"dxsq", dxsq},
        {"dysq", dysq},     {"hdot", hdot},       {"hfull", hfull}, {"J", J},
        {"I", I},           {"S", S},             {"K", K},       {"E", E},
    };
    if (A) j["A"] = *A;
    return j.dump(2);
}

} // namespace bozk
