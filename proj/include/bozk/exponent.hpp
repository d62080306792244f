#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace bozk {

// Nonlinearity exponent p = k/l in lowest terms with l odd and 0 < p < 4.
// The odd denominator keeps u^{p+1} and u^{p+2} real-valued for negative u
// (odd real roots), which is what makes the functionals well-defined on
// sign-changing fields.
class Exponent {
public:
    Exponent(long num, long den) {
        if (den == 0) throw std::invalid_argument("exponent: zero denominator");
        if (num <= 0 || den < 0) throw std::invalid_argument("exponent: p must be positive");
        long g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
        if (den_ % 2 == 0)
            throw std::invalid_argument("exponent: even denominator (odd l required)");
        if (4 * den_ <= num_)
            throw std::invalid_argument("exponent: p outside (0,4)");
    }

    static Exponent parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                if (text.find('.') != std::string::npos)
                    throw std::invalid_argument("decimal");
                return Exponent(std::stol(text), 1);
            }
            return Exponent(std::stol(text.substr(0, slash)),
                            std::stol(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("exponent: expected fraction \"k/l\" with odd l, got \"" + text + "\"");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("exponent: out of range \"" + text + "\"");
        }
    }

    long num() const { return num_; }
    long den() const { return den_; }
    double value() const { return double(num_) / double(den_); }
    bool is_integer() const { return den_ == 1; }

    // exponent of the nonlinearity u^{p+1} as a fraction
    long num_p1() const { return num_ + den_; }
    // exponent of the density u^{p+2} entering J
    long num_p2() const { return num_ + 2 * den_; }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    bool operator==(const Exponent& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    long num_, den_;
};

} // namespace bozk
