#pragma once

#include "folia/mpoly.hpp"

namespace folia {

// Rational function as an unreduced numerator/denominator pair. Used for
// exact cross-chart checks where transition multipliers are not polynomial.
// Equality is decided by cross-multiplication, so no gcd machinery is needed.
class RatFun {
public:
    RatFun() = default;
    explicit RatFun(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.vars(), 1)) {}
    explicit RatFun(const Rational& c) = delete;  // needs a variable set
    RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw input_error("rational function with zero denominator");
    }

    static RatFun constant(const std::vector<std::string>& vars, const Rational& c) {
        return RatFun(MPoly::constant(vars, c));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.num_.is_zero()) throw input_error("division by zero rational function");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFun operator*(const Rational& c, const RatFun& a) {
        return RatFun(c * a.num_, a.den_);
    }
    friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_); }

    RatFun reciprocal() const {
        if (num_.is_zero()) throw input_error("reciprocal of zero rational function");
        return RatFun(den_, num_);
    }

    /// Partial derivative via the quotient rule.
    RatFun derivative(size_t i) const {
        return RatFun(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str() const {
        if (den_ == MPoly::constant(den_.vars(), 1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    MPoly num_, den_;
};

/// Directional derivative sum_i Z_i * dg/dx_i with polynomial field components.
inline RatFun field_apply(const std::vector<MPoly>& Z, const RatFun& g) {
    if (Z.size() != g.vars().size()) throw input_error("field component count mismatch");
    RatFun r = RatFun::constant(g.vars(), 0);
    for (size_t i = 0; i < Z.size(); ++i) r = r + RatFun(Z[i]) * g.derivative(i);
    return r;
}

}  // namespace folia
