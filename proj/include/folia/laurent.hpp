#pragma once

#include "folia/tseries.hpp"

#include <map>

namespace folia {

// Univariate Laurent expansion with finite principal part: coefficients are
// exact for exponents <= order, nothing is known above. Weighted forms
// (one-form coefficients, weight 1; quadratic-differential coefficients,
// weight 2) are the same data with a pole bound enforced by the consumers.
class Laurent {
public:
    Laurent() = default;
    Laurent(std::string var, int order) : var_(std::move(var)), order_(order) {}

    static Laurent zero(std::string var, int order) { return Laurent(std::move(var), order); }

    static Laurent monomial(std::string var, int exp, const Rational& c, int order) {
        Laurent l(std::move(var), order);
        if (c != 0 && exp <= order) l.coef_[exp] = c;
        return l;
    }

    static Laurent from_series(const TSeries& s) {
        if (s.nvars() != 1) throw input_error("Laurent: univariate series required");
        Laurent l(s.vars()[0], s.order());
        for (auto& [e, c] : s.terms()) l.coef_[e[0]] = c;
        return l;
    }

    const std::string& var() const { return var_; }
    int order() const { return order_; }
    bool exact() const { return order_ >= exact_threshold; }
    const std::map<int, Rational>& coefficients() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    Rational coeff(int k) const {
        auto it = coef_.find(k);
        return it == coef_.end() ? Rational(0) : it->second;
    }

    /// Lowest exponent with nonzero coefficient; order+1 when none is known.
    int valuation() const { return coef_.empty() ? order_ + 1 : coef_.begin()->first; }

    /// Order of the pole at 0 (0 for holomorphic expansions).
    int pole_order() const { return coef_.empty() ? 0 : std::max(0, -coef_.begin()->first); }

    bool holomorphic() const { return coef_.empty() || coef_.begin()->first >= 0; }

    void set_coeff(int k, const Rational& c) {
        if (c == 0)
            coef_.erase(k);
        else
            coef_[k] = c;
    }

    Laurent truncated(int n) const {
        Laurent r(var_, std::min(order_, n));
        for (auto& [k, c] : coef_)
            if (k <= r.order_) r.coef_[k] = c;
        return r;
    }

    /// Multiply by z^m.
    Laurent shifted(int m) const {
        Laurent r(var_, exact() ? exact_order : order_ + m);
        for (auto& [k, c] : coef_) r.coef_[k + m] = c;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        a.check(b);
        Laurent r(a.var_, std::min(a.order_, b.order_));
        for (auto& [k, c] : a.coef_)
            if (k <= r.order_) r.add(k, c);
        for (auto& [k, c] : b.coef_)
            if (k <= r.order_) r.add(k, c);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (Rational(-1) * b); }

    friend Laurent operator*(const Rational& q, Laurent l) {
        if (q == 0) return Laurent(l.var_, l.order_);
        for (auto& [k, c] : l.coef_) c *= q;
        return l;
    }
    friend Laurent operator*(Laurent l, const Rational& q) { return q * std::move(l); }
    friend Laurent operator-(Laurent l) { return Rational(-1) * std::move(l); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        a.check(b);
        long ord = std::min<long>(static_cast<long>(a.order_) + b.valuation(),
                                  static_cast<long>(b.order_) + a.valuation());
        ord = std::min<long>(ord, exact_order);
        Laurent r(a.var_, static_cast<int>(ord));
        for (auto& [ka, ca] : a.coef_)
            for (auto& [kb, cb] : b.coef_)
                if (ka + kb <= r.order_) r.add(ka + kb, ca * cb);
        return r;
    }

    /// d/dz.
    Laurent derivative() const {
        Laurent r(var_, exact() ? exact_order : order_ - 1);
        for (auto& [k, c] : coef_)
            if (k != 0) r.add(k - 1, c * k);
        return r;
    }

    Laurent reciprocal() const {
        if (coef_.empty()) throw inadmissible_error("Laurent reciprocal of zero expansion");
        int v = coef_.begin()->first;
        // strip z^v, invert the unit part, shift back
        int n = exact() ? TSeries::default_series_order + std::abs(v) : order_ - v;
        Laurent unit = shifted(-v).truncated(n);
        Laurent inv(var_, n);
        Rational lead = unit.coeff(0);
        inv.set_coeff(0, Rational(1) / lead);
        for (int k = 1; k <= n; ++k) {
            Rational s(0);
            for (auto& [j, c] : unit.coef_)
                if (j >= 1 && j <= k) s += c * inv.coeff(k - j);
            inv.set_coeff(k, -s / lead);
        }
        return inv.shifted(-v);
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.var_ == b.var_ && a.order_ == b.order_ && a.coef_ == b.coef_;
    }

    bool agrees_with(const Laurent& o, int n) const {
        if (var_ != o.var_) return false;
        if (order_ < n || o.order_ < n) return false;
        return (*this - o).truncated(n).is_zero();
    }

    std::string str() const {
        std::string body;
        if (coef_.empty()) {
            body = "0";
        } else {
            bool first = true;
            for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
                Rational c = it->second;
                bool neg = c < 0;
                if (first) {
                    if (neg) body += "-";
                    first = false;
                } else {
                    body += neg ? " - " : " + ";
                }
                Rational a = neg ? Rational(-c) : c;
                int k = it->first;
                std::string mono;
                if (k != 0) {
                    mono = var_;
                    if (k != 1) mono += "^" + std::to_string(k);
                }
                if (mono.empty())
                    body += rat_str(a);
                else if (a == 1)
                    body += mono;
                else
                    body += rat_str(a) + "*" + mono;
            }
        }
        if (!exact()) body += " + O(" + var_ + "^" + std::to_string(order_ + 1) + ")";
        return body;
    }

private:
    void check(const Laurent& o) const {
        if (var_ != o.var_) throw input_error("Laurent variable mismatch");
    }
    void add(int k, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = coef_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

    std::string var_ = "z";
    int order_ = TSeries::default_series_order;
    std::map<int, Rational> coef_;
};

// A one-form or quadratic-differential coefficient around a Fuchsian point:
// weight 1 stores exponents >= -1, weight 2 exponents >= -2.
struct LaurentObj {
    int weight = 1;  // 1 = one-form, 2 = quadratic differential
    Laurent series;

    LaurentObj(int w, Laurent s) : weight(w), series(std::move(s)) {
        if (weight != 1 && weight != 2) throw input_error("LaurentObj: weight must be 1 or 2");
        if (series.pole_order() > weight)
            throw inadmissible_error("non-Fuchsian: pole order exceeds weight " +
                                     std::to_string(weight));
    }
};

/// Residue of a weight-1 form: coefficient of z^-1.
inline Rational residue(const Laurent& alpha) {
    if (alpha.pole_order() > 1) throw inadmissible_error("non-Fuchsian: pole order >= 2");
    return alpha.coeff(-1);
}

/// Quadratic residue of a weight-2 form: coefficient of z^-2.
inline Rational quadratic_residue(const Laurent& beta) {
    if (beta.pole_order() > 2) throw inadmissible_error("non-Fuchsian: pole order >= 3");
    return beta.coeff(-2);
}

inline Rational residue(const LaurentObj& o) {
    if (o.weight != 1) throw input_error("residue: weight-1 form required");
    return residue(o.series);
}

inline Rational quadratic_residue(const LaurentObj& o) {
    if (o.weight != 2) throw input_error("quadratic_residue: weight-2 form required");
    return quadratic_residue(o.series);
}

}  // namespace folia
