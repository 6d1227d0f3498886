#pragma once

#include "folia/mpoly.hpp"

#include <limits>

namespace folia {

// Order value meaning "exact, no truncation". Anything at or above
// `exact_threshold` is treated as exact when combining orders.
inline constexpr int exact_order = std::numeric_limits<int>::max() / 4;
inline constexpr int exact_threshold = exact_order / 2;

// Truncated multivariate power series: terms of total degree <= order are
// exact, nothing is known beyond. Every operation recomputes the honest
// order of its result; callers can always read it back.
class TSeries {
public:
    TSeries() = default;
    TSeries(std::vector<std::string> vars, int order) : vars_(std::move(vars)), order_(order) {}

    static TSeries zero(std::vector<std::string> vars, int order) {
        return TSeries(std::move(vars), order);
    }

    static TSeries constant(std::vector<std::string> vars, const Rational& c, int order) {
        TSeries s(std::move(vars), order);
        if (c != 0) s.terms_[Expo(s.vars_.size(), 0)] = c;
        return s;
    }

    static TSeries variable(std::vector<std::string> vars, const std::string& name, int order) {
        TSeries s(std::move(vars), order);
        Expo e(s.vars_.size(), 0);
        auto it = std::find(s.vars_.begin(), s.vars_.end(), name);
        if (it == s.vars_.end()) throw input_error("unknown variable '" + name + "'");
        e[static_cast<size_t>(it - s.vars_.begin())] = 1;
        if (s.order_ >= 1) s.terms_[e] = 1;
        return s;
    }

    static TSeries from_poly(const MPoly& p, int order = exact_order) {
        TSeries s(p.vars(), order);
        for (auto& [e, c] : p.terms())
            if (total_degree(e) <= order) s.terms_[e] = c;
        return s;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    int order() const { return order_; }
    bool exact() const { return order_ >= exact_threshold; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nvars() const { return vars_.size(); }

    Rational coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Expo(vars_.size(), 0)); }

    /// Exact and degree zero, i.e. a constant polynomial.
    bool is_constant_poly() const {
        return exact() && (terms_.empty() || total_degree(terms_.rbegin()->first) == 0);
    }

    /// Minimal total degree of the known part; order+1 when nothing is known
    /// to be nonzero (a "zero so far" series).
    int valuation() const {
        if (terms_.empty()) return order_ >= exact_threshold ? exact_order : order_ + 1;
        return total_degree(terms_.begin()->first);
    }

    TSeries truncated(int n) const {
        TSeries r(vars_, std::min(order_, n));
        for (auto& [e, c] : terms_)
            if (total_degree(e) <= r.order_) r.terms_[e] = c;
        return r;
    }

    void set_coeff(const Expo& e, const Rational& c) {
        if (c == 0)
            terms_.erase(e);
        else
            terms_[e] = c;
    }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        a.check_vars(b);
        TSeries r(a.vars_, std::min(a.order_, b.order_));
        for (auto& [e, c] : a.terms_)
            if (total_degree(e) <= r.order_) r.add_term(e, c);
        for (auto& [e, c] : b.terms_)
            if (total_degree(e) <= r.order_) r.add_term(e, c);
        return r;
    }
    friend TSeries operator-(const TSeries& a, const TSeries& b) { return a + (Rational(-1) * b); }

    friend TSeries operator*(const Rational& c, const TSeries& s) {
        TSeries r(s.vars_, s.order_);
        if (c == 0) return r;
        r.terms_ = s.terms_;
        for (auto& [e, v] : r.terms_) v *= c;
        return r;
    }
    friend TSeries operator*(const TSeries& s, const Rational& c) { return c * s; }
    friend TSeries operator-(const TSeries& s) { return Rational(-1) * s; }

    // Known through min(Na + vb, Nb + va): the first unknown coefficient of one
    // factor meets the valuation of the other.
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        a.check_vars(b);
        long na = a.order_, nb = b.order_;
        long va = a.valuation(), vb = b.valuation();
        long ord = std::min(na + vb, nb + va);
        ord = std::min<long>(ord, exact_order);
        TSeries r(a.vars_, static_cast<int>(ord));
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Expo e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                if (total_degree(e) <= r.order_) r.add_term(e, ca * cb);
            }
        return r;
    }

    friend TSeries operator*(const MPoly& p, const TSeries& s) { return from_poly(p) * s; }
    friend TSeries operator*(const TSeries& s, const MPoly& p) { return from_poly(p) * s; }

    TSeries pow(int e) const {
        if (e < 0) throw input_error("negative series power");
        TSeries r = constant(vars_, 1, exact_order);
        TSeries b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    TSeries derivative(size_t i) const {
        TSeries r(vars_, exact() ? exact_order : order_ - 1);
        for (auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Expo d = e;
            d[i] -= 1;
            r.add_term(d, c * e[i]);
        }
        return r;
    }

    TSeries derivative(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw input_error("unknown variable '" + name + "'");
        return derivative(static_cast<size_t>(it - vars_.begin()));
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    TSeries reciprocal() const {
        Rational c0 = constant_term();
        if (c0 == 0) throw inadmissible_error("series reciprocal: zero constant term");
        if (is_constant_poly()) return constant(vars_, Rational(1) / c0, exact_order);
        int n = exact() ? default_series_order : order_;
        // u = 1 - f/c0 has positive valuation; 1/f = (1/c0) * sum u^k
        TSeries u = constant(vars_, 1, n) - Rational(1) / c0 * truncated(n);
        TSeries acc = constant(vars_, 1, n), upow = constant(vars_, 1, n);
        int vu = u.valuation();
        if (vu <= 0) vu = 1;
        for (int k = 1; k * vu <= n; ++k) {
            upow = (upow * u).truncated(n);
            acc = acc + upow;
        }
        TSeries r = Rational(1) / c0 * acc;
        r.order_ = exact() ? default_series_order : order_;
        return r;
    }

    friend bool operator==(const TSeries& a, const TSeries& b) {
        return a.vars_ == b.vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    /// Equality of coefficients through total degree n.
    bool agrees_with(const TSeries& o, int n) const {
        if (vars_ != o.vars_) return false;
        if (order_ < n || o.order_ < n) return false;
        return (*this - o).truncated(n).is_zero();
    }

    std::string str() const {
        std::string body = detail::render_terms(terms_, vars_);
        if (exact()) return body;
        std::string ovar = vars_.size() == 1 ? vars_[0] : "deg";
        return body + " + O(" + ovar + "^" + std::to_string(order_ + 1) + ")";
    }

    void add_term(const Expo& e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static constexpr int default_series_order = 12;

private:
    void check_vars(const TSeries& o) const {
        if (vars_ != o.vars_) throw input_error("variable-set mismatch");
    }

    std::vector<std::string> vars_;
    int order_ = default_series_order;
    TermMap terms_;
};

/// f(g) for univariate f and multivariate g with g(0) = 0.
inline TSeries series_compose(const TSeries& f, const TSeries& g) {
    if (f.nvars() != 1) throw input_error("series_compose: outer series must be univariate");
    if (g.constant_term() != 0)
        throw input_error("series_compose: inner series must have zero constant term");
    int vg = std::max(1, std::min(g.valuation(), 8));
    long nf = f.order(), ng = g.order();
    long ord = std::min(ng, vg * (nf + 1) - 1);
    ord = std::min<long>(ord, exact_order);
    int n = static_cast<int>(ord);
    TSeries acc = TSeries::zero(g.vars(), n);
    TSeries gpow = TSeries::constant(g.vars(), 1, exact_order);
    int kmax = std::min<long>(f.exact() ? f.terms().empty() ? 0 : total_degree(f.terms().rbegin()->first)
                                        : f.order(),
                              n / vg + 1);
    for (int k = 0; k <= kmax; ++k) {
        Rational a = f.coeff(Expo{k});
        if (a != 0) acc = acc + a * gpow.truncated(n);
        if (k < kmax) gpow = (gpow * g).truncated(n);
    }
    TSeries r = acc.truncated(n);
    return r;
}

/// Directional derivative sum_i Z_i * df/dx_i with explicit order bookkeeping.
inline TSeries series_field_derive(const std::vector<MPoly>& Z, const TSeries& f) {
    if (Z.size() != f.nvars()) throw input_error("field component count mismatch");
    TSeries r = TSeries::zero(f.vars(), exact_order);
    bool any = false;
    for (size_t i = 0; i < Z.size(); ++i) {
        if (Z[i].is_zero()) continue;
        r = any ? r + TSeries::from_poly(Z[i]) * f.derivative(i)
                : TSeries::from_poly(Z[i]) * f.derivative(i);
        any = true;
    }
    if (!any) return TSeries::zero(f.vars(), f.exact() ? exact_order : f.order() - 1);
    return r;
}

inline TSeries series_divide(const TSeries& num, const TSeries& den) {
    return num * den.reciprocal();
}

}  // namespace folia
