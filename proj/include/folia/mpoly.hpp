#pragma once

#include "folia/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace folia {

using Expo = std::vector<int>;

inline int total_degree(const Expo& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

// Graded lexicographic order: total degree first, then lex.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

using TermMap = std::map<Expo, Rational, GrlexLess>;

namespace detail {

inline std::string render_terms(const TermMap& terms, const std::vector<std::string>& vars) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    // leading (highest) term first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Rational c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Rational a = neg ? Rational(-c) : c;
        std::string mono;
        for (size_t i = 0; i < vars.size(); ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            out += rat_str(a);
        else if (a == 1)
            out += mono;
        else
            out += rat_str(a) + "*" + mono;
    }
    return out;
}

}  // namespace detail

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in graded-lex order and zero coefficients are never stored,
// so equal polynomials print identically.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly zero(std::vector<std::string> vars) { return MPoly(std::move(vars)); }

    static MPoly constant(std::vector<std::string> vars, const Rational& c) {
        MPoly p(std::move(vars));
        if (c != 0) p.terms_[Expo(p.vars_.size(), 0)] = c;
        return p;
    }

    static MPoly variable(std::vector<std::string> vars, const std::string& name) {
        MPoly p(std::move(vars));
        Expo e(p.vars_.size(), 0);
        auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
        if (it == p.vars_.end()) throw input_error("unknown variable '" + name + "'");
        e[static_cast<size_t>(it - p.vars_.begin())] = 1;
        p.terms_[e] = 1;
        return p;
    }

    static MPoly monomial(std::vector<std::string> vars, Expo e, const Rational& c) {
        MPoly p(std::move(vars));
        if (e.size() != p.vars_.size()) throw input_error("exponent vector length mismatch");
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nvars() const { return vars_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational constant_term() const {
        Expo z(vars_.size(), 0);
        auto it = terms_.find(z);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {
        return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
    }

    /// Minimal total degree over stored terms; -1 for the zero polynomial.
    int valuation() const {
        return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
    }

    /// Degree if homogeneous, nullopt otherwise. Zero counts as homogeneous.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return 0;
        int d = total_degree(terms_.begin()->first);
        for (auto& [e, c] : terms_)
            if (total_degree(e) != d) return std::nullopt;
        return d;
    }

    MPoly& operator+=(const MPoly& o) {
        check_vars(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check_vars(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_vars(b);
        MPoly r(a.vars_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Expo e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend MPoly operator*(const Rational& c, MPoly p) {
        if (c == 0) return MPoly(p.vars_);
        for (auto& [e, v] : p.terms_) v *= c;
        return p;
    }
    friend MPoly operator*(MPoly p, const Rational& c) { return c * std::move(p); }
    friend MPoly operator-(MPoly p) { return Rational(-1) * std::move(p); }

    MPoly pow(int e) const {
        if (e < 0) throw input_error("negative polynomial power");
        MPoly r = constant(vars_, 1);
        MPoly b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly derivative(size_t i) const {
        MPoly r(vars_);
        for (auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Expo d = e;
            d[i] -= 1;
            r.add_term(d, c * e[i]);
        }
        return r;
    }

    MPoly derivative(const std::string& name) const { return derivative(var_index(name)); }

    size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw input_error("unknown variable '" + name + "'");
        return static_cast<size_t>(it - vars_.begin());
    }

    Rational eval(const std::vector<Rational>& point) const {
        if (point.size() != vars_.size()) throw input_error("evaluation point arity mismatch");
        Rational acc(0);
        for (auto& [e, c] : terms_) {
            Rational t = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= rat_pow(point[i], e[i]);
            acc += t;
        }
        return acc;
    }

    // Evaluation into any commutative ring type; `lift` embeds Rational into T.
    template <class T, class Lift>
    T eval_at(const std::vector<T>& point, Lift lift) const {
        if (point.size() != vars_.size()) throw input_error("evaluation point arity mismatch");
        T acc = lift(Rational(0));
        for (auto& [e, c] : terms_) {
            T t = lift(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    /// Re-express over a superset variable list (matched by name).
    MPoly with_vars(const std::vector<std::string>& newvars) const {
        std::vector<size_t> where(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(newvars.begin(), newvars.end(), vars_[i]);
            if (it == newvars.end())
                throw input_error("with_vars: missing variable '" + vars_[i] + "'");
            where[i] = static_cast<size_t>(it - newvars.begin());
        }
        MPoly r(newvars);
        for (auto& [e, c] : terms_) {
            Expo d(newvars.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) d[where[i]] = e[i];
            r.add_term(d, c);
        }
        return r;
    }

    /// Substitute a polynomial for one variable (over the same variable list).
    MPoly substitute(const std::string& name, const MPoly& value) const {
        size_t k = var_index(name);
        if (value.vars() != vars_) throw input_error("substitute: variable-set mismatch");
        MPoly r(vars_);
        for (auto& [e, c] : terms_) {
            Expo rest = e;
            rest[k] = 0;
            MPoly t = monomial(vars_, rest, c);
            for (int i = 0; i < e[k]; ++i) t = t * value;
            r += t;
        }
        return r;
    }

    /// Set variable i to 1 and drop it from the variable list.
    MPoly restrict_one(size_t i) const {
        std::vector<std::string> nv = vars_;
        nv.erase(nv.begin() + static_cast<long>(i));
        MPoly r(nv);
        for (auto& [e, c] : terms_) {
            Expo d = e;
            d.erase(d.begin() + static_cast<long>(i));
            r.add_term(d, c);
        }
        return r;
    }

    /// Permute variables: result(x_{perm[0]},...,) with same var names. perm maps
    /// position in `this` to position in the result.
    MPoly permute_vars(const std::vector<size_t>& perm) const {
        MPoly r(vars_);
        for (auto& [e, c] : terms_) {
            Expo d(e.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) d[perm[i]] = e[i];
            r.add_term(d, c);
        }
        return r;
    }

    /// Exact division; nullopt when the divisor does not divide.
    std::optional<MPoly> divide_exact(const MPoly& divisor) const {
        check_vars(divisor);
        if (divisor.is_zero()) throw input_error("division by zero polynomial");
        MPoly rem = *this, quot(vars_);
        const auto& dl = *divisor.terms_.rbegin();  // leading term of divisor
        while (!rem.is_zero()) {
            const auto& rl = *rem.terms_.rbegin();
            Expo q = rl.first;
            bool ok = true;
            for (size_t i = 0; i < q.size(); ++i) {
                q[i] -= dl.first[i];
                if (q[i] < 0) { ok = false; break; }
            }
            if (!ok) return std::nullopt;
            Rational c = rl.second / dl.second;
            MPoly t = monomial(vars_, q, c);
            quot += t;
            rem -= t * divisor;
        }
        return quot;
    }

    std::string str() const { return detail::render_terms(terms_, vars_); }

    void add_term(const Expo& e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    void check_vars(const MPoly& o) const {
        if (vars_ != o.vars_) throw input_error("variable-set mismatch");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Directional derivative sum_i Z_i * df/dx_i for polynomial data.
inline MPoly field_apply(const std::vector<MPoly>& Z, const MPoly& f) {
    if (Z.size() != f.nvars()) throw input_error("field component count mismatch");
    MPoly r(f.vars());
    for (size_t i = 0; i < Z.size(); ++i) r += Z[i] * f.derivative(i);
    return r;
}

}  // namespace folia
