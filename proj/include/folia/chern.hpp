#pragma once

#include "folia/expr.hpp"
#include "folia/symfun.hpp"

#include <memory>

namespace folia {

class RingElement;

// Finitely presented graded-commutative cohomology ring with an explicit
// monomial basis per degree, a multiplication table, and a fundamental-class
// functional on the top degree. Degrees are the usual even topological ones.
//
// Relations are rewrite rules "monomial -> lower combination"; the basis is
// the set of monomials not divisible by any rule left-hand side. This keeps
// normal forms and the top-degree pairing exact and deterministic.
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
public:
    struct Rule {
        Expo lhs;
        std::vector<std::pair<Expo, Rational>> rhs;
    };

    static std::shared_ptr<const RingPresentation> create(
        std::string description, std::vector<std::string> gen_names, std::vector<int> gen_degrees,
        int top_degree, std::vector<Rule> rules, std::map<Expo, Rational, GrlexLess> integral,
        std::shared_ptr<const RingPresentation> bundle_base = nullptr) {
        auto p = std::shared_ptr<RingPresentation>(new RingPresentation());
        p->description_ = std::move(description);
        p->gen_names_ = std::move(gen_names);
        p->gen_degrees_ = std::move(gen_degrees);
        p->top_ = top_degree;
        p->rules_ = std::move(rules);
        p->bundle_base_ = std::move(bundle_base);
        p->build();
        p->set_integral(std::move(integral));
        p->verify();
        return p;
    }

    const std::string& description() const { return description_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }
    const std::vector<int>& generator_degrees() const { return gen_degrees_; }
    int top_degree() const { return top_; }
    int dimension() const { return top_ / 2; }
    size_t basis_size() const { return basis_.size(); }
    const Expo& basis_monomial(size_t i) const { return basis_[i]; }
    int basis_degree(size_t i) const { return weighted_degree(basis_[i]); }

    int weighted_degree(const Expo& e) const {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += e[i] * gen_degrees_[i];
        return d;
    }

    std::string basis_name(size_t i) const {
        const Expo& e = basis_[i];
        std::string s;
        for (size_t g = 0; g < e.size(); ++g) {
            if (e[g] == 0) continue;
            if (!s.empty()) s += "*";
            s += gen_names_[g];
            if (e[g] != 1) s += "^" + std::to_string(e[g]);
        }
        return s.empty() ? "1" : s;
    }

    std::optional<size_t> basis_index(const Expo& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Normal form of an arbitrary generator monomial as basis coordinates.
    std::map<size_t, Rational> normalize(const Expo& mono) const {
        std::map<size_t, Rational> out;
        normalize_into(mono, Rational(1), out, 0);
        return out;
    }

    const std::map<size_t, Rational>& product(size_t i, size_t j) const {
        return table_[i * basis_.size() + j];
    }

    Rational integral_value(size_t basis_idx) const {
        auto it = integral_.find(basis_idx);
        return it == integral_.end() ? Rational(0) : it->second;
    }

    const std::map<size_t, Rational>& integral_support() const { return integral_; }

    // proj_bundle bookkeeping (see proj_bundle below)
    std::shared_ptr<const RingPresentation> bundle_base() const { return bundle_base_; }

private:
    RingPresentation() = default;

    void build() {
        if (gen_names_.size() != gen_degrees_.size())
            throw input_error("ring: generator name/degree count mismatch");
        for (int d : gen_degrees_)
            if (d <= 0 || d % 2 != 0)
                throw input_error("ring: generator degrees must be positive even integers");
        for (auto& r : rules_) {
            int dl = weighted_degree(r.lhs);
            for (auto& [m, c] : r.rhs)
                if (weighted_degree(m) != dl)
                    throw input_error("ring: relation is not homogeneous");
        }
        // enumerate normal monomials of degree <= top
        Expo cur(gen_names_.size(), 0);
        enumerate(cur, 0, 0);
        std::sort(basis_.begin(), basis_.end(), [this](const Expo& a, const Expo& b) {
            int da = weighted_degree(a), db = weighted_degree(b);
            if (da != db) return da < db;
            return GrlexLess{}(a, b);
        });
        for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
        // multiplication table
        table_.resize(basis_.size() * basis_.size());
        for (size_t i = 0; i < basis_.size(); ++i)
            for (size_t j = 0; j <= i; ++j) {
                Expo m = basis_[i];
                for (size_t g = 0; g < m.size(); ++g) m[g] += basis_[j][g];
                auto prod = normalize(m);
                table_[i * basis_.size() + j] = prod;
                table_[j * basis_.size() + i] = std::move(prod);
            }
    }

    void enumerate(Expo& cur, size_t gen, int degree) {
        if (degree > top_) return;
        if (gen == gen_names_.size()) {
            if (!divisible_by_rule(cur)) basis_.push_back(cur);
            return;
        }
        for (int k = 0;; ++k) {
            cur[gen] = k;
            int d = degree + k * gen_degrees_[gen];
            if (d > top_) break;
            enumerate(cur, gen + 1, d);
        }
        cur[gen] = 0;
    }

    bool divisible_by_rule(const Expo& m) const {
        for (auto& r : rules_) {
            bool div = true;
            for (size_t g = 0; g < m.size(); ++g)
                if (m[g] < r.lhs[g]) { div = false; break; }
            if (div) return true;
        }
        return false;
    }

    void normalize_into(const Expo& mono, const Rational& scale, std::map<size_t, Rational>& out,
                        int depth) const {
        if (depth > 256) throw input_error("ring: relation rewriting does not terminate");
        if (weighted_degree(mono) > top_) return;
        auto it = index_.find(mono);
        if (it != index_.end()) {
            out[it->second] += scale;
            if (out[it->second] == 0) out.erase(it->second);
            return;
        }
        for (auto& r : rules_) {
            bool div = true;
            Expo rest = mono;
            for (size_t g = 0; g < mono.size(); ++g) {
                rest[g] -= r.lhs[g];
                if (rest[g] < 0) { div = false; break; }
            }
            if (!div) continue;
            for (auto& [m, c] : r.rhs) {
                Expo next = rest;
                for (size_t g = 0; g < next.size(); ++g) next[g] += m[g];
                normalize_into(next, scale * c, out, depth + 1);
            }
            return;
        }
        throw input_error("ring: monomial escapes the declared basis");
    }

    void set_integral(std::map<Expo, Rational, GrlexLess> integral) {
        for (auto& [m, v] : integral) {
            auto idx = basis_index(m);
            if (!idx) throw input_error("ring: integral monomial is not a basis element");
            if (weighted_degree(m) != top_)
                throw input_error("ring: integral monomial is not of top degree");
            if (v == 0) throw input_error("ring: integral value must be nonzero");
            integral_[*idx] = v;
        }
    }

    void verify() const {
        // associativity (and hence consistency of the rewrite system on the basis)
        for (size_t i = 0; i < basis_.size(); ++i)
            for (size_t j = 0; j < basis_.size(); ++j)
                for (size_t k = 0; k < basis_.size(); ++k) {
                    std::map<size_t, Rational> lhs, rhs;
                    for (auto& [m, c] : product(i, j))
                        for (auto& [m2, c2] : product(m, k)) {
                            lhs[m2] += c * c2;
                            if (lhs[m2] == 0) lhs.erase(m2);
                        }
                    for (auto& [m, c] : product(j, k))
                        for (auto& [m2, c2] : product(i, m)) {
                            rhs[m2] += c * c2;
                            if (rhs[m2] == 0) rhs.erase(m2);
                        }
                    if (lhs != rhs) throw input_error("ring: multiplication is not associative");
                }
    }

    std::string description_;
    std::vector<std::string> gen_names_;
    std::vector<int> gen_degrees_;
    int top_ = 0;
    std::vector<Rule> rules_;
    std::vector<Expo> basis_;
    std::map<Expo, size_t, GrlexLess> index_;
    std::vector<std::map<size_t, Rational>> table_;
    std::map<size_t, Rational> integral_;
    std::shared_ptr<const RingPresentation> bundle_base_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

// Element of a presented ring, stored as exact basis coordinates.
class RingElement {
public:
    RingElement() = default;
    explicit RingElement(RingPtr ring) : ring_(std::move(ring)) {}
    RingElement(RingPtr ring, std::map<size_t, Rational> coords)
        : ring_(std::move(ring)), coords_(std::move(coords)) {
        for (auto it = coords_.begin(); it != coords_.end();)
            it = it->second == 0 ? coords_.erase(it) : std::next(it);
    }

    static RingElement one(const RingPtr& ring) {
        return scalar(ring, Rational(1));
    }

    static RingElement scalar(const RingPtr& ring, const Rational& c) {
        RingElement e(ring);
        auto idx = ring->basis_index(Expo(ring->generator_names().size(), 0));
        if (!idx) throw input_error("ring has no unit basis monomial");
        if (c != 0) e.coords_[*idx] = c;
        return e;
    }

    static RingElement generator(const RingPtr& ring, const std::string& name) {
        auto& names = ring->generator_names();
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw input_error("unknown ring generator '" + name + "'");
        Expo e(names.size(), 0);
        e[static_cast<size_t>(it - names.begin())] = 1;
        auto idx = ring->basis_index(e);
        if (!idx) throw input_error("generator '" + name + "' is not a basis monomial");
        RingElement el(ring);
        el.coords_[*idx] = 1;
        return el;
    }

    static RingElement from_poly(const RingPtr& ring, const MPoly& p) {
        if (p.vars() != ring->generator_names())
            throw input_error("element polynomial must use the ring generators");
        RingElement e(ring);
        for (auto& [m, c] : p.terms())
            for (auto& [idx, w] : ring->normalize(m)) e.add(idx, c * w);
        return e;
    }

    static RingElement parse(const RingPtr& ring, const std::string& text) {
        return from_poly(ring, parse_expression(text, ring->generator_names()));
    }

    const RingPtr& ring() const { return ring_; }
    const std::map<size_t, Rational>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    Rational coord(size_t i) const {
        auto it = coords_.find(i);
        return it == coords_.end() ? Rational(0) : it->second;
    }

    Rational scalar_part() const {
        auto idx = ring_->basis_index(Expo(ring_->generator_names().size(), 0));
        return coord(*idx);
    }

    /// The degree-d component.
    RingElement component(int degree) const {
        RingElement e(ring_);
        for (auto& [i, c] : coords_)
            if (ring_->basis_degree(i) == degree) e.coords_[i] = c;
        return e;
    }

    int max_degree() const {
        int d = 0;
        for (auto& [i, c] : coords_) d = std::max(d, ring_->basis_degree(i));
        return d;
    }

    friend RingElement operator+(RingElement a, const RingElement& b) {
        a.check(b);
        for (auto& [i, c] : b.coords_) a.add(i, c);
        return a;
    }
    friend RingElement operator-(RingElement a, const RingElement& b) {
        a.check(b);
        for (auto& [i, c] : b.coords_) a.add(i, -c);
        return a;
    }
    friend RingElement operator*(const Rational& q, RingElement e) {
        if (q == 0) return RingElement(e.ring_);
        for (auto& [i, c] : e.coords_) c *= q;
        return e;
    }
    friend RingElement operator*(RingElement e, const Rational& q) { return q * std::move(e); }
    friend RingElement operator-(RingElement e) { return Rational(-1) * std::move(e); }

    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        a.check(b);
        RingElement r(a.ring_);
        for (auto& [i, ci] : a.coords_)
            for (auto& [j, cj] : b.coords_)
                for (auto& [k, w] : a.ring_->product(i, j)) r.add(k, ci * cj * w);
        return r;
    }

    RingElement pow(int e) const {
        if (e < 0) throw input_error("negative ring power");
        RingElement r = one(ring_), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_ == b.ring_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    std::string str() const {
        if (coords_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [i, c] : coords_) {
            bool neg = c < 0;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            Rational a = neg ? Rational(-c) : c;
            std::string name = ring_->basis_name(i);
            if (name == "1")
                out += rat_str(a);
            else if (a == 1)
                out += name;
            else
                out += rat_str(a) + "*" + name;
        }
        return out;
    }

    void add(size_t i, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = coords_.emplace(i, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coords_.erase(it);
        }
    }

private:
    void check(const RingElement& o) const {
        if (ring_ != o.ring_) throw input_error("ring element presentation mismatch");
    }

    RingPtr ring_;
    std::map<size_t, Rational> coords_;
};

/// Evaluation against the fundamental class (top-degree pairing).
inline Rational integral_of(const RingElement& e) {
    Rational acc(0);
    for (auto& [i, c] : e.coords()) acc += c * e.ring()->integral_value(i);
    return acc;
}

// ---- built-in model manifolds ----

inline RingPtr projective_space_ring(int n) {
    if (n < 1) throw input_error("projective_space: dimension must be positive");
    RingPresentation::Rule rule;
    rule.lhs = Expo{n + 1};
    std::map<Expo, Rational, GrlexLess> integral;
    integral[Expo{n}] = 1;
    return RingPresentation::create("P^" + std::to_string(n), {"h"}, {2}, 2 * n, {rule},
                                    std::move(integral));
}

inline RingPtr curve_ring(int genus) {
    if (genus < 0) throw input_error("curve: genus must be nonnegative");
    RingPresentation::Rule rule;
    rule.lhs = Expo{2};
    std::map<Expo, Rational, GrlexLess> integral;
    integral[Expo{1}] = 1;
    return RingPresentation::create("curve of genus " + std::to_string(genus), {"e"}, {2}, 2,
                                    {rule}, std::move(integral));
}

// Z[h,v]/(h^2, v^2) with int h.v = 1; h is dual to a horizontal curve C x {*},
// v to a vertical one {*} x P^1.
inline RingPtr curve_times_p1_ring(int genus) {
    if (genus < 0) throw input_error("curve_times_p1: genus must be nonnegative");
    RingPresentation::Rule rh{Expo{2, 0}, {}};
    RingPresentation::Rule rv{Expo{0, 2}, {}};
    std::map<Expo, Rational, GrlexLess> integral;
    integral[Expo{1, 1}] = 1;  // declared orientation convention
    return RingPresentation::create("curve(genus " + std::to_string(genus) + ") x P^1",
                                    {"h", "v"}, {2, 2}, 4, {rh, rv}, std::move(integral));
}

// A built-in model manifold: its ring, the total Chern class of TM, and the
// orientation convention every report echoes.
struct ModelManifold {
    RingPtr ring;
    RingElement cTM;
    std::string convention;
};

inline ModelManifold model_projective_space(int n) {
    ModelManifold m;
    m.ring = projective_space_ring(n);
    RingElement h = RingElement::generator(m.ring, "h");
    m.cTM = (RingElement::one(m.ring) + h).pow(n + 1);
    m.convention = "int h^" + std::to_string(n) + " = 1 on P^" + std::to_string(n);
    return m;
}

inline ModelManifold model_curve(int genus) {
    ModelManifold m;
    m.ring = curve_ring(genus);
    RingElement e = RingElement::generator(m.ring, "e");
    m.cTM = RingElement::one(m.ring) + Rational(2 - 2 * genus) * e;
    m.convention = "int e = 1 on the curve";
    return m;
}

inline ModelManifold model_curve_times_p1(int genus) {
    ModelManifold m;
    m.ring = curve_times_p1_ring(genus);
    RingElement h = RingElement::generator(m.ring, "h");
    RingElement v = RingElement::generator(m.ring, "v");
    m.cTM = (RingElement::one(m.ring) + Rational(2) * h) *
            (RingElement::one(m.ring) + Rational(2 - 2 * genus) * v);
    m.convention = "int h.v = 1 on C x P^1 (h horizontal dual, v vertical dual)";
    return m;
}

// ---- total Chern class arithmetic ----

/// Inverse of a total class 1 + a_1 + a_2 + ..., truncated at the top degree.
inline RingElement total_class_inverse(const RingElement& c) {
    if (c.scalar_part() != 1) throw input_error("total class must have degree-0 term 1");
    RingElement pos = c - RingElement::one(c.ring());
    RingElement acc = RingElement::one(c.ring());
    RingElement pw = RingElement::one(c.ring());
    int n = c.ring()->dimension();
    for (int k = 1; k <= n; ++k) {
        pw = pw * (-pos);
        acc = acc + pw;
    }
    return acc;
}

/// c(A - B) = c(A) / c(B) for total Chern classes.
inline RingElement chern_difference(const RingElement& cA, const RingElement& cB) {
    if (cA.scalar_part() != 1 || cB.scalar_part() != 1)
        throw input_error("chern_difference: degree-0 terms must equal 1");
    return cA * total_class_inverse(cB);
}

// A virtual bundle, stored by its total Chern class.
struct VirtualBundle {
    RingElement total;
    explicit VirtualBundle(RingElement t) : total(std::move(t)) {
        if (total.scalar_part() != 1)
            throw input_error("VirtualBundle: degree-0 component must equal 1");
    }
    RingElement chern(int i) const { return total.component(2 * i); }
};

// ---- projective bundle of a rank-2 (virtual) bundle ----

// New ring with one extra degree-2 class `zeta` subject to
// zeta^2 + c1 zeta + c2 = 0, fundamental class extended so that the
// fiber integral of zeta is 1.
inline RingPtr proj_bundle(const RingPtr& base, const RingElement& c1V, const RingElement& c2V) {
    if (c1V.ring() != base || c2V.ring() != base)
        throw input_error("proj_bundle: classes must live on the base");
    if (!c1V.is_zero() && c1V.max_degree() > 2)
        throw input_error("proj_bundle: c1 must have degree 2");
    if (!c2V.is_zero() && c2V.max_degree() > 4)
        throw input_error("proj_bundle: c2 must have degree 4");
    std::vector<std::string> names = base->generator_names();
    names.push_back("zeta");
    std::vector<int> degrees = base->generator_degrees();
    degrees.push_back(2);

    auto lift = [&](const Expo& e) {
        Expo f = e;
        f.push_back(0);
        return f;
    };
    std::vector<RingPresentation::Rule> rules;

    // zeta^2 -> -c1 zeta - c2
    RingPresentation::Rule zr;
    zr.lhs = Expo(names.size(), 0);
    zr.lhs.back() = 2;
    for (auto& [i, c] : c1V.coords()) {
        Expo m = lift(base->basis_monomial(i));
        m.back() = 1;
        zr.rhs.emplace_back(m, -c);
    }
    for (auto& [i, c] : c2V.coords()) zr.rhs.emplace_back(lift(base->basis_monomial(i)), -c);
    rules.push_back(std::move(zr));

    // The base rules are reconstructed from its normal forms: every minimal
    // non-normal monomial is (basis monomial) * (generator), so rewriting any
    // base monomial by these rules reproduces the base normalization.
    std::map<Expo, std::map<size_t, Rational>, GrlexLess> needed;
    for (size_t i = 0; i < base->basis_size(); ++i)
        for (size_t g = 0; g < base->generator_names().size(); ++g) {
            Expo m = base->basis_monomial(i);
            m[g] += 1;
            if (base->weighted_degree(m) > base->top_degree() + 2) continue;
            if (base->basis_index(m)) continue;
            needed.emplace(m, base->normalize(m));
        }
    for (auto& [m, nf] : needed) {
        RingPresentation::Rule r;
        r.lhs = lift(m);
        for (auto& [idx, c] : nf) r.rhs.emplace_back(lift(base->basis_monomial(idx)), c);
        rules.push_back(std::move(r));
    }

    std::map<Expo, Rational, GrlexLess> integral;
    for (auto& [idx, v] : base->integral_support()) {
        Expo m = lift(base->basis_monomial(idx));
        m.back() = 1;
        integral[m] = v;  // fiber integral of zeta is 1
    }

    return RingPresentation::create("P(bundle) over " + base->description(), names, degrees,
                                    base->top_degree() + 2, std::move(rules), std::move(integral),
                                    base);
}

/// Pullback of a base class to a bundle ring.
inline RingElement bundle_pullback(const RingPtr& bundle, const RingElement& beta) {
    auto base = bundle->bundle_base();
    if (!base || beta.ring() != base) throw input_error("bundle_pullback: base mismatch");
    RingElement out(bundle);
    for (auto& [i, c] : beta.coords()) {
        Expo m = base->basis_monomial(i);
        m.push_back(0);
        auto idx = bundle->basis_index(m);
        if (!idx) throw input_error("bundle_pullback: base monomial missing upstairs");
        out.add(*idx, c);
    }
    return out;
}

/// Integration along the fibers: zeta * pullback(beta) -> beta, pullbacks -> 0.
inline RingElement transfer(const RingElement& e) {
    auto bundle = e.ring();
    auto base = bundle->bundle_base();
    if (!base) throw input_error("transfer: element does not live on a projective bundle");
    size_t zpos = bundle->generator_names().size() - 1;
    RingElement out(base);
    for (auto& [i, c] : e.coords()) {
        Expo m = bundle->basis_monomial(i);
        if (m[zpos] == 0) continue;  // fiber integral of a pullback vanishes
        Expo b(m.begin(), m.end() - 1);
        auto idx = base->basis_index(b);
        if (!idx) throw input_error("transfer: stripped monomial missing downstairs");
        out.add(*idx, c);
    }
    return out;
}

// ---- right-hand sides of the index formulas ----

/// Evaluation of a symmetric polynomial on the Chern roots of a virtual
/// bundle, through the elementary form: psi~(c_1, ..., c_k).
inline RingElement characteristic_evaluation(const SymPoly& psi, const VirtualBundle& V) {
    const RingPtr& ring = V.total.ring();
    RingElement acc(ring);
    for (auto& [e, coef] : psi.elementary_form().terms()) {
        RingElement term = RingElement::scalar(ring, coef);
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term = term * V.chern(static_cast<int>(i) + 1);
        acc = acc + term;
    }
    return acc;
}

/// int c_1^n(T_F) on an n-dimensional model.
inline Rational rhs_affine(const RingPtr& ring, const RingElement& c1tf) {
    if (!c1tf.is_zero() && c1tf.max_degree() != 2)
        throw input_error("rhs_affine: c1 must be a degree-2 element");
    return integral_of(c1tf.pow(ring->dimension()));
}

/// sum_j int c_1^{2j}(T_F) hat_{n-2j}(c(TM - T_F)).
inline Rational rhs_projective(const RingPtr& ring, const RingElement& c1tf,
                               const RingElement& cTM, const SymPoly& phi) {
    int n = ring->dimension();
    if (phi.arity() != n + 1 || (!phi.is_zero() && phi.degree() != n + 1))
        throw input_error("rhs_projective: phi must be symmetric of degree n+1 in n+1 variables");
    VirtualBundle diff(chern_difference(cTM, RingElement::one(ring) + c1tf));
    HatDecomposition hd = hat_decompose(phi);
    Rational acc(0);
    for (int j = 0; 2 * j <= n; ++j) {
        RingElement cls = characteristic_evaluation(hd.hat(n - 2 * j), diff);
        acc += integral_of(c1tf.pow(2 * j) * cls);
    }
    return acc;
}

/// int phi(c(TM - T_F)) for a degree-n symmetric phi in n variables.
inline Rational rhs_baum_bott(const RingPtr& ring, const RingElement& c1tf,
                              const RingElement& cTM, const SymPoly& phi) {
    int n = ring->dimension();
    if (phi.arity() != n || (!phi.is_zero() && phi.degree() != n))
        throw input_error("rhs_baum_bott: phi must be symmetric of degree n in n variables");
    VirtualBundle diff(chern_difference(cTM, RingElement::one(ring) + c1tf));
    return integral_of(characteristic_evaluation(phi, diff));
}

// ---- product surfaces C x P^1 ----

struct ProductSurfaceClasses {
    RingPtr ring;
    RingElement c1_KF;          // n_v H + n_h V
    RingElement c1_TF;          // its negative
    RingElement c1_KS;          // (2g-2) V - 2 H
    RingElement c1_KF2_KSdual;  // 2 c1(K_F) - c1(K_S)
    Rational coeff_H, coeff_V;  // components of c1(K_F^2 (x) K_S^*)
};

inline ProductSurfaceClasses product_surface_classes(int genus, int nv, int nh) {
    ProductSurfaceClasses out{curve_times_p1_ring(genus), {}, {}, {}, {}, {}, {}};
    RingElement H = RingElement::generator(out.ring, "h");
    RingElement V = RingElement::generator(out.ring, "v");
    out.c1_KF = Rational(nv) * H + Rational(nh) * V;
    out.c1_TF = -out.c1_KF;
    out.c1_KS = Rational(2 * genus - 2) * V - Rational(2) * H;
    out.c1_KF2_KSdual = Rational(2) * out.c1_KF - out.c1_KS;
    out.coeff_H = 0;
    out.coeff_V = 0;
    for (auto& [i, c] : out.c1_KF2_KSdual.coords()) {
        if (out.ring->basis_name(i) == "h") out.coeff_H = c;
        if (out.ring->basis_name(i) == "v") out.coeff_V = c;
    }
    return out;
}

// ---- signature harness for surfaces ----

// For a regular foliation on a compact surface, c_1^2(T_F) = c_1^2(M) - 2 c_2(M),
// and the signature is tau = (c_1^2 - 2 c_2)/3. A foliated projective structure
// forces c_1^2(T_F) = 0, so tau != 0 is incompatible with one.
struct SignatureReport {
    Rational c1sq_M, c2_M, c1sq_TF, tau;
    bool projective_structure_possible;
};

inline SignatureReport signature_report(const Rational& c1sq_M, const Rational& c2_M) {
    SignatureReport r{c1sq_M, c2_M, c1sq_M - 2 * c2_M, (c1sq_M - 2 * c2_M) / 3, false};
    r.projective_structure_possible = (r.c1sq_TF == 0);
    return r;
}

}  // namespace folia
