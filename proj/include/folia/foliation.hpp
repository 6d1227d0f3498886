#pragma once

#include "folia/laurent.hpp"
#include "folia/matrix.hpp"
#include "folia/tseries.hpp"

#include <variant>

namespace folia {

enum class StructureKind { affine, projective };

inline std::string kind_name(StructureKind k) {
    return k == StructureKind::affine ? "affine" : "projective";
}

// A polynomial vector field in one affine chart.
struct ChartField {
    std::string chart;
    std::vector<std::string> vars;
    std::vector<MPoly> components;

    bool is_zero() const {
        for (auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }
};

inline void validate_chart_field(const ChartField& Z) {
    if (Z.components.size() != Z.vars.size())
        throw input_error("chart '" + Z.chart + "': one component per variable required");
    for (auto& c : Z.components)
        if (c.vars() != Z.vars) throw input_error("chart '" + Z.chart + "': component variable mismatch");
}

inline MPoly apply(const ChartField& Z, const MPoly& f) { return field_apply(Z.components, f); }
inline TSeries apply(const ChartField& Z, const TSeries& f) {
    return series_field_derive(Z.components, f);
}

// Christoffel data of a foliated connection with respect to a chart generator:
// a holomorphic function, polynomial or truncated series.
struct Christoffel {
    StructureKind kind;
    std::variant<MPoly, TSeries> symbol;

    const MPoly* poly() const { return std::get_if<MPoly>(&symbol); }
    const TSeries* series() const { return std::get_if<TSeries>(&symbol); }

    TSeries as_series() const {
        if (auto* p = poly()) return TSeries::from_poly(*p);
        return *series();
    }

    std::string str() const { return poly() ? poly()->str() : series()->str(); }
};

// ---- transformation laws ----

/// Symbol of gZ from the symbol of Z: Zg + g gamma.
inline MPoly change_generator_affine(const MPoly& gamma, const MPoly& g, const ChartField& Z) {
    return field_apply(Z.components, g) + g * gamma;
}

inline TSeries change_generator_affine(const TSeries& gamma, const TSeries& g,
                                       const ChartField& Z) {
    return series_field_derive(Z.components, g) + g * gamma;
}

/// Symbol of gZ from the projective symbol of Z: g^2 rho + g Z^2 g - (Zg)^2/2.
inline MPoly change_generator_projective(const MPoly& rho, const MPoly& g, const ChartField& Z) {
    MPoly zg = field_apply(Z.components, g);
    return g * g * rho + g * field_apply(Z.components, zg) - Rational(1, 2) * (zg * zg);
}

inline TSeries change_generator_projective(const TSeries& rho, const TSeries& g,
                                           const ChartField& Z) {
    TSeries zg = series_field_derive(Z.components, g);
    return g * g * rho + g * series_field_derive(Z.components, zg) -
           Rational(1, 2) * (zg * zg);
}

/// The projective symbol attached to an affine one: -gamma^2/2 + Z gamma.
inline MPoly affine_to_projective(const MPoly& gamma, const ChartField& Z) {
    return Rational(-1, 2) * (gamma * gamma) + field_apply(Z.components, gamma);
}

inline TSeries affine_to_projective(const TSeries& gamma, const ChartField& Z) {
    return Rational(-1, 2) * (gamma * gamma) + series_field_derive(Z.components, gamma);
}

inline Christoffel change_generator(const Christoffel& c, const MPoly& g, const ChartField& Z) {
    if (auto* p = c.poly()) {
        MPoly s = c.kind == StructureKind::affine ? change_generator_affine(*p, g, Z)
                                                  : change_generator_projective(*p, g, Z);
        return Christoffel{c.kind, std::move(s)};
    }
    TSeries gs = TSeries::from_poly(g);
    TSeries s = c.kind == StructureKind::affine
                    ? change_generator_affine(*c.series(), gs, Z)
                    : change_generator_projective(*c.series(), gs, Z);
    return Christoffel{c.kind, std::move(s)};
}

inline Christoffel affine_to_projective(const Christoffel& c, const ChartField& Z) {
    if (c.kind != StructureKind::affine)
        throw input_error("affine_to_projective: affine symbol required");
    if (auto* p = c.poly()) return Christoffel{StructureKind::projective, affine_to_projective(*p, Z)};
    return Christoffel{StructureKind::projective, affine_to_projective(*c.series(), Z)};
}

// ---- meromorphic-generator extension ----

struct InvariantFactor {
    MPoly f;
    long n = 1;
    std::optional<MPoly> h;  // verified cofactor with Zf = h f, derived when absent
};

// Affine symbol of Z induced by the meromorphic field (prod f_i^{n_i}) Z,
// which extends across the invariant divisor: gamma = -sum n_i h_i.
inline Christoffel extension_christoffel(const ChartField& Z, std::vector<InvariantFactor> factors) {
    MPoly gamma = MPoly::zero(Z.vars);
    for (auto& fac : factors) {
        MPoly zf = field_apply(Z.components, fac.f);
        auto q = zf.divide_exact(fac.f);
        if (!q)
            throw input_error("extension: factor '" + fac.f.str() + "' does not divide its derivative");
        if (fac.h && *fac.h != *q)
            throw input_error("extension: supplied cofactor disagrees with Zf/f");
        gamma -= Rational(fac.n) * (*q);
    }
    return Christoffel{StructureKind::affine, std::move(gamma)};
}

// ---- turbulent-fiber extension ----

struct TurbulentExtension {
    Laurent symbol;
    bool holomorphic;
};

// Symbol of z^n Z for the structure with chart symbol data s0 on the base:
//   projective: z^{2n-2} (z^2 s0 + n(n-2)/2)
//   affine:     z^{n-1} (z s0 + n)
inline TurbulentExtension turbulent_extension(int n, const Laurent& s0, StructureKind mode) {
    if (n < 1) throw input_error("turbulent_extension: n must be a positive integer");
    Laurent inner = mode == StructureKind::projective
                        ? s0.shifted(2) + Laurent::monomial(s0.var(), 0, Rational(n * (n - 2), 2),
                                                            s0.order() + 2)
                        : s0.shifted(1) + Laurent::monomial(s0.var(), 0, Rational(n), s0.order() + 1);
    Laurent out = inner.shifted(mode == StructureKind::projective ? 2 * n - 2 : n - 1);
    if (out.order() < -1)
        throw input_error("turbulent_extension: truncation order too low to decide holomorphy");
    return TurbulentExtension{out, out.holomorphic()};
}

// ---- the homogeneous construction on P^n ----

struct HomogeneousChart {
    ChartField field;    // W on the slice x_k = 1
    Christoffel gamma;   // induced affine symbol, -(d-1) * Z^k restricted
    int degree;          // common degree of the homogeneous components
};

// Chart data of the foliation induced on P^n by a homogeneous field on C^{n+1},
// together with the affine structure the homogeneity provides. The symbol
// formula is certified by the cross-chart consistency oracle in the tests.
inline HomogeneousChart homogeneous_to_chart(const ChartField& Zh, size_t chart_index) {
    validate_chart_field(Zh);
    if (chart_index >= Zh.vars.size()) throw input_error("chart index out of range");
    std::optional<int> deg;
    for (auto& c : Zh.components) {
        if (c.is_zero()) continue;
        auto hd = c.homogeneous_degree();
        if (!hd) throw input_error("homogeneous_to_chart: non-homogeneous component");
        if (deg && *deg != *hd) throw input_error("homogeneous_to_chart: mixed component degrees");
        deg = *hd;
    }
    if (!deg) throw input_error("homogeneous_to_chart: zero field");
    int d = *deg;

    std::vector<std::string> chart_vars = Zh.vars;
    chart_vars.erase(chart_vars.begin() + static_cast<long>(chart_index));
    MPoly pk = Zh.components[chart_index].restrict_one(chart_index);

    ChartField W;
    W.chart = Zh.vars[chart_index];
    W.vars = chart_vars;
    for (size_t i = 0; i < Zh.vars.size(); ++i) {
        if (i == chart_index) continue;
        MPoly pi = Zh.components[i].restrict_one(chart_index);
        MPoly ui = MPoly::variable(chart_vars, Zh.vars[i]);
        W.components.push_back(pi - ui * pk);
    }
    if (W.is_zero()) throw inadmissible_error("degenerate: radial");
    MPoly gamma = Rational(-(d - 1)) * pk;
    return HomogeneousChart{std::move(W), Christoffel{StructureKind::affine, std::move(gamma)}, d};
}

// ---- singular points ----

struct SingularPointRecord {
    std::string chart;
    std::vector<Rational> point;
    QMatrix jacobian;
    std::vector<Rational> sigma;  // sigma_1..sigma_n, det(I + tA) = sum sigma_i t^i
    StructureKind kind;
    Rational symbol_value;
    bool nondegenerate;
    std::optional<std::vector<Rational>> eigenvalues;

    size_t dimension() const { return sigma.size(); }
    Rational det() const { return sigma.empty() ? Rational(1) : sigma.back(); }
    bool admissible() const { return nondegenerate && symbol_value != 0; }
};

inline SingularPointRecord make_record(const ChartField& W, const Christoffel& chris,
                                       const std::vector<Rational>& point) {
    validate_chart_field(W);
    size_t n = W.vars.size();
    if (point.size() != n) throw input_error("candidate point arity mismatch");
    for (auto& c : W.components)
        if (c.eval(point) != 0) {
            std::string coords;
            for (auto& x : point) coords += (coords.empty() ? "" : ",") + rat_str(x);
            throw input_error("candidate (" + coords + ") is not singular");
        }
    QMatrix jac(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) jac(i, j) = W.components[i].derivative(j).eval(point);
    SingularPointRecord rec;
    rec.chart = W.chart;
    rec.point = point;
    rec.jacobian = jac;
    rec.sigma = jac.char_sigma();
    rec.kind = chris.kind;
    if (auto* p = chris.poly()) {
        rec.symbol_value = p->eval(point);
    } else {
        for (auto& x : point)
            if (x != 0)
                throw input_error("series symbol can only be evaluated at the origin");
        rec.symbol_value = chris.series()->constant_term();
    }
    rec.nondegenerate = (rec.det() != 0);
    rec.eigenvalues = jac.rational_eigenvalues();
    return rec;
}

inline std::vector<SingularPointRecord> singular_records(
    const ChartField& W, const Christoffel& chris,
    const std::vector<std::vector<Rational>>& candidates) {
    std::vector<SingularPointRecord> out;
    for (size_t i = 0; i < candidates.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (candidates[i] == candidates[j]) throw input_error("duplicate singular candidate");
        out.push_back(make_record(W, chris, candidates[i]));
    }
    return out;
}

// ---- ramification indices ----

struct RamificationData {
    StructureKind kind;
    std::vector<Rational> sigma;
    Rational symbol_value;
    // nu_i (affine) or nu_i^2 (projective), when the spectrum is rational
    std::optional<std::vector<Rational>> indices;
};

inline RamificationData ramification_indices(const SingularPointRecord& rec) {
    if (!rec.nondegenerate) throw inadmissible_error("degenerate Jacobian");
    if (rec.symbol_value == 0) throw inadmissible_error("log-type singularity: vanishing symbol");
    RamificationData out{rec.kind, rec.sigma, rec.symbol_value, std::nullopt};
    if (rec.eigenvalues) {
        std::vector<Rational> idx;
        for (auto& lam : *rec.eigenvalues) {
            if (rec.kind == StructureKind::affine)
                idx.push_back(lam / rec.symbol_value);
            else
                idx.push_back(-(lam * lam) / (2 * rec.symbol_value));
        }
        out.indices = std::move(idx);
    }
    return out;
}

}  // namespace folia
