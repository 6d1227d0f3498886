#pragma once

#include "folia/foliation.hpp"
#include "folia/ratfun.hpp"

namespace folia {

// A vector field on a chart of T_F or J^1 T_F: polynomial components over
// base variables plus one or two fiber variables (degree <= 2 in the fibers).
struct LiftedField {
    std::vector<std::string> base_vars;
    std::vector<std::string> fiber_vars;
    std::vector<std::string> vars;  // base followed by fiber
    std::vector<MPoly> components;  // one per entry of vars

    MPoly& component(const std::string& name) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw input_error("no component for variable '" + name + "'");
        return components[static_cast<size_t>(it - vars.begin())];
    }
    const MPoly& component(const std::string& name) const {
        return const_cast<LiftedField*>(this)->component(name);
    }
};

inline std::vector<MPoly> lie_bracket(const std::vector<MPoly>& X, const std::vector<MPoly>& Y) {
    if (X.size() != Y.size()) throw input_error("lie_bracket: component count mismatch");
    std::vector<MPoly> out;
    for (size_t i = 0; i < X.size(); ++i)
        out.push_back(field_apply(X, Y[i]) - field_apply(Y, X[i]));
    return out;
}

inline std::vector<MPoly> lie_bracket(const LiftedField& X, const LiftedField& Y) {
    if (X.vars != Y.vars) throw input_error("lie_bracket: variable mismatch");
    return lie_bracket(X.components, Y.components);
}

namespace detail {

inline std::vector<std::string> extended_vars(const ChartField& Z,
                                              std::initializer_list<const char*> fiber) {
    std::vector<std::string> vars = Z.vars;
    for (auto* f : fiber) {
        if (std::find(vars.begin(), vars.end(), f) != vars.end())
            throw input_error(std::string("fiber variable '") + f + "' collides with a chart variable");
        vars.emplace_back(f);
    }
    return vars;
}

}  // namespace detail

/// The Euler field of the fiber variables: sum zeta d/dzeta (+ xi d/dxi).
inline LiftedField fiber_euler_field(const LiftedField& X) {
    LiftedField H{X.base_vars, X.fiber_vars, X.vars, {}};
    for (auto& v : X.vars) {
        bool is_fiber = std::find(X.fiber_vars.begin(), X.fiber_vars.end(), v) != X.fiber_vars.end();
        H.components.push_back(is_fiber ? MPoly::variable(X.vars, v) : MPoly::zero(X.vars));
    }
    return H;
}

// Geodesic field of a foliated affine structure on T_F:
//   X = zeta Z - gamma zeta^2 d/dzeta, with [H, X] = X for H = zeta d/dzeta.
inline LiftedField build_geodesic_affine(const ChartField& Z, const Christoffel& chris) {
    validate_chart_field(Z);
    if (chris.kind != StructureKind::affine)
        throw input_error("build_geodesic_affine: affine symbol required");
    const MPoly* gamma = chris.poly();
    if (!gamma) throw input_error("build_geodesic_affine: polynomial symbol required");
    auto vars = detail::extended_vars(Z, {"zeta"});
    MPoly zeta = MPoly::variable(vars, "zeta");
    LiftedField X{Z.vars, {"zeta"}, vars, {}};
    for (auto& comp : Z.components) X.components.push_back(zeta * comp.with_vars(vars));
    X.components.push_back(-(gamma->with_vars(vars)) * zeta * zeta);
    // structural bookkeeping: the base part is zeta times the chart field
    for (size_t i = 0; i < Z.components.size(); ++i)
        if (X.components[i].divide_exact(zeta) != Z.components[i].with_vars(vars))
            throw std::logic_error("geodesic lift lost its base structure");
    // defining relation
    LiftedField H = fiber_euler_field(X);
    if (lie_bracket(H, X) != X.components)
        throw std::logic_error("geodesic lift violates [H, X] = X");
    return X;
}

// Geodesic field of a foliated projective structure on J^1 T_F:
//   X = zeta Z + zeta xi d/dzeta + (xi^2/2 - rho zeta^2) d/dxi,
// satisfying [Y,X] = 2H, [H,X] = X, [H,Y] = -Y.
inline LiftedField build_geodesic_projective(const ChartField& Z, const Christoffel& chris) {
    validate_chart_field(Z);
    if (chris.kind != StructureKind::projective)
        throw input_error("build_geodesic_projective: projective symbol required");
    const MPoly* rho = chris.poly();
    if (!rho) throw input_error("build_geodesic_projective: polynomial symbol required");
    auto vars = detail::extended_vars(Z, {"zeta", "xi"});
    MPoly zeta = MPoly::variable(vars, "zeta"), xi = MPoly::variable(vars, "xi");
    LiftedField X{Z.vars, {"zeta", "xi"}, vars, {}};
    for (auto& comp : Z.components) X.components.push_back(zeta * comp.with_vars(vars));
    X.components.push_back(zeta * xi);
    X.components.push_back(Rational(1, 2) * (xi * xi) - rho->with_vars(vars) * zeta * zeta);

    LiftedField H = fiber_euler_field(X);
    LiftedField Y{Z.vars, {"zeta", "xi"}, vars, {}};
    for (auto& v : vars)
        Y.components.push_back(v == "xi" ? MPoly::constant(vars, 2) : MPoly::zero(vars));
    auto twoH = H.components;
    for (auto& c : twoH) c = Rational(2) * c;
    if (lie_bracket(Y, X) != twoH) throw std::logic_error("sl2 relation [Y,X] = 2H failed");
    if (lie_bracket(H, X) != X.components) throw std::logic_error("sl2 relation [H,X] = X failed");
    auto hy = lie_bracket(H, Y);
    for (auto& c : hy) c = -c;
    if (hy != Y.components) throw std::logic_error("sl2 relation [H,Y] = -Y failed");
    return X;
}

// ---- gluing transports (polynomial multipliers, exact division) ----

/// Rewrite an affine geodesic lift under zeta_j = g zeta_i. The result is the
/// lift of (g Z, symbol of gZ) when the input is the lift of (Z, symbol of Z).
inline LiftedField transport_affine_lift(const LiftedField& Xj, const MPoly& g) {
    const auto& vars = Xj.vars;
    MPoly ge = g.with_vars(vars);
    MPoly zeta = MPoly::variable(vars, "zeta");
    auto subst = [&](const MPoly& p) { return p.substitute("zeta", ge * zeta); };
    LiftedField Xi{Xj.base_vars, Xj.fiber_vars, vars, {}};
    std::vector<MPoly> base_subst;
    for (size_t m = 0; m < Xj.base_vars.size(); ++m) base_subst.push_back(subst(Xj.components[m]));
    MPoly xg = MPoly::zero(vars);  // d/dt of g along the transported base flow
    for (size_t m = 0; m < Xj.base_vars.size(); ++m) xg += base_subst[m] * ge.derivative(m);
    MPoly num = subst(Xj.components.back()) - zeta * xg;
    auto fiber = num.divide_exact(ge);
    if (!fiber) throw input_error("transport_affine_lift: multiplier does not divide");
    Xi.components = std::move(base_subst);
    Xi.components.push_back(std::move(*fiber));
    return Xi;
}

/// Rewrite a projective geodesic lift under (zeta_j, xi_j) = (g zeta_i, (Zg) zeta_i + xi_i).
inline LiftedField transport_projective_lift(const LiftedField& Xj, const MPoly& g,
                                             const ChartField& Zj) {
    const auto& vars = Xj.vars;
    MPoly ge = g.with_vars(vars);
    MPoly zeta = MPoly::variable(vars, "zeta"), xi = MPoly::variable(vars, "xi");
    MPoly zg = field_apply(Zj.components, g).with_vars(vars);
    auto subst = [&](const MPoly& p) {
        return p.substitute("zeta", ge * zeta).substitute("xi", zg * zeta + xi);
    };
    std::vector<MPoly> base_subst;
    for (size_t m = 0; m < Xj.base_vars.size(); ++m) base_subst.push_back(subst(Xj.components[m]));
    auto along = [&](const MPoly& h) {
        MPoly acc = MPoly::zero(vars);
        for (size_t m = 0; m < Xj.base_vars.size(); ++m) acc += base_subst[m] * h.derivative(m);
        return acc;
    };
    MPoly zeta_dot_num = subst(Xj.component("zeta")) - zeta * along(ge);
    auto zeta_dot = zeta_dot_num.divide_exact(ge);
    if (!zeta_dot) throw input_error("transport_projective_lift: multiplier does not divide");
    MPoly xi_dot = subst(Xj.component("xi")) - zeta * along(zg) - zg * (*zeta_dot);
    LiftedField Xi{Xj.base_vars, Xj.fiber_vars, vars, std::move(base_subst)};
    Xi.components.push_back(std::move(*zeta_dot));
    Xi.components.push_back(std::move(xi_dot));
    return Xi;
}

// ---- cocycle checks over declared overlap data ----

// Gluing matrix of J^1 T_F: psi_{ji} = [[g_ij, 0], [Z_j(g_ij), 1]], stored by
// its two varying entries.
struct CocycleMatrix {
    RatFun a;  // upper-left: the multiplier
    RatFun b;  // lower-left: the field applied to the multiplier
};

inline CocycleMatrix cocycle_matrix(const RatFun& g_ij, const std::vector<RatFun>& Zj) {
    RatFun zg = RatFun::constant(g_ij.vars(), 0);
    for (size_t m = 0; m < Zj.size(); ++m) zg = zg + Zj[m] * g_ij.derivative(m);
    return CocycleMatrix{g_ij, zg};
}

inline CocycleMatrix operator*(const CocycleMatrix& A, const CocycleMatrix& B) {
    return CocycleMatrix{A.a * B.a, A.b * B.a + B.b};
}

inline bool is_identity(const CocycleMatrix& M) {
    return M.a == RatFun::constant(M.a.vars(), 1) && M.b.num().is_zero();
}

struct CocycleCheckInput {
    std::vector<std::string> vars;                    // declared overlap coordinates
    std::vector<std::string> chart_names;
    std::vector<std::vector<RatFun>> fields;          // Z_i expressed in the overlap coordinates
    std::map<std::pair<size_t, size_t>, RatFun> multipliers;  // (i,j) -> g_ij with Z_i = g_ij Z_j
};

struct CocycleReport {
    struct Identity {
        std::string name;
        bool ok;
        std::string witness;  // offending entries, when violated
    };
    std::vector<Identity> identities;
    bool all_ok = true;

    void add(std::string name, bool ok, std::string witness = "") {
        all_ok = all_ok && ok;
        identities.push_back({std::move(name), ok, std::move(witness)});
    }
};

inline CocycleReport cocycle_check(const CocycleCheckInput& in) {
    CocycleReport rep;
    auto g = [&](size_t i, size_t j) -> const RatFun* {
        auto it = in.multipliers.find({i, j});
        return it == in.multipliers.end() ? nullptr : &it->second;
    };
    auto psi = [&](size_t i, size_t j) {
        // psi_{ij}: needs g_{ji} and the field Z_i
        return cocycle_matrix(*g(j, i), in.fields[i]);
    };
    // declared proportionality
    for (auto& [key, mult] : in.multipliers) {
        auto [i, j] = key;
        bool ok = true;
        std::string witness;
        for (size_t m = 0; m < in.vars.size(); ++m) {
            if (in.fields[i][m] != mult * in.fields[j][m]) {
                ok = false;
                witness = "component d/d" + in.vars[m];
                break;
            }
        }
        rep.add("field consistency " + in.chart_names[i] + " = g*" + in.chart_names[j], ok, witness);
    }
    // inverse identities
    for (auto& [key, mult] : in.multipliers) {
        auto [i, j] = key;
        if (i > j || !g(j, i)) continue;
        CocycleMatrix M = psi(i, j) * psi(j, i);
        bool ok = is_identity(M);
        rep.add("inverse identity psi_" + in.chart_names[i] + in.chart_names[j] + " psi_" +
                    in.chart_names[j] + in.chart_names[i] + " = I",
                ok, ok ? "" : "a = " + M.a.str() + ", b = " + M.b.str());
    }
    // triple identities
    size_t n = in.fields.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                if (i >= j || i >= k || j == k) continue;  // i smallest, all distinct
                if (!g(j, i) || !g(k, j) || !g(i, k)) continue;
                CocycleMatrix M = psi(i, j) * psi(j, k) * psi(k, i);
                bool ok = is_identity(M);
                rep.add("triple identity psi_" + in.chart_names[i] + in.chart_names[j] + " psi_" +
                            in.chart_names[j] + in.chart_names[k] + " psi_" + in.chart_names[k] +
                            in.chart_names[i] + " = I",
                        ok, ok ? "" : "a = " + M.a.str() + ", b = " + M.b.str());
            }
    return rep;
}

/// Single-overlap check in series mode: psi built from g and from 1/g compose
/// to the identity through the truncation order.
inline bool cocycle_check_series(const TSeries& g, const ChartField& Zj, int order) {
    if (g.constant_term() == 0)
        throw input_error("cocycle_check_series: multiplier must be a unit series");
    TSeries ginv = g.reciprocal();
    // Z_i = g Z_j
    auto apply_i = [&](const TSeries& s) {
        return (g * series_field_derive(Zj.components, s)).truncated(order);
    };
    TSeries a = (ginv * g).truncated(order);
    TSeries b = (apply_i(ginv) * g + series_field_derive(Zj.components, g)).truncated(order);
    return a.agrees_with(TSeries::constant(g.vars(), 1, order), order) && b.truncated(order - 1).is_zero();
}

// ---- projectivized geodesic field ----

// The induced field on the fiber P^1 in both affine charts:
//   u-chart: Z - (u^2/2 + rho) d/du,   v-chart: Z + (1/2 + rho v^2) d/dv,
// glued by u = 1/v.
struct RiccatiCharts {
    ChartField u_chart;
    ChartField v_chart;
};

inline RiccatiCharts projectivized_riccati(const ChartField& Z, const Christoffel& chris) {
    validate_chart_field(Z);
    if (chris.kind != StructureKind::projective)
        throw input_error("projectivized_riccati: projective symbol required");
    const MPoly* rho = chris.poly();
    if (!rho) throw input_error("projectivized_riccati: polynomial symbol required");

    auto uvars = detail::extended_vars(Z, {"u"});
    ChartField U{"riccati-u", uvars, {}};
    for (auto& c : Z.components) U.components.push_back(c.with_vars(uvars));
    MPoly u = MPoly::variable(uvars, "u");
    U.components.push_back(-(Rational(1, 2) * (u * u) + rho->with_vars(uvars)));

    auto vvars = detail::extended_vars(Z, {"v"});
    ChartField V{"riccati-v", vvars, {}};
    for (auto& c : Z.components) V.components.push_back(c.with_vars(vvars));
    MPoly v = MPoly::variable(vvars, "v");
    V.components.push_back(MPoly::constant(vvars, Rational(1, 2)) + rho->with_vars(vvars) * v * v);

    // chart consistency under u = 1/v: with P(u) = c0 + c1 u + c2 u^2 the
    // v-component must equal -(c0 v^2 + c1 v + c2)
    const MPoly& pu = U.components.back();
    MPoly c0 = MPoly::zero(Z.vars), c1 = MPoly::zero(Z.vars), c2 = MPoly::zero(Z.vars);
    size_t upos = uvars.size() - 1;
    for (auto& [e, c] : pu.terms()) {
        Expo be(e.begin(), e.end() - 1);
        if (e[upos] == 0) c0.add_term(be, c);
        else if (e[upos] == 1) c1.add_term(be, c);
        else if (e[upos] == 2) c2.add_term(be, c);
        else throw std::logic_error("riccati fiber component has degree > 2");
    }
    MPoly expect = -(c0.with_vars(vvars) * v * v + c1.with_vars(vvars) * v + c2.with_vars(vvars));
    if (V.components.back() != expect)
        throw std::logic_error("riccati charts are inconsistent under u = 1/v");
    return RiccatiCharts{std::move(U), std::move(V)};
}

// Fiber equilibria over a singular point: u^2 = -2 rho(p), with u-eigenvalues
// -u at each root. Reported through even invariants, never a chosen root.
struct FiberEquilibria {
    Rational rho_value;
    bool degenerate;          // rho(p) = 0: the two equilibria collide
    Rational eigenvalue_sum;  // always 0
    Rational eigenvalue_product;  // 2 rho(p)
};

inline FiberEquilibria riccati_fiber_equilibria(const Christoffel& chris,
                                                const std::vector<Rational>& point) {
    const MPoly* rho = chris.poly();
    if (!rho || chris.kind != StructureKind::projective)
        throw input_error("riccati_fiber_equilibria: polynomial projective symbol required");
    Rational rp = rho->eval(point);
    return FiberEquilibria{rp, rp == 0, Rational(0), 2 * rp};
}

}  // namespace folia
