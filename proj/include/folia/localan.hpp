#pragma once

#include "folia/foliation.hpp"
#include "folia/laurent.hpp"

#include <cmath>

namespace folia {

// ---- one-dimensional operator calculus ----

/// Affine distortion f''/f' of a univariate germ with f'(0) != 0.
inline TSeries affine_distortion(const TSeries& f) {
    if (f.nvars() != 1) throw input_error("affine_distortion: univariate series required");
    TSeries f1 = f.derivative(size_t{0});
    if (f1.constant_term() == 0) throw inadmissible_error("affine_distortion: critical point at 0");
    return f1.derivative(size_t{0}) * f1.reciprocal();
}

/// Schwarzian derivative (f''/f')' - (f''/f')^2 / 2 for f'(0) != 0.
inline TSeries schwarzian(const TSeries& f) {
    TSeries L = affine_distortion(f);
    return L.derivative(size_t{0}) - Rational(1, 2) * (L * L);
}

/// Distortion in Laurent form, allowing a critical point at the origin.
inline Laurent affine_distortion_laurent(const TSeries& f) {
    if (f.nvars() != 1) throw input_error("affine_distortion: univariate series required");
    Laurent f1 = Laurent::from_series(f.derivative(size_t{0}));
    if (f1.is_zero()) throw inadmissible_error("affine_distortion: constant germ");
    return Laurent::from_series(f.derivative(size_t{0}).derivative(size_t{0})) * f1.reciprocal();
}

/// Schwarzian in Laurent form; for f = z^m(unit) the result has a double pole.
inline Laurent schwarzian_laurent(const TSeries& f) {
    Laurent L = affine_distortion_laurent(f);
    return L.derivative() - Rational(1, 2) * (L * L);
}

// ---- Fuchsian angles ----

enum class FuchsianTaxonomy { logarithmic, power, power_or_power_plus_log };

inline std::string taxonomy_name(FuchsianTaxonomy t) {
    switch (t) {
        case FuchsianTaxonomy::logarithmic: return "logarithmic";
        case FuchsianTaxonomy::power: return "power";
        default: return "power-or-power-plus-log";
    }
}

inline FuchsianTaxonomy classify_angle(const Rational& theta) {
    if (theta == 0) return FuchsianTaxonomy::logarithmic;
    if (theta < 0 && denominator(theta) == 1) return FuchsianTaxonomy::power_or_power_plus_log;
    return FuchsianTaxonomy::power;
}

struct AffineAngle {
    Rational theta;  // residue + 1
    FuchsianTaxonomy taxonomy;
    std::optional<Rational> ramification_index;  // 1/theta when theta != 0
};

inline AffineAngle affine_angle(const Laurent& alpha) {
    if (alpha.pole_order() > 1) throw inadmissible_error("non-Fuchsian: pole order >= 2");
    AffineAngle out{alpha.coeff(-1) + 1, FuchsianTaxonomy::power, std::nullopt};
    out.taxonomy = classify_angle(out.theta);
    if (out.theta != 0) out.ramification_index = Rational(1) / out.theta;
    return out;
}

struct ProjectiveAngle {
    Rational theta_squared;  // 1 - 2 Q(beta, 0), exact
    std::optional<Rational> theta;  // reported when theta_squared is a rational square
    FuchsianTaxonomy taxonomy;
    std::optional<Rational> ramification_index_squared;
};

inline ProjectiveAngle projective_angle(const Laurent& beta) {
    if (beta.pole_order() > 2) throw inadmissible_error("non-Fuchsian: pole order >= 3");
    ProjectiveAngle out{Rational(1) - 2 * beta.coeff(-2), std::nullopt, FuchsianTaxonomy::power,
                        std::nullopt};
    out.theta = rat_sqrt(out.theta_squared);
    if (out.theta_squared == 0)
        out.taxonomy = FuchsianTaxonomy::logarithmic;
    else if (out.theta && denominator(*out.theta) == 1)
        out.taxonomy = FuchsianTaxonomy::power_or_power_plus_log;  // a branch lies in Z^-
    else
        out.taxonomy = FuchsianTaxonomy::power;
    if (out.theta_squared != 0)
        out.ramification_index_squared = Rational(1) / out.theta_squared;
    return out;
}

// ---- Riccati reduction of a Fuchsian projective structure to an affine one ----

struct RiccatiSolution {
    TSeries u;       // z u' = z^2 S + u + u^2/2, u(0) = theta - 1
    Laurent gamma;   // the affine symbol u/z
    std::vector<int> resonant_solvable;  // orders where 0/0 was resolved by u_k = 0
};

inline RiccatiSolution riccati_projective_to_affine(const Laurent& S, const Rational& theta,
                                                    int order) {
    if (S.pole_order() > 2) throw inadmissible_error("non-Fuchsian: pole order >= 3");
    if (2 * S.coeff(-2) != 1 - theta * theta)
        throw input_error("riccati: declared theta does not match the quadratic residue");
    if (S.order() < order - 2)
        throw input_error("riccati: input order too low for the requested order");
    RiccatiSolution sol{TSeries::zero({S.var()}, order), Laurent::zero(S.var(), order - 1), {}};
    std::vector<Rational> u(static_cast<size_t>(order) + 1, Rational(0));
    u[0] = theta - 1;
    // z^2 S = sum_k s_k z^k with s_0 the quadratic residue
    auto s = [&](int k) { return S.coeff(k - 2); };
    for (int k = 1; k <= order; ++k) {
        Rational forced = s(k);
        for (int j = 1; j < k; ++j) forced += Rational(1, 2) * u[size_t(j)] * u[size_t(k - j)];
        Rational denom = Rational(k) - theta;
        if (denom == 0) {
            if (forced != 0)
                throw inadmissible_error("resonant: theta in Z+ (order " + std::to_string(k) +
                                         ", nonzero forcing)");
            sol.resonant_solvable.push_back(k);
            u[size_t(k)] = 0;
        } else {
            u[size_t(k)] = forced / denom;
        }
    }
    for (int k = 0; k <= order; ++k) sol.u.set_coeff(Expo{k}, u[size_t(k)]);
    sol.gamma = Laurent::from_series(sol.u).shifted(-1).truncated(order - 1);
    // substitution residual: z u' - z^2 S - u - u^2/2 = O(z^{order+1})
    Laurent lu = Laurent::from_series(sol.u);
    Laurent residual = lu.derivative().shifted(1) - S.shifted(2) - lu -
                       Rational(1, 2) * (lu * lu);
    if (!residual.truncated(order).is_zero())
        throw std::logic_error("riccati: residual check failed");
    return sol;
}

// ---- Briot-Bouquet / Brjuno-Poschel formal solver ----

namespace detail {

/// F(f(z), z) for F a series in (t, z_1..z_n) and f a series in (z_1..z_n), f(0)=0.
inline TSeries substitute_first(const TSeries& F, const TSeries& f, int order) {
    const auto& fv = F.vars();
    std::vector<std::string> zv(fv.begin() + 1, fv.end());
    if (f.vars() != zv) throw input_error("substitute_first: variable mismatch");
    if (f.constant_term() != 0) throw input_error("substitute_first: f(0) must vanish");
    int maxj = 0;
    for (auto& [e, c] : F.terms()) maxj = std::max(maxj, e[0]);
    std::vector<TSeries> fpow;
    fpow.push_back(TSeries::constant(zv, 1, exact_order));
    for (int j = 1; j <= maxj; ++j) fpow.push_back((fpow.back() * f).truncated(order));
    TSeries acc = TSeries::zero(zv, order);
    for (auto& [e, c] : F.terms()) {
        Expo ze(e.begin() + 1, e.end());
        if (total_degree(ze) > order) continue;
        TSeries term = c * fpow[static_cast<size_t>(e[0])];
        TSeries shifted = TSeries::zero(zv, order);
        for (auto& [me, mc] : term.terms()) {
            Expo sum = me;
            for (size_t i = 0; i < sum.size(); ++i) sum[i] += ze[i];
            if (total_degree(sum) <= order) shifted.add_term(sum, mc);
        }
        acc = acc + shifted;
    }
    return acc.truncated(order);
}

inline void multi_indices(int degree, size_t nvars, Expo& cur, size_t pos,
                          std::vector<Expo>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = degree;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int k = degree; k >= 0; --k) {
        cur[pos] = k;
        multi_indices(degree - k, nvars, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

inline std::vector<Expo> multi_indices(int degree, size_t nvars) {
    std::vector<Expo> out;
    Expo cur(nvars, 0);
    multi_indices(degree, nvars, cur, 0, out);
    return out;
}

inline std::string index_str(const Expo& K) {
    std::string s = "(";
    for (size_t i = 0; i < K.size(); ++i) s += (i ? "," : "") + std::to_string(K[i]);
    return s + ")";
}

}  // namespace detail

/// F(f(z), z): the right-hand side of the solver equation at a candidate f.
inline TSeries solver_rhs(const TSeries& F, const TSeries& f, int order) {
    return detail::substitute_first(F, f, order);
}

// Coefficient recursion for Zf = F(f, z) with Z = sum lambda_i z_i d/dz_i and
// f(0) = 0. F is a series in (t, z_1..z_n) with F(0,0) = 0; mu = dF/dt(0,0).
// Every denominator <K,lambda> - mu actually used is checked; the first
// vanishing one aborts with the offending multi-index.
inline TSeries briot_bouquet_solve(const std::vector<Rational>& lambda, const TSeries& F,
                                   int order) {
    if (F.nvars() < 2) throw input_error("briot_bouquet_solve: F needs at least (t, z) variables");
    size_t n = F.nvars() - 1;
    if (lambda.size() != n) throw input_error("briot_bouquet_solve: lambda arity mismatch");
    if (F.constant_term() != 0) throw input_error("briot_bouquet_solve: F(0,0) must vanish");
    if (F.order() < order) throw input_error("briot_bouquet_solve: input order too low");
    const auto& fv = F.vars();
    std::vector<std::string> zv(fv.begin() + 1, fv.end());
    Expo mu_expo(F.nvars(), 0);
    mu_expo[0] = 1;
    Rational mu = F.coeff(mu_expo);

    TSeries f = TSeries::zero(zv, order);
    for (int m = 1; m <= order; ++m) {
        TSeries rhs = detail::substitute_first(F, f, m);
        for (const Expo& K : detail::multi_indices(m, n)) {
            Rational bracket(0);
            for (size_t i = 0; i < n; ++i) bracket += Rational(K[i]) * lambda[i];
            Rational denom = bracket - mu;
            Rational forced = rhs.coeff(K);
            if (denom == 0)
                throw inadmissible_error(
                    "resonant at K=" + detail::index_str(K) +
                    (forced == 0 ? " (vanishing forcing, solution not unique)" : ""));
            f.set_coeff(K, forced / denom);
        }
    }
    // substitution residual
    std::vector<MPoly> Z;
    for (size_t i = 0; i < n; ++i) Z.push_back(lambda[i] * MPoly::variable(zv, zv[i]));
    TSeries residual = series_field_derive(Z, f) - detail::substitute_first(F, f, order);
    if (!residual.truncated(order).is_zero())
        throw std::logic_error("briot_bouquet_solve: residual check failed");
    return f;
}

namespace detail {

/// Embed a series in z-vars into (t, z-vars) with t-exponent `texp`.
inline TSeries embed_with_t(const TSeries& s, const std::string& tname, int texp) {
    std::vector<std::string> vars;
    vars.push_back(tname);
    for (auto& v : s.vars()) vars.push_back(v);
    TSeries out(vars, s.order() + texp);
    for (auto& [e, c] : s.terms()) {
        Expo f;
        f.push_back(texp);
        f.insert(f.end(), e.begin(), e.end());
        out.add_term(f, c);
    }
    return out;
}

}  // namespace detail

/// Diagonal model field sum_i lambda_i z_i d/dz_i on the given variables.
inline ChartField diagonal_field(const std::vector<Rational>& lambda,
                                 const std::vector<std::string>& vars) {
    if (lambda.size() != vars.size()) throw input_error("diagonal field arity mismatch");
    ChartField Z{"local", vars, {}};
    for (size_t i = 0; i < vars.size(); ++i)
        Z.components.push_back(lambda[i] * MPoly::variable(vars, vars[i]));
    return Z;
}

// Normalizing factor f with Zf = gamma(0) - f gamma and f(0) = 1: the symbol
// of fZ is then the constant gamma(0).
inline TSeries normalize_affine(const std::vector<Rational>& lambda, const TSeries& gamma,
                                int order) {
    if (gamma.nvars() != lambda.size()) throw input_error("normalize_affine: arity mismatch");
    Rational g0 = gamma.constant_term();
    if (g0 == 0) throw inadmissible_error("normalize_affine: vanishing symbol at the origin");
    // fhat = f - 1 satisfies Z fhat = (gamma(0) - gamma) - fhat gamma
    std::string t = "t";
    for (auto& v : gamma.vars())
        if (v == "t") t = "tt";
    TSeries F = detail::embed_with_t(TSeries::constant(gamma.vars(), g0, gamma.order()) - gamma, t, 0) -
                detail::embed_with_t(gamma, t, 1);
    TSeries fhat = briot_bouquet_solve(lambda, F, order);
    TSeries f = TSeries::constant(gamma.vars(), 1, order) + fhat;
    // postcondition: the symbol of fZ is constant
    ChartField Z = diagonal_field(lambda, gamma.vars());
    TSeries post = change_generator_affine(gamma, f, Z);
    if (!post.agrees_with(TSeries::constant(gamma.vars(), g0, order), order))
        throw std::logic_error("normalize_affine: postcondition failed");
    return f;
}

// Affine symbol gamma with Z gamma = gamma^2/2 + rho and gamma(0) the chosen
// branch of gamma0^2 = -2 rho(0): an affine structure in the projective class.
inline TSeries normalize_projective(const std::vector<Rational>& lambda, const TSeries& rho,
                                    const Rational& branch, int order) {
    if (rho.nvars() != lambda.size()) throw input_error("normalize_projective: arity mismatch");
    Rational r0 = rho.constant_term();
    if (r0 == 0) throw inadmissible_error("normalize_projective: vanishing symbol at the origin");
    if (branch * branch != -2 * r0)
        throw input_error("normalize_projective: branch does not satisfy gamma0^2 = -2 rho(0)");
    std::string t = "t";
    for (auto& v : rho.vars())
        if (v == "t") t = "tt";
    // ghat = gamma - gamma0: Z ghat = (rho - rho(0)) + gamma0 ghat + ghat^2/2
    TSeries F = detail::embed_with_t(rho - TSeries::constant(rho.vars(), r0, rho.order()), t, 0) +
                branch * detail::embed_with_t(TSeries::constant(rho.vars(), 1, rho.order()), t, 1) +
                Rational(1, 2) * detail::embed_with_t(TSeries::constant(rho.vars(), 1, rho.order()), t, 2);
    TSeries ghat = briot_bouquet_solve(lambda, F, order);
    TSeries gamma = TSeries::constant(rho.vars(), branch, order) + ghat;
    ChartField Z = diagonal_field(lambda, rho.vars());
    TSeries post = affine_to_projective(gamma, Z);
    if (!post.agrees_with(rho.truncated(order), order))
        throw std::logic_error("normalize_projective: postcondition failed");
    return gamma;
}

/// The rational square root of -2 rho(0), when it exists: the two branch choices.
inline std::optional<Rational> projective_branch(const Rational& rho0) {
    return rat_sqrt(-2 * rho0);
}

// ---- small-divisor diagnostic ----

// Exact table of omega'(m) = min_{2 <= |K| <= m} |<K,lambda> - mu| together
// with floating partial sums of 2^{-nu} log omega'(2^{nu+1}). Finitely many
// terms cannot decide convergence, so no verdict is ever emitted.
struct BrjunoDiagnostic {
    std::vector<Rational> lambda;
    Rational mu;
    int m_max;
    struct Row {
        int m;
        Rational omega;
        Expo attained;  // first multi-index attaining the minimum
    };
    std::vector<Row> table;  // m = 2..m_max
    bool resonant = false;
    std::optional<Expo> resonant_K;
    std::vector<double> partial_sums;          // sum_{nu<=j} 2^{-nu} log omega'(2^{nu+1})
    std::vector<double> negated_partial_sums;  // their negatives
    std::string verdict = "inconclusive by construction";
};

inline BrjunoDiagnostic brjuno_diagnostic(const std::vector<Rational>& lambda, const Rational& mu,
                                          int m_max) {
    if (m_max < 4) throw input_error("brjuno_diagnostic: m_max must be at least 4");
    if (lambda.empty()) throw input_error("brjuno_diagnostic: empty eigenvalue vector");
    BrjunoDiagnostic out;
    out.lambda = lambda;
    out.mu = mu;
    out.m_max = m_max;
    std::optional<Rational> best;
    Expo best_K;
    for (int m = 2; m <= m_max; ++m) {
        for (const Expo& K : detail::multi_indices(m, lambda.size())) {
            Rational bracket(0);
            for (size_t i = 0; i < lambda.size(); ++i) bracket += Rational(K[i]) * lambda[i];
            Rational v = rat_abs(bracket - mu);
            if (!best || v < *best) {
                best = v;
                best_K = K;
                if (v == 0 && !out.resonant) {
                    out.resonant = true;
                    out.resonant_K = K;
                }
            }
        }
        out.table.push_back({m, *best, best_K});
    }
    if (!out.resonant) {
        double acc = 0;
        for (int nu = 0; (1 << (nu + 1)) <= m_max; ++nu) {
            const Rational& om = out.table[static_cast<size_t>((1 << (nu + 1)) - 2)].omega;
            double lg = std::log(om.convert_to<double>());
            acc += std::ldexp(lg, -nu);  // 2^-nu * log
            out.partial_sums.push_back(acc);
            out.negated_partial_sums.push_back(-acc);
        }
    }
    return out;
}

}  // namespace folia
