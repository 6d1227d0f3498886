#include "folia/expr.hpp"
#include "folia/geodesic.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace folia;
using folia::testing::Rng;

static const std::vector<std::string> UV{"u", "v"};

static MPoly P(const std::string& s, const std::vector<std::string>& vars) {
    return parse_expression(s, vars);
}

TEST_CASE("lie bracket") {
    std::vector<std::string> xv{"x"};
    SECTION("[d/dx, x d/dx] = d/dx") {
        std::vector<MPoly> X{P("1", xv)}, Y{P("x", xv)};
        REQUIRE(lie_bracket(X, Y) == X);
    }
    SECTION("[X, X] = 0") {
        Rng rng(3);
        std::vector<MPoly> X{rng.poly(UV, 3), rng.poly(UV, 3)};
        for (auto& c : lie_bracket(X, X)) REQUIRE(c.is_zero());
    }
    SECTION("Jacobi identity on random triples") {
        Rng rng(5);
        for (int i = 0; i < 15; ++i) {
            std::vector<MPoly> X{rng.poly(UV, 2), rng.poly(UV, 2)};
            std::vector<MPoly> Y{rng.poly(UV, 2), rng.poly(UV, 2)};
            std::vector<MPoly> Z{rng.poly(UV, 2), rng.poly(UV, 2)};
            auto a = lie_bracket(X, lie_bracket(Y, Z));
            auto b = lie_bracket(Y, lie_bracket(Z, X));
            auto c = lie_bracket(Z, lie_bracket(X, Y));
            for (size_t m = 0; m < 2; ++m) REQUIRE((a[m] + b[m] + c[m]).is_zero());
        }
    }
}

TEST_CASE("affine geodesic lift") {
    SECTION("zero symbol gives zeta Z with a first integral") {
        ChartField Z{"c", UV, {P("u", UV), P("v^2", UV)}};
        Christoffel gamma{StructureKind::affine, MPoly::zero(UV)};
        LiftedField X = build_geodesic_affine(Z, gamma);
        REQUIRE(X.component("zeta").is_zero());
    }
    SECTION("bracket identity holds for random symbols (checked at build)") {
        Rng rng(7);
        for (int i = 0; i < 25; ++i) {
            ChartField Z{"c", UV, {rng.poly(UV, 3), rng.poly(UV, 3)}};
            Christoffel gamma{StructureKind::affine, rng.poly(UV, 3)};
            REQUIRE_NOTHROW(build_geodesic_affine(Z, gamma));
        }
    }
    SECTION("gluing reproduces the transformed lift") {
        Rng rng(9);
        for (int i = 0; i < 20; ++i) {
            ChartField Zj{"c", UV, {rng.poly(UV, 2), rng.poly(UV, 2)}};
            MPoly gamma_j = rng.poly(UV, 2);
            MPoly g = rng.poly(UV, 2);
            if (g.is_zero()) continue;
            LiftedField Xj = build_geodesic_affine(Zj, {StructureKind::affine, gamma_j});
            LiftedField transported = transport_affine_lift(Xj, g);
            ChartField Zi{"c", UV, {g * Zj.components[0], g * Zj.components[1]}};
            MPoly gamma_i = change_generator_affine(gamma_j, g, Zj);
            LiftedField Xi = build_geodesic_affine(Zi, {StructureKind::affine, gamma_i});
            REQUIRE(transported.components == Xi.components);
        }
    }
}

TEST_CASE("projective geodesic lift") {
    SECTION("sl2 relations for zero and random symbols (checked at build)") {
        ChartField Z{"c", UV, {P("u", UV), P("v", UV)}};
        REQUIRE_NOTHROW(build_geodesic_projective(Z, {StructureKind::projective, MPoly::zero(UV)}));
        Rng rng(11);
        for (int i = 0; i < 25; ++i) {
            ChartField Zr{"c", UV, {rng.poly(UV, 3), rng.poly(UV, 3)}};
            Christoffel rho{StructureKind::projective, rng.poly(UV, 3)};
            REQUIRE_NOTHROW(build_geodesic_projective(Zr, rho));
        }
    }
    SECTION("gluing under the rank-two cocycle") {
        Rng rng(13);
        for (int i = 0; i < 20; ++i) {
            ChartField Zj{"c", UV, {rng.poly(UV, 2), rng.poly(UV, 2)}};
            MPoly rho_j = rng.poly(UV, 2);
            MPoly g = rng.poly(UV, 2);
            if (g.is_zero()) continue;
            LiftedField Xj = build_geodesic_projective(Zj, {StructureKind::projective, rho_j});
            LiftedField transported = transport_projective_lift(Xj, g, Zj);
            ChartField Zi{"c", UV, {g * Zj.components[0], g * Zj.components[1]}};
            MPoly rho_i = change_generator_projective(rho_j, g, Zj);
            LiftedField Xi = build_geodesic_projective(Zi, {StructureKind::projective, rho_i});
            REQUIRE(transported.components == Xi.components);
        }
    }
    SECTION("fiber variable collision is rejected") {
        std::vector<std::string> bad{"zeta", "w"};
        ChartField Z{"c", bad, {P("zeta", bad), P("w", bad)}};
        REQUIRE_THROWS_AS(build_geodesic_projective(Z, {StructureKind::projective, MPoly::zero(bad)}),
                          Error);
    }
}

TEST_CASE("cocycle checks") {
    SECTION("single overlap in series mode") {
        Rng rng(17);
        for (int i = 0; i < 10; ++i) {
            ChartField Z{"c", UV, {rng.poly(UV, 2), rng.poly(UV, 2)}};
            TSeries g = rng.series(UV, 12);
            g.set_coeff(Expo{0, 0}, rng.nonzero_rational());
            REQUIRE(cocycle_check_series(g, Z, 10));
        }
    }
    SECTION("standard chart triple of the plane") {
        // overlap coordinates: chart-0 coordinates (u1, u2); the three chart
        // fields of a homogeneous degree-d example expressed there satisfy
        // Z_k = u_k^{1-d} Z_0 with u_0 = 1.
        std::vector<std::string> ov{"u1", "u2"};
        int d = 2;
        std::vector<RatFun> Z0{RatFun{P("u2*(u1^2-1)", ov)}, RatFun{P("u1*(u2^2-1)", ov)}};
        auto scaled = [&](const MPoly& mono) {
            std::vector<RatFun> out;
            for (auto& c : Z0) out.push_back(c / RatFun{mono});
            return out;
        };
        CocycleCheckInput in;
        in.vars = ov;
        in.chart_names = {"a", "b", "c"};
        in.fields.push_back(Z0);
        in.fields.push_back(scaled(P("u1", ov)));  // d-1 = 1 power
        in.fields.push_back(scaled(P("u2", ov)));
        auto mono = [&](const std::string& num, const std::string& den) {
            return RatFun{P(num, ov), P(den, ov)};
        };
        // g_ij with Z_i = g_ij Z_j, for (d-1) = 1
        in.multipliers[{0, 1}] = mono("u1", "1");
        in.multipliers[{1, 0}] = mono("1", "u1");
        in.multipliers[{0, 2}] = mono("u2", "1");
        in.multipliers[{2, 0}] = mono("1", "u2");
        in.multipliers[{1, 2}] = mono("u2", "u1");
        in.multipliers[{2, 1}] = mono("u1", "u2");
        auto rep = cocycle_check(in);
        REQUIRE(rep.all_ok);
        bool saw_triple = false;
        for (auto& id : rep.identities)
            if (id.name.find("triple") != std::string::npos) saw_triple = true;
        REQUIRE(saw_triple);
        (void)d;
    }
    SECTION("perturbed multiplier is reported with a witness") {
        std::vector<std::string> ov{"u1", "u2"};
        std::vector<RatFun> Z0{RatFun{P("u1", ov)}, RatFun{P("u2", ov)}};
        std::vector<RatFun> Z1{RatFun{P("u1^2", ov)}, RatFun{P("u1*u2", ov)}};
        CocycleCheckInput in;
        in.vars = ov;
        in.chart_names = {"a", "b"};
        in.fields = {Z0, Z1};
        in.multipliers[{1, 0}] = RatFun{P("u1", ov)};
        in.multipliers[{0, 1}] = RatFun{P("1", ov), P("u1^2", ov)};  // wrong inverse
        auto rep = cocycle_check(in);
        REQUIRE_FALSE(rep.all_ok);
        bool witnessed = false;
        for (auto& id : rep.identities)
            if (!id.ok && !id.witness.empty()) witnessed = true;
        REQUIRE(witnessed);
    }
}

TEST_CASE("projectivized riccati field") {
    SECTION("constant symbol -1/2") {
        std::vector<std::string> zv{"z"};
        ChartField Z{"c", zv, {P("z", zv)}};
        Christoffel rho{StructureKind::projective, MPoly::constant(zv, Rational(-1, 2))};
        auto charts = projectivized_riccati(Z, rho);
        // u-component: -(u^2/2 - 1/2); equilibria u = +-1
        std::vector<std::string> uz{"z", "u"};
        REQUIRE(charts.u_chart.components.back() ==
                Rational(-1, 2) * P("u^2-1", uz));
        auto eq = riccati_fiber_equilibria(rho, {Rational(0)});
        REQUIRE(eq.eigenvalue_sum == 0);
        REQUIRE(eq.eigenvalue_product == -1);  // = 2 rho(0)
        REQUIRE_FALSE(eq.degenerate);
    }
    SECTION("vanishing symbol flags a degenerate fiber equilibrium") {
        std::vector<std::string> zv{"z"};
        Christoffel rho{StructureKind::projective, MPoly::variable(zv, "z")};
        auto eq = riccati_fiber_equilibria(rho, {Rational(0)});
        REQUIRE(eq.degenerate);
        REQUIRE(eq.eigenvalue_product == 0);
    }
    SECTION("chart consistency is asserted for random symbols") {
        Rng rng(23);
        std::vector<std::string> XY{"x", "y"};
        for (int i = 0; i < 15; ++i) {
            ChartField Z{"c", XY, {rng.poly(XY, 2), rng.poly(XY, 2)}};
            Christoffel rho{StructureKind::projective, rng.poly(XY, 3)};
            auto charts = projectivized_riccati(Z, rho);
            // leafwise the fiber component is quadratic in u: a Riccati field
            size_t upos = charts.u_chart.vars.size() - 1;
            for (auto& [e, c] : charts.u_chart.components.back().terms())
                REQUIRE(e[upos] <= 2);
        }
    }
}
