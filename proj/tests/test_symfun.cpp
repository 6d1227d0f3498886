#include "folia/expr.hpp"
#include "folia/symfun.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace folia;
using folia::testing::Rng;

static std::vector<std::string> xvars(int k) {
    std::vector<std::string> v;
    for (int i = 1; i <= k; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

static SymPoly S(const std::string& text, int k) {
    return SymPoly(k, parse_expression(text, xvars(k)));
}

/// Substitute e_i(x) for s_i in an elementary-basis polynomial and expand.
static MPoly expand_elementary(const MPoly& elem, int k) {
    auto xs = xvars(k);
    MPoly acc = MPoly::zero(xs);
    for (auto& [e, c] : elem.terms()) {
        MPoly t = MPoly::constant(xs, c);
        for (size_t i = 0; i < e.size(); ++i)
            for (int rep = 0; rep < e[i]; ++rep)
                t = t * elementary_symmetric(xs, static_cast<int>(i) + 1);
        acc += t;
    }
    return acc;
}

/// Generate a random symmetric polynomial by symmetrizing a random one.
static SymPoly random_symmetric(Rng& rng, int k, int degree) {
    auto xs = xvars(k);
    MPoly base = MPoly::zero(xs);
    // a couple of random monomials of the right degree
    for (int t = 0; t < 3; ++t) {
        Expo e(static_cast<size_t>(k), 0);
        int budget = degree;
        for (size_t i = 0; i < e.size(); ++i) {
            int take = (i + 1 == e.size()) ? budget : rng.range(0, budget);
            e[i] = take;
            budget -= take;
        }
        base.add_term(e, rng.rational());
    }
    // symmetrize over all permutations
    std::vector<size_t> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), size_t{0});
    MPoly sym = MPoly::zero(xs);
    do {
        sym += base.permute_vars(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SymPoly(k, sym);
}

TEST_CASE("to_elementary on basic identities") {
    REQUIRE(S("x1+x2", 2).elementary_form() == parse_expression("s1", {"s1", "s2"}));
    REQUIRE(S("x1*x2", 2).elementary_form() == parse_expression("s2", {"s1", "s2"}));
    // oracle: expand s1^2 - 2*s2 and compare against the input
    MPoly expect = parse_expression("s1^2-2*s2", {"s1", "s2"});
    REQUIRE(expand_elementary(expect, 2) == parse_expression("x1^2+x2^2", xvars(2)));
    REQUIRE(S("x1^2+x2^2", 2).elementary_form() == expect);
}

TEST_CASE("non-symmetric input is rejected") {
    REQUIRE_THROWS_AS(S("x1^2+x2", 2), Error);
    REQUIRE_THROWS_AS(S("x1", 2), Error);
}

TEST_CASE("round trip on random symmetric polynomials") {
    Rng rng(17);
    for (int k = 2; k <= 4; ++k)
        for (int d = 1; d <= 6; ++d) {
            SymPoly phi = random_symmetric(rng, k, d);
            REQUIRE(expand_elementary(phi.elementary_form(), k) == phi.monomial_form());
        }
}

TEST_CASE("hat decomposition") {
    SECTION("power sum in three variables") {
        auto hd = hat_decompose(S("x1^3+x2^3+x3^3", 3));
        REQUIRE(hd.n == 2);
        REQUIRE(hd.hat(0).monomial_form() == parse_expression("1", xvars(2)));
        REQUIRE(hd.hat(3).monomial_form() == parse_expression("x1^3+x2^3", xvars(2)));
        REQUIRE(hd.hat(1).is_zero());
        REQUIRE(hd.hat(2).is_zero());
    }
    SECTION("mixed power sum in four variables") {
        // phi = sum_{i != j} x_i^3 x_j
        std::string txt;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                if (i == j) continue;
                if (!txt.empty()) txt += "+";
                txt += "x" + std::to_string(i) + "^3*x" + std::to_string(j);
            }
        auto hd = hat_decompose(S(txt, 4));
        REQUIRE(hd.n == 3);
        REQUIRE(hd.hat(0).is_zero());
        REQUIRE(hd.hat(1).monomial_form() == parse_expression("x1+x2+x3", xvars(3)));
        REQUIRE(hd.hat(2).is_zero());
        REQUIRE(hd.hat(3).monomial_form() == parse_expression("x1^3+x2^3+x3^3", xvars(3)));
        // the x4-free part stays in hat_4
        REQUIRE_FALSE(hd.hat(4).is_zero());
    }
    SECTION("product of all variables") {
        auto hd = hat_decompose(S("x1*x2*x3", 3));
        REQUIRE(hd.hat(2).monomial_form() == parse_expression("x1*x2", xvars(2)));
        REQUIRE(hd.hat(0).is_zero());
        REQUIRE(hd.hat(1).is_zero());
        REQUIRE(hd.hat(3).is_zero());
    }
    SECTION("wrong degree rejected") {
        REQUIRE_THROWS_AS(hat_decompose(S("x1*x2*x3", 4)), Error);
    }
    SECTION("reconstruction on random symmetric polynomials") {
        Rng rng(23);
        for (int n = 1; n <= 3; ++n) {
            SymPoly phi = random_symmetric(rng, n + 1, n + 1);
            REQUIRE_NOTHROW(hat_decompose(phi));  // ctor asserts reconstruction
        }
    }
}

TEST_CASE("odd part") {
    SECTION("pure power sum, n even") {
        SymPoly phi = S("x1^3+x2^3+x3^3", 3);
        MPoly expect = parse_expression("x3^3", xvars(3));
        REQUIRE(odd_part(phi) == expect);
    }
    SECTION("even polynomial has zero odd part") {
        SymPoly phi = S("x1^2+x2^2", 2);  // degree 2, even in x2
        REQUIRE(odd_part(phi).is_zero());
    }
    SECTION("reflection oracle on random symmetric polynomials") {
        Rng rng(31);
        for (int trial = 0; trial < 8; ++trial) {
            int k = rng.range(2, 4);
            SymPoly phi = random_symmetric(rng, k, k);
            // (phi(..., x_k) - phi(..., -x_k)) / 2
            MPoly reflected = MPoly::zero(phi.monomial_form().vars());
            size_t last = static_cast<size_t>(k) - 1;
            for (auto& [e, c] : phi.monomial_form().terms())
                reflected.add_term(e, e[last] % 2 ? c : -c);
            MPoly oracle = Rational(1, 2) * (phi.monomial_form() + reflected);
            REQUIRE(odd_part(phi) == oracle);
        }
    }
    SECTION("odd part agrees with the hat-decomposition formula") {
        Rng rng(37);
        for (int n = 1; n <= 3; ++n) {
            SymPoly phi = random_symmetric(rng, n + 1, n + 1);
            auto hd = hat_decompose(phi);
            MPoly acc = MPoly::zero(phi.monomial_form().vars());
            for (int j = 0; 2 * j <= n; ++j) {
                for (auto& [e, c] : hd.hat(n - 2 * j).monomial_form().terms()) {
                    Expo f(e);
                    f.push_back(2 * j + 1);
                    acc.add_term(f, c);
                }
            }
            REQUIRE(odd_part(phi) == acc);
        }
    }
}

TEST_CASE("evaluation from characteristic data") {
    // A = diag(2,3): sigma = (5,6)
    std::vector<Rational> sigma{Rational(5), Rational(6)};
    REQUIRE(eval_from_charpoly(S("x1*x2", 2), sigma) == 6);
    REQUIRE(eval_from_charpoly(S("x1^2+x2^2", 2), sigma) == 13);
    REQUIRE(eval_from_charpoly(S("x1+x2", 2), sigma) == 5);
    REQUIRE_THROWS_AS(eval_from_charpoly(S("x1+x2+x3", 3), sigma), Error);

    SECTION("agrees with direct evaluation for diagonal matrices") {
        Rng rng(41);
        for (int trial = 0; trial < 10; ++trial) {
            int k = rng.range(2, 3);
            std::vector<Rational> eig;
            for (int i = 0; i < k; ++i) eig.push_back(rng.rational());
            std::vector<Rational> sig;
            for (int i = 1; i <= k; ++i)
                sig.push_back(elementary_symmetric(xvars(k), i).eval(eig));
            SymPoly phi = random_symmetric(rng, k, rng.range(1, 4));
            REQUIRE(eval_from_charpoly(phi, sig) == phi.monomial_form().eval(eig));
        }
    }
}
