#pragma once

#include "folia/mpoly.hpp"
#include "folia/tseries.hpp"

#include <cstdint>

namespace folia::testing {

// Deterministic generator for property-style tests.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    Rational rational(int num_max = 9, int den_max = 5) {
        int n = range(-num_max, num_max);
        int d = range(1, den_max);
        return Rational(n, d);
    }
    Rational nonzero_rational(int num_max = 9, int den_max = 5) {
        for (;;) {
            Rational q = rational(num_max, den_max);
            if (q != 0) return q;
        }
    }

    MPoly poly(const std::vector<std::string>& vars, int max_degree, int terms = 4) {
        MPoly p = MPoly::zero(vars);
        for (int t = 0; t < terms; ++t) {
            Expo e(vars.size(), 0);
            int budget = range(0, max_degree);
            for (size_t i = 0; i < vars.size() && budget > 0; ++i) {
                int k = range(0, budget);
                e[i] = k;
                budget -= k;
            }
            p.add_term(e, rational());
        }
        return p;
    }

    /// Random univariate series with given order; optionally fixed low-order data.
    TSeries series1(const std::string& var, int order, bool zero_const, bool unit_deriv) {
        TSeries s = TSeries::zero({var}, order);
        for (int k = 0; k <= order; ++k) s.set_coeff(Expo{k}, rational());
        if (zero_const) s.set_coeff(Expo{0}, Rational(0));
        if (unit_deriv) s.set_coeff(Expo{1}, nonzero_rational());
        return s;
    }

    TSeries series(const std::vector<std::string>& vars, int order, bool zero_const = false) {
        TSeries s = TSeries::zero(vars, order);
        MPoly p = poly(vars, order, 2 * order);
        for (auto& [e, c] : p.terms()) s.set_coeff(e, c);
        if (zero_const) s.set_coeff(Expo(vars.size(), 0), Rational(0));
        return s;
    }
};

}  // namespace folia::testing
