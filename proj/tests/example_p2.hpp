#pragma once

// The bundled quadratic example on the projective plane: a symmetric
// homogeneous field plus a radial correction, with seven rational
// nondegenerate singular points and nonvanishing induced symbol.

#include "folia/expr.hpp"
#include "folia/foliation.hpp"

namespace folia::testing {

inline ChartField p2_quadratic_field() {
    std::vector<std::string> xs{"x0", "x1", "x2"};
    MPoly ell = parse_expression("x0+x1+x2", xs);
    MPoly p0 = parse_expression("-x1*x2", xs) + parse_expression("x0", xs) * ell;
    MPoly p1 = parse_expression("-x0*x2", xs) + parse_expression("x1", xs) * ell;
    MPoly p2 = parse_expression("-x0*x1", xs) + parse_expression("x2", xs) * ell;
    return ChartField{"ambient", xs, {p0, p1, p2}};
}

struct P2Candidates {
    size_t chart_index;
    std::vector<std::vector<Rational>> points;
};

inline std::vector<P2Candidates> p2_quadratic_candidates() {
    auto q = [](int a, int b) {
        return std::vector<Rational>{Rational(a), Rational(b)};
    };
    return {
        {0, {q(0, 0), q(1, 1), q(1, -1), q(-1, 1), q(-1, -1)}},
        {1, {q(0, 0)}},
        {2, {q(0, 0)}},
    };
}

/// All seven singular records of the induced affine structure.
inline std::vector<SingularPointRecord> p2_quadratic_affine_records(bool wrong_scaling = false) {
    ChartField Zh = p2_quadratic_field();
    std::vector<SingularPointRecord> records;
    for (auto& cand : p2_quadratic_candidates()) {
        auto chart = homogeneous_to_chart(Zh, cand.chart_index);
        Christoffel gamma = chart.gamma;
        if (wrong_scaling)
            gamma = Christoffel{StructureKind::affine, Rational(2) * (*chart.gamma.poly())};
        for (auto& rec : singular_records(chart.field, gamma, cand.points))
            records.push_back(rec);
    }
    return records;
}

/// The same points with the induced projective structure rho = -gamma^2/2 + W gamma.
inline std::vector<SingularPointRecord> p2_quadratic_projective_records() {
    ChartField Zh = p2_quadratic_field();
    std::vector<SingularPointRecord> records;
    for (auto& cand : p2_quadratic_candidates()) {
        auto chart = homogeneous_to_chart(Zh, cand.chart_index);
        Christoffel rho = affine_to_projective(chart.gamma, chart.field);
        for (auto& rec : singular_records(chart.field, rho, cand.points))
            records.push_back(rec);
    }
    return records;
}

/// Degree-1 example: the foliation of a diagonal linear field, used for the
/// Baum-Bott count (its induced affine symbol vanishes identically).
inline std::vector<SingularPointRecord> p2_linear_records() {
    std::vector<std::string> xs{"x0", "x1", "x2"};
    ChartField Zh{"ambient", xs,
                  {MPoly::zero(xs), parse_expression("x1", xs), parse_expression("2*x2", xs)}};
    std::vector<SingularPointRecord> records;
    for (size_t k = 0; k < 3; ++k) {
        auto chart = homogeneous_to_chart(Zh, k);
        auto recs = singular_records(chart.field, chart.gamma, {{Rational(0), Rational(0)}});
        records.push_back(recs[0]);
    }
    return records;
}

}  // namespace folia::testing
