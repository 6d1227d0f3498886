#pragma once

#include "folia/chern.hpp"
#include "folia/foliation.hpp"

#include <functional>
#include <thread>

namespace folia {

// ---- per-singularity contributions ----

/// Affine index contribution (-1)^n gamma(p)^n / det(A_p); rational, no
/// eigenvalues needed.
inline Rational affine_contribution(const SingularPointRecord& rec) {
    if (rec.kind != StructureKind::affine) throw input_error("affine record required");
    if (!rec.nondegenerate) throw inadmissible_error("degenerate Jacobian");
    if (rec.symbol_value == 0) throw inadmissible_error("vanishing Christoffel symbol");
    int n = static_cast<int>(rec.dimension());
    Rational sign = n % 2 ? Rational(-1) : Rational(1);
    return sign * rat_pow(rec.symbol_value, n) / rec.det();
}

/// Projective index contribution sum_j (-2 rho(p))^j hat_{n-2j}(lambda) / det(A_p),
/// evaluated through characteristic data; even in the square-root branch.
inline Rational projective_contribution(const SingularPointRecord& rec,
                                        const HatDecomposition& hd) {
    if (rec.kind != StructureKind::projective) throw input_error("projective record required");
    if (!rec.nondegenerate) throw inadmissible_error("degenerate Jacobian");
    if (rec.symbol_value == 0) throw inadmissible_error("vanishing Christoffel symbol");
    int n = static_cast<int>(rec.dimension());
    if (hd.n != n) throw input_error("projective_contribution: dimension mismatch");
    Rational acc(0);
    for (int j = 0; 2 * j <= n; ++j)
        acc += rat_pow(-2 * rec.symbol_value, j) *
               eval_from_charpoly(hd.hat(n - 2 * j), rec.sigma);
    return acc / rec.det();
}

inline Rational projective_contribution(const SingularPointRecord& rec, const SymPoly& phi) {
    return projective_contribution(rec, hat_decompose(phi));
}

/// Baum-Bott contribution phi(A_p)/det(A_p) for phi of degree n.
inline Rational baum_bott_contribution(const SingularPointRecord& rec, const SymPoly& phi) {
    if (!rec.nondegenerate) throw inadmissible_error("degenerate Jacobian");
    int n = static_cast<int>(rec.dimension());
    if (phi.arity() != n || (!phi.is_zero() && phi.degree() != n))
        throw input_error("baum_bott_contribution: phi must have degree n in n variables");
    return eval_from_charpoly(phi, rec.sigma) / rec.det();
}

/// Lehmann residue b0^n / det(A_p) in the non-degenerate closed form.
inline Rational lehmann_residue(const Rational& b0, const SingularPointRecord& rec) {
    if (!rec.nondegenerate) throw inadmissible_error("degenerate Jacobian");
    return rat_pow(b0, static_cast<int>(rec.dimension())) / rec.det();
}

// ---- index reports ----

enum class Verdict { match, mismatch, not_applicable };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        default: return "not-applicable";
    }
}

struct IndexReport {
    struct PointEntry {
        std::string chart;
        std::vector<Rational> point;
        bool admissible = false;
        std::string reason;  // why inadmissible
        Rational contribution;
    };
    std::string theorem;
    std::vector<PointEntry> per_point;
    Rational lhs, rhs;
    Verdict verdict = Verdict::not_applicable;
    std::string convention;
    std::string note;
};

namespace detail {

inline IndexReport assemble_report(
    std::string theorem, const std::vector<SingularPointRecord>& records, const Rational& rhs,
    std::string convention, bool need_symbol,
    const std::function<Rational(const SingularPointRecord&)>& contribution, unsigned jobs) {
    IndexReport rep;
    rep.theorem = std::move(theorem);
    rep.rhs = rhs;
    rep.convention = std::move(convention);
    rep.per_point.resize(records.size());

    auto work = [&](size_t i) {
        auto& entry = rep.per_point[i];
        const auto& rec = records[i];
        entry.chart = rec.chart;
        entry.point = rec.point;
        if (!rec.nondegenerate) {
            entry.reason = "degenerate Jacobian";
            return;
        }
        if (need_symbol && rec.symbol_value == 0) {
            entry.reason = "vanishing Christoffel symbol";
            return;
        }
        entry.admissible = true;
        entry.contribution = contribution(rec);
    };
    if (jobs > 1 && records.size() > 1) {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (unsigned t = 0; t < std::min<size_t>(jobs, records.size()); ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    } else {
        for (size_t i = 0; i < records.size(); ++i) work(i);
    }

    bool all_admissible = true;
    Rational lhs(0);
    for (auto& e : rep.per_point) {
        if (e.admissible)
            lhs += e.contribution;
        else
            all_admissible = false;
    }
    rep.lhs = lhs;
    if (!all_admissible) {
        rep.verdict = Verdict::not_applicable;
        rep.note =
            "inadmissible singular point present; vanishing-symbol points would contribute "
            "a Baum-Bott term of hat_n type, which is out of scope";
    } else {
        rep.verdict = (rep.lhs == rep.rhs) ? Verdict::match : Verdict::mismatch;
    }
    return rep;
}

}  // namespace detail

/// Exact comparison of the affine index sum against int c1^n(T_F).
inline IndexReport verify_affine_index(const std::vector<SingularPointRecord>& records,
                                       const RingPtr& ring, const RingElement& c1tf,
                                       std::string convention, unsigned jobs = 1) {
    size_t n = static_cast<size_t>(ring->dimension());
    for (auto& r : records) {
        if (r.kind != StructureKind::affine) throw input_error("affine records required");
        if (r.dimension() != n) throw input_error("record dimension does not match the manifold");
    }
    return detail::assemble_report("affine index", records, rhs_affine(ring, c1tf),
                                   std::move(convention), true, affine_contribution, jobs);
}

/// Exact comparison of the projective index sum against the hat-decomposition sum.
inline IndexReport verify_projective_index(const std::vector<SingularPointRecord>& records,
                                           const RingPtr& ring, const RingElement& c1tf,
                                           const RingElement& cTM, const SymPoly& phi,
                                           std::string convention, unsigned jobs = 1) {
    size_t n = static_cast<size_t>(ring->dimension());
    for (auto& r : records) {
        if (r.kind != StructureKind::projective) throw input_error("projective records required");
        if (r.dimension() != n) throw input_error("record dimension does not match the manifold");
    }
    HatDecomposition hd = hat_decompose(phi);  // validates arity/degree
    return detail::assemble_report(
        "projective index", records, rhs_projective(ring, c1tf, cTM, phi), std::move(convention),
        true, [&](const SingularPointRecord& r) { return projective_contribution(r, hd); }, jobs);
}

/// Exact comparison of sum phi(A_p)/det(A_p) against int phi(c(TM - T_F)).
inline IndexReport verify_baum_bott(const std::vector<SingularPointRecord>& records,
                                    const RingPtr& ring, const RingElement& c1tf,
                                    const RingElement& cTM, const SymPoly& phi,
                                    std::string convention, unsigned jobs = 1) {
    size_t n = static_cast<size_t>(ring->dimension());
    for (auto& r : records)
        if (r.dimension() != n) throw input_error("record dimension does not match the manifold");
    return detail::assemble_report(
        "baum-bott", records, rhs_baum_bott(ring, c1tf, cTM, phi), std::move(convention), false,
        [&](const SingularPointRecord& r) { return baum_bott_contribution(r, phi); }, jobs);
}

}  // namespace folia
