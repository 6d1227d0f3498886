#pragma once

#include "folia/mpoly.hpp"

#include <numeric>

namespace folia {

/// e_i(x_1..x_k) as a polynomial over the given variables.
inline MPoly elementary_symmetric(const std::vector<std::string>& vars, int i) {
    int k = static_cast<int>(vars.size());
    if (i < 0 || i > k) return MPoly::zero(vars);
    if (i == 0) return MPoly::constant(vars, 1);
    MPoly acc = MPoly::zero(vars);
    std::vector<int> idx(static_cast<size_t>(i));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        Expo e(vars.size(), 0);
        for (int j : idx) e[static_cast<size_t>(j)] = 1;
        acc.add_term(e, 1);
        int pos = i - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == k - i + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < i; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return acc;
}

namespace detail {

inline void partitions_rec(int d, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(d, max_part); p >= 1; --p) {
        if (!cur.empty() && p > cur.back()) continue;
        cur.push_back(p);
        partitions_rec(d - p, max_part, cur, out);
        cur.pop_back();
    }
}

/// Partitions of d with parts in 1..max_part, parts weakly decreasing.
inline std::vector<std::vector<int>> partitions(int d, int max_part) {
    std::vector<std::vector<int>> out;
    if (d == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur;
    partitions_rec(d, max_part, cur, out);
    return out;
}

inline std::vector<std::string> sigma_vars(size_t k) {
    std::vector<std::string> v;
    for (size_t i = 1; i <= k; ++i) v.push_back("s" + std::to_string(i));
    return v;
}

}  // namespace detail

// Symmetric homogeneous polynomial stored in both the monomial and the
// elementary-symmetric basis. Symmetry is verified at construction; the
// elementary form is computed eagerly so values stay freely shareable.
class SymPoly {
public:
    SymPoly(int arity, MPoly monomial_form) : arity_(arity), mono_(std::move(monomial_form)) {
        if (static_cast<int>(mono_.nvars()) != arity_)
            throw input_error("SymPoly: arity does not match variable count");
        auto hd = mono_.homogeneous_degree();
        if (!hd) throw input_error("SymPoly: polynomial is not homogeneous");
        degree_ = mono_.is_zero() ? 0 : *hd;
        check_symmetry();
        elem_ = solve_elementary();
    }

    SymPoly(int arity, MPoly monomial_form, int declared_degree)
        : SymPoly(arity, std::move(monomial_form)) {
        if (!mono_.is_zero() && degree_ != declared_degree)
            throw input_error("SymPoly: wrong degree");
        degree_ = declared_degree;
    }

    int arity() const { return arity_; }
    int degree() const { return degree_; }
    const MPoly& monomial_form() const { return mono_; }

    /// The polynomial phi~ with phi~(e_1(x),...,e_k(x)) = phi(x), in variables s1..sk.
    const MPoly& elementary_form() const { return elem_; }

    bool is_zero() const { return mono_.is_zero(); }

    /// Value of phi at the eigenvalue multiset of a matrix given by its
    /// characteristic data sigma_i, computed through the elementary form.
    Rational eval_from_charpoly(const std::vector<Rational>& sigma) const {
        if (static_cast<int>(sigma.size()) != arity_)
            throw input_error("eval_from_charpoly: arity mismatch");
        return elem_.eval(sigma);
    }

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.arity_ == b.arity_ && a.mono_ == b.mono_;
    }

private:
    void check_symmetry() const {
        for (size_t i = 0; i + 1 < mono_.nvars(); ++i) {
            std::vector<size_t> perm(mono_.nvars());
            std::iota(perm.begin(), perm.end(), size_t{0});
            std::swap(perm[i], perm[i + 1]);
            if (mono_.permute_vars(perm) != mono_)
                throw input_error("SymPoly: polynomial is not symmetric");
        }
    }

    // Gaussian elimination over the graded monomial basis: solve
    // sum_mu c_mu E_mu = phi with E_mu products of elementary symmetrics.
    MPoly solve_elementary() const {
        std::vector<std::string> svars = detail::sigma_vars(static_cast<size_t>(arity_));
        if (mono_.is_zero()) return MPoly::zero(svars);
        if (degree_ == 0) return MPoly::constant(svars, mono_.constant_term());
        auto parts = detail::partitions(degree_, arity_);
        std::vector<MPoly> expansions;
        expansions.reserve(parts.size());
        std::vector<MPoly> evars;
        for (int i = 1; i <= arity_; ++i) evars.push_back(elementary_symmetric(mono_.vars(), i));
        for (auto& mu : parts) {
            MPoly prod = MPoly::constant(mono_.vars(), 1);
            for (int p : mu) prod = prod * evars[static_cast<size_t>(p - 1)];
            expansions.push_back(std::move(prod));
        }
        // collect row monomials
        std::map<Expo, size_t, GrlexLess> row_of;
        for (auto& e : expansions)
            for (auto& [m, c] : e.terms())
                row_of.emplace(m, row_of.size());
        for (auto& [m, c] : mono_.terms()) row_of.emplace(m, row_of.size());
        size_t rows = row_of.size(), cols = parts.size();
        std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1, Rational(0)));
        for (size_t j = 0; j < cols; ++j)
            for (auto& [m, c] : expansions[j].terms()) A[row_of[m]][j] = c;
        for (auto& [m, c] : mono_.terms()) A[row_of[m]][cols] = c;
        // exact row reduction
        std::vector<size_t> pivot_row(cols, SIZE_MAX);
        size_t r = 0;
        for (size_t j = 0; j < cols && r < rows; ++j) {
            size_t p = r;
            while (p < rows && A[p][j] == 0) ++p;
            if (p == rows) continue;
            std::swap(A[p], A[r]);
            Rational inv = Rational(1) / A[r][j];
            for (size_t c = j; c <= cols; ++c) A[r][c] *= inv;
            for (size_t i = 0; i < rows; ++i) {
                if (i == r || A[i][j] == 0) continue;
                Rational f = A[i][j];
                for (size_t c = j; c <= cols; ++c) A[i][c] -= f * A[r][c];
            }
            pivot_row[j] = r;
            ++r;
        }
        for (size_t i = r; i < rows; ++i)
            if (A[i][cols] != 0)
                throw input_error("SymPoly: elementary-basis conversion is inconsistent");
        MPoly out = MPoly::zero(svars);
        for (size_t j = 0; j < cols; ++j) {
            Rational c = pivot_row[j] == SIZE_MAX ? Rational(0) : A[pivot_row[j]][cols];
            if (c == 0) continue;
            Expo e(svars.size(), 0);
            for (int p : parts[j]) e[static_cast<size_t>(p - 1)] += 1;
            out.add_term(e, c);
        }
        return out;
    }

    int arity_;
    int degree_ = 0;
    MPoly mono_;
    MPoly elem_;
};

/// to_elementary as a standalone operation on a raw polynomial (symmetry checked).
inline MPoly to_elementary(const MPoly& phi) {
    return SymPoly(static_cast<int>(phi.nvars()), phi).elementary_form();
}

// The decomposition of a degree-(n+1) symmetric polynomial in n+1 variables
// by powers of the distinguished last variable:
//   phi = sum_i x_{n+1}^{n+1-i} hat_i(x_1..x_n),  hat_i homogeneous of degree i.
struct HatDecomposition {
    int n;
    std::vector<SymPoly> hats;  // index 0..n+1

    const SymPoly& hat(int i) const { return hats.at(static_cast<size_t>(i)); }
};

inline HatDecomposition hat_decompose(const SymPoly& phi) {
    int n = phi.arity() - 1;
    if (n < 1) throw input_error("hat_decompose: need at least two variables");
    if (!phi.is_zero() && phi.degree() != n + 1)
        throw input_error("hat_decompose: degree must be arity");
    std::vector<std::string> sub(phi.monomial_form().vars().begin(),
                                 phi.monomial_form().vars().end() - 1);
    std::vector<MPoly> parts(static_cast<size_t>(n) + 2, MPoly::zero(sub));
    size_t last = static_cast<size_t>(n);
    for (auto& [e, c] : phi.monomial_form().terms()) {
        int i = (n + 1) - e[last];
        Expo d(e.begin(), e.end() - 1);
        parts[static_cast<size_t>(i)].add_term(d, c);
    }
    HatDecomposition out{n, {}};
    for (int i = 0; i <= n + 1; ++i)
        out.hats.emplace_back(n, parts[static_cast<size_t>(i)], i);
    // reconstruction identity is exact by construction; verify anyway
    MPoly recon = MPoly::zero(phi.monomial_form().vars());
    for (int i = 0; i <= n + 1; ++i) {
        MPoly lifted = MPoly::zero(phi.monomial_form().vars());
        for (auto& [e, c] : out.hats[static_cast<size_t>(i)].monomial_form().terms()) {
            Expo f(e);
            f.push_back(n + 1 - i);
            lifted.add_term(f, c);
        }
        recon += lifted;
    }
    if (recon != phi.monomial_form())
        throw input_error("hat_decompose: reconstruction identity failed");
    return out;
}

/// Odd part of phi in the last variable: the terms with odd exponent there.
inline MPoly odd_part(const SymPoly& phi) {
    MPoly out = MPoly::zero(phi.monomial_form().vars());
    size_t last = phi.monomial_form().nvars() - 1;
    for (auto& [e, c] : phi.monomial_form().terms())
        if (e[last] % 2 == 1) out.add_term(e, c);
    return out;
}

/// phi evaluated on the characteristic data of a matrix: phi~(sigma_1..sigma_k).
inline Rational eval_from_charpoly(const SymPoly& phi, const std::vector<Rational>& sigma) {
    return phi.eval_from_charpoly(sigma);
}

}  // namespace folia
