#pragma once

#include "folia/rational.hpp"

#include <vector>

namespace folia {

// Small dense matrix over the rationals; just enough linear algebra for
// Jacobians and characteristic data.
class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(size_t n) : n_(n), a_(n * n, Rational(0)) {}
    QMatrix(size_t n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != n * n) throw input_error("matrix entry count mismatch");
    }

    static QMatrix diagonal(const std::vector<Rational>& d) {
        QMatrix m(d.size());
        for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    size_t size() const { return n_; }
    Rational& operator()(size_t i, size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * n_ + j]; }

    Rational det() const {
        QMatrix m = *this;
        Rational d(1);
        for (size_t col = 0; col < n_; ++col) {
            size_t piv = col;
            while (piv < n_ && m(piv, col) == 0) ++piv;
            if (piv == n_) return Rational(0);
            if (piv != col) {
                for (size_t j = 0; j < n_; ++j) std::swap(m(piv, j), m(col, j));
                d = -d;
            }
            d *= m(col, col);
            for (size_t i = col + 1; i < n_; ++i) {
                if (m(i, col) == 0) continue;
                Rational f = m(i, col) / m(col, col);
                for (size_t j = col; j < n_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return d;
    }

    /// Unique solution of A x = b, when A is invertible.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const {
        if (b.size() != n_) throw input_error("solve: dimension mismatch");
        QMatrix m = *this;
        std::vector<Rational> rhs = b;
        for (size_t col = 0; col < n_; ++col) {
            size_t piv = col;
            while (piv < n_ && m(piv, col) == 0) ++piv;
            if (piv == n_) return std::nullopt;
            if (piv != col) {
                for (size_t j = 0; j < n_; ++j) std::swap(m(piv, j), m(col, j));
                std::swap(rhs[piv], rhs[col]);
            }
            Rational inv = Rational(1) / m(col, col);
            for (size_t j = col; j < n_; ++j) m(col, j) *= inv;
            rhs[col] *= inv;
            for (size_t i = 0; i < n_; ++i) {
                if (i == col || m(i, col) == 0) continue;
                Rational f = m(i, col);
                for (size_t j = col; j < n_; ++j) m(i, j) -= f * m(col, j);
                rhs[i] -= f * rhs[col];
            }
        }
        return rhs;
    }

    /// sigma_1..sigma_n with det(I + tA) = sum_i sigma_i t^i (sigma_0 = 1);
    /// sigma_i is the sum of the principal i x i minors.
    std::vector<Rational> char_sigma() const {
        std::vector<Rational> sigma(n_, Rational(0));
        std::vector<size_t> idx;
        enumerate_minors(idx, 0, sigma);
        return sigma;
    }

    /// All eigenvalues, when the characteristic polynomial splits over Q.
    std::optional<std::vector<Rational>> rational_eigenvalues() const {
        // det(tI - A) = sum_i (-1)^i sigma_i t^{n-i}
        std::vector<Rational> sigma = char_sigma();
        std::vector<Rational> poly(n_ + 1);  // poly[k] = coefficient of t^k
        poly[n_] = 1;
        for (size_t i = 1; i <= n_; ++i)
            poly[n_ - i] = (i % 2 ? Rational(-sigma[i - 1]) : sigma[i - 1]);
        // clear denominators
        Int lcm = 1;
        for (auto& c : poly) lcm = boost::multiprecision::lcm(lcm, denominator(c));
        std::vector<Int> ip(poly.size());
        for (size_t k = 0; k < poly.size(); ++k)
            ip[k] = numerator(poly[k]) * (lcm / denominator(poly[k]));
        std::vector<Rational> roots;
        // deflate rational roots p/q with p | ip[0], q | ip[deg]
        size_t deg = n_;
        for (;;) {
            if (deg == 0) break;
            // strip t = 0 roots
            if (ip[0] == 0) {
                roots.emplace_back(0);
                for (size_t k = 0; k < deg; ++k) ip[k] = ip[k + 1];
                --deg;
                continue;
            }
            auto p_divs = small_divisors(ip[0]);
            auto q_divs = small_divisors(ip[deg]);
            if (!p_divs || !q_divs) return std::nullopt;
            bool found = false;
            for (const Int& p : *p_divs) {
                for (const Int& q : *q_divs) {
                    for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                        Rational r(sign * p, q);
                        if (eval_int_poly(ip, deg, r) == 0) {
                            roots.push_back(r);
                            deflate(ip, deg, r);
                            --deg;
                            found = true;
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (!found) return std::nullopt;  // irrational or complex spectrum
        }
        return roots;
    }

private:
    void enumerate_minors(std::vector<size_t>& idx, size_t start, std::vector<Rational>& sigma) const {
        for (size_t i = start; i < n_; ++i) {
            idx.push_back(i);
            QMatrix sub(idx.size());
            for (size_t r = 0; r < idx.size(); ++r)
                for (size_t c = 0; c < idx.size(); ++c) sub(r, c) = (*this)(idx[r], idx[c]);
            sigma[idx.size() - 1] += sub.det();
            enumerate_minors(idx, i + 1, sigma);
            idx.pop_back();
        }
    }

    static std::optional<std::vector<Int>> small_divisors(const Int& v) {
        Int a = abs(v);
        if (a > 1'000'000) return std::nullopt;  // keep the search desk scale
        std::vector<Int> divs;
        for (Int d = 1; d * d <= a; ++d) {
            if (a % d == 0) {
                divs.push_back(d);
                if (d * d != a) divs.push_back(a / d);
            }
        }
        return divs;
    }

    static Rational eval_int_poly(const std::vector<Int>& c, size_t deg, const Rational& x) {
        Rational acc(0);
        for (size_t k = deg + 1; k-- > 0;) acc = acc * x + Rational(c[k]);
        return acc;
    }

    // synthetic division by (t - r); assumes r is a root
    static void deflate(std::vector<Int>& c, size_t deg, const Rational& r) {
        std::vector<Rational> q(deg);
        Rational carry(0);
        for (size_t k = deg; k-- > 0;) {
            carry = Rational(c[k + 1]) + carry * r;
            q[k] = carry;
        }
        Int lcm = 1;
        for (auto& v : q) lcm = boost::multiprecision::lcm(lcm, denominator(v));
        for (size_t k = 0; k < deg; ++k) c[k] = numerator(q[k]) * (lcm / denominator(q[k]));
        c[deg] = 0;
    }

    size_t n_ = 0;
    std::vector<Rational> a_;
};

}  // namespace folia
