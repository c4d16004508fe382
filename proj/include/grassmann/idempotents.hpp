#pragma once

#include "grassmann/algebra.hpp"
#include "symcore/difference.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace grassmann {

/// All a-element subsets of {0,..,N-1}, lexicographic.
inline std::vector<std::vector<int>> subsets_of_size(int N, int a) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == a) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i <= N - (a - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

struct Idempotent {
    std::vector<int> subset;      // indices into Sigma
    GrassmannElt<Rat> element;    // coefficients over Q
};

/// Idempotents of the Sigma-specialized algebra: the decoration algebra on an
/// a-facet splits into one-dimensional summands indexed by a-subsets of
/// Sigma; e_A is the Lagrange-type solution of evaluation-at-subsets.
inline std::vector<Idempotent> idempotents(const std::vector<Rat>& sigma, int a) {
    const int N = static_cast<int>(sigma.size());
    {
        std::set<Rat> distinct(sigma.begin(), sigma.end());
        if (static_cast<int>(distinct.size()) != N)
            throw std::invalid_argument("idempotents: Sigma entries must be pairwise distinct");
    }
    auto algebra = make_numeric_algebra(N, a, sigma);
    auto basis = algebra.basis();
    auto subsets = subsets_of_size(N, a);
    const size_t n = basis.size();
    if (subsets.size() != n) throw std::logic_error("idempotents: basis/subset count mismatch");

    // M[s][j] = s_{basis[j]} evaluated at the subset's values; solve M C = I.
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (size_t s = 0; s < n; ++s) {
        std::vector<Rat> values;
        for (int i : subsets[s]) values.push_back(sigma[static_cast<size_t>(i)]);
        for (size_t j = 0; j < n; ++j) m[s][j] = symcore::schur_value(basis[j], values);
        m[s][n + s] = 1;
    }
    // Gauss-Jordan over Q
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("idempotents: singular evaluation matrix");
        std::swap(m[piv], m[col]);
        Rat d = m[col][col];
        for (size_t j = 0; j < 2 * n; ++j) m[col][j] /= d;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    // column s of the inverse gives the coefficients of e_{subset s}
    std::vector<Idempotent> out;
    for (size_t s = 0; s < n; ++s) {
        Idempotent e;
        e.subset = subsets[s];
        for (size_t j = 0; j < n; ++j) e.element.add(basis[j], m[j][n + s]);
        out.push_back(std::move(e));
    }
    return out;
}

struct SymbolicIdempotents {
    std::vector<std::vector<int>> subsets;                  // index order of the summands
    std::vector<GrassmannElt<MultiPoly>> numerators;        // e_A = numerator / denominator
    MultiPoly denominator;                                  // shared: det of the evaluation matrix
};

/// Idempotents over indeterminates lambda_1..lambda_N, as cleared fractions:
/// fraction-free Gaussian elimination (Bareiss) keeps every intermediate in
/// Z[lambda], and all e_A share the system determinant as denominator.
inline SymbolicIdempotents symbolic_idempotents(int N, int a) {
    auto algebra = make_symbolic_sigma_algebra(N, a);
    auto basis = algebra.basis();
    auto subsets = subsets_of_size(N, a);
    const size_t n = basis.size();

    auto schur_at_subset = [&](const Partition& p, const std::vector<int>& subset) {
        // s_p in the variables {lambda_i : i in subset}
        MultiPoly out(N);
        for (const auto& [expo, c] : symcore::schur_monomials(p, a)) {
            std::vector<int> full(static_cast<size_t>(N), 0);
            for (size_t k = 0; k < expo.size(); ++k)
                full[static_cast<size_t>(subset[k])] = expo[k];
            out.add_term(full, Rat(c.get_si()));
        }
        return out;
    };

    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(N)));
    for (size_t s = 0; s < n; ++s)
        for (size_t j = 0; j < n; ++j) m[s][j] = schur_at_subset(basis[j], subsets[s]);

    // Fraction-free (Bareiss) determinant; every division is exact.
    auto bareiss_det = [N](std::vector<std::vector<MultiPoly>> w) {
        const size_t nn = w.size();
        MultiPoly prev = MultiPoly::constant(N, Rat(1));
        int sign = 1;
        for (size_t k = 0; k + 1 < nn; ++k) {
            if (w[k][k].is_zero()) {
                size_t piv = k + 1;
                while (piv < nn && w[piv][k].is_zero()) ++piv;
                if (piv == nn) return MultiPoly(N);
                std::swap(w[piv], w[k]);
                sign = -sign;
            }
            for (size_t r = k + 1; r < nn; ++r) {
                for (size_t c = k + 1; c < nn; ++c) {
                    MultiPoly num = w[r][c] * w[k][k] - w[r][k] * w[k][c];
                    w[r][c] = num.divide_exact(prev);
                }
                w[r][k] = MultiPoly(N);
            }
            prev = w[k][k];
        }
        MultiPoly det = w[nn - 1][nn - 1];
        return sign < 0 ? -det : det;
    };

    MultiPoly det = bareiss_det(m);
    if (det.is_zero()) throw std::logic_error("symbolic_idempotents: singular matrix");

    // Cramer: coefficient j of e_{subset s} is det(M with column j replaced
    // by the unit vector at s) / det(M).
    SymbolicIdempotents out;
    out.subsets = subsets;
    out.denominator = det;
    out.numerators.resize(n);
    for (size_t s = 0; s < n; ++s) {
        for (size_t j = 0; j < n; ++j) {
            auto w = m;
            for (size_t r = 0; r < n; ++r) w[r][j] = MultiPoly(N);
            w[s][j] = MultiPoly::constant(N, Rat(1));
            MultiPoly numer = bareiss_det(w);
            out.numerators[s].add(basis[j], numer);
        }
    }
    return out;
}

} // namespace grassmann
