#pragma once

#include "symcore/partition.hpp"

#include <vector>

namespace symcore {

/// Littlewood-Richardson coefficient c^gamma_{alpha,beta}: the number of
/// semistandard skew tableaux of shape gamma/alpha and content beta whose
/// reverse reading word is a lattice word.
///
/// Cells are filled in reading-word order (rows top to bottom, within a row
/// right to left), which makes the lattice condition a running constraint.
inline long lr_coeff(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    if (gamma.size() != alpha.size() + beta.size()) return 0;
    if (!gamma.contains(alpha)) return 0;
    if (beta.empty()) return 1;

    const int rows = gamma.rows();
    const int ell = beta.rows();
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<size_t>(r)].assign(static_cast<size_t>(gamma.part(r)), 0);
    std::vector<int> used(static_cast<size_t>(ell) + 1, 0);

    long count = 0;
    auto rec = [&](auto&& self, int r, int c) -> void {
        // advance to next cell in reading order; skip cells inside alpha
        while (r < rows && c < alpha.part(r)) {
            ++r;
            c = r < rows ? gamma.part(r) - 1 : 0;
        }
        if (r == rows) {
            ++count;
            return;
        }
        for (int v = 1; v <= ell; ++v) {
            if (used[static_cast<size_t>(v)] >= beta.part(v - 1)) continue;
            // lattice: after placing v, #v must not exceed #(v-1)
            if (v > 1 && used[static_cast<size_t>(v)] >= used[static_cast<size_t>(v - 1)]) continue;
            // weakly increasing along the row (right neighbour already filled)
            if (c + 1 < gamma.part(r) && v > fill[static_cast<size_t>(r)][static_cast<size_t>(c + 1)]) continue;
            // strictly increasing down the column (cell above, if in the skew shape)
            if (r > 0 && c < gamma.part(r - 1) && c >= alpha.part(r - 1) &&
                v <= fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)])
                continue;
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            used[static_cast<size_t>(v)]++;
            if (c > alpha.part(r))
                self(self, r, c - 1);
            else
                self(self, r + 1, r + 1 < rows ? gamma.part(r + 1) - 1 : 0);
            used[static_cast<size_t>(v)]--;
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
    };
    rec(rec, 0, gamma.part(0) - 1);
    return count;
}

/// Expansion targets of s_alpha * s_beta with at most `maxRows` rows.
inline std::vector<std::pair<Partition, long>> lr_expand(const Partition& alpha,
                                                         const Partition& beta,
                                                         int maxRows) {
    std::vector<std::pair<Partition, long>> out;
    const int n = static_cast<int>(alpha.size() + beta.size());
    for (const Partition& gamma : partitions_of(n, maxRows)) {
        long c = lr_coeff(alpha, beta, gamma);
        if (c != 0) out.emplace_back(gamma, c);
    }
    return out;
}

} // namespace symcore
