#pragma once

#include "symcore/laurent.hpp"

#include <stdexcept>
#include <vector>

namespace symcore {

/// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline LaurentPoly qint(int n) {
    LaurentPoly p;
    for (int e = 1 - n; e <= n - 1; e += 2) p.add_term(1, e);
    return p;
}

/// Balanced quantum binomial; symmetric under q <-> 1/q, lowest term
/// q^{-a(N-a)}, and equal to binomial(N,a) at q = 1. Computed as the
/// generating sum over a-element subsets S of {1..N} with weight
/// q^{sum_{i in S}(N+1-2i)}.
inline LaurentPoly qbinomial(int N, int a) {
    if (a < 0 || a > N) throw std::invalid_argument("qbinomial: need 0 <= a <= N");
    LaurentPoly p;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next, int weight) -> void {
        if (static_cast<int>(subset.size()) == a) {
            p.add_term(1, weight);
            return;
        }
        for (int i = next; i <= N - (a - static_cast<int>(subset.size())) + 1; ++i) {
            subset.push_back(i);
            self(self, i + 1, weight + (N + 1 - 2 * i));
            subset.pop_back();
        }
    };
    rec(rec, 1, 0);
    return p;
}

} // namespace symcore
