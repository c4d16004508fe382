#pragma once

#include "grassmann/algebra.hpp"
#include "symcore/symelt.hpp"

#include <stdexcept>

namespace grassmann {

using symcore::SymElt;

/// Sylvester pairing on basis elements:
///   zeta(s_alpha(A) s_beta(B)) = (-1)^{|complement_transpose(alpha)|}
///                                delta_{alpha, complement_transpose(beta)}
/// for alpha in P(a,b), beta in P(b,a); zero when a partition leaves its box
/// (the Kronecker delta cannot match there).
inline Rat zeta_pair(const Partition& alpha, const Partition& beta, int a, int b) {
    if (!alpha.fits(a, b) || !beta.fits(b, a)) return Rat(0);
    if (!(alpha == beta.complement_transpose(b, a))) return Rat(0);
    long exp = static_cast<long>(a) * b - alpha.size(); // |complement_transpose(alpha)|
    return exp % 2 == 0 ? Rat(1) : Rat(-1);
}

/// Sylvester operator, extended bilinearly; the result is a constant multiple
/// of the unit in Sym(A u B).
inline SymElt sylvester(const SymElt& p, const SymElt& q, int a, int b) {
    if (p.bound() > a || q.bound() > b)
        throw std::invalid_argument("sylvester: inputs exceed their row bounds");
    Rat acc(0);
    for (const auto& [alpha, ca] : p.coeffs())
        for (const auto& [beta, cb] : q.coeffs()) acc += ca * cb * zeta_pair(alpha, beta, a, b);
    SymElt out(a + b);
    if (acc != 0) out.add(Partition{}, acc);
    return out;
}

/// Decorated theta foam value: tr_{a+b}(r * zeta(p q)), with Sym(A u B)
/// identified with the (a+b)-alphabet by decoration migration.
template <typename R>
R theta_eval(const GrassmannAlgebra<R>& big, const Partition& p, const Partition& q,
             const Partition& r, int a, int b) {
    if (a + b > big.N()) throw std::invalid_argument("theta_eval: a + b exceeds N");
    if (big.label() != a + b) throw std::invalid_argument("theta_eval: algebra label must be a+b");
    Rat z = zeta_pair(p, q, a, b);
    if (z == 0) return big.zero();
    R v = big.trace(big.schur(r));
    if (z < 0) v = ring_negate(v);
    return v;
}

} // namespace grassmann
