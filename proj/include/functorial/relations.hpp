#pragma once

#include "functorial/scalar.hpp"

#include <stdexcept>

namespace functorial {

/// Scalar factors of the foam relation catalog, parameterized by idempotent
/// subsets. Names follow the relation tags used throughout: klr/klr2 are the
/// zip-unzip cancellations, disc/disc2 the annulus removals, bubble/sphere
/// the closed-surface evaluations, mp and pitchfork the scalar-free moves.
namespace rel {

inline ScalarExpr klr(const Subset& A, const Subset& B, const SignConvention& sc = {}) {
    return ScalarExpr::r(A, B, sc);
}

inline ScalarExpr klr2(const Subset& A, const Subset& B, const SignConvention& sc = {}) {
    return ScalarExpr::r(B, A, sc);
}

/// Annulus of label |A|-|B| between same-colored discs, undeformed sign.
inline ScalarExpr disc_sign(int a, int b, const SignConvention& sc = {}) {
    long e = static_cast<long>(std::min(a, b)) * std::abs(a - b);
    if (sc.mutate_disc) e += 1;
    return ScalarExpr::sign_pow(e);
}

/// With X inside A: r(X,B) / r(A\X, X).
inline ScalarExpr disc2(const Subset& A, const Subset& X, const Subset& B,
                        const SignConvention& sc = {}) {
    Subset AX = set_difference(A, X);
    return ScalarExpr::r(X, B, sc) * ScalarExpr::r(AX, X, sc).inverse();
}

/// With X inside A: r(B,X) / r(X, A\X).
inline ScalarExpr saddle_reverse(const Subset& A, const Subset& X, const Subset& B,
                                 const SignConvention& sc = {}) {
    Subset AX = set_difference(A, X);
    return ScalarExpr::r(B, X, sc) * ScalarExpr::r(X, AX, sc).inverse();
}

inline ScalarExpr omega(const Subset& A, int N, const SignConvention& sc = {}) {
    Subset comp;
    for (int i = 0; i < N; ++i)
        if (!std::binary_search(A.begin(), A.end(), i)) comp.push_back(i);
    long a = static_cast<long>(A.size());
    long e = a * (a - 1) / 2;
    if (sc.mutate_omega) e += 1;
    return ScalarExpr::sign_pow(e) * ScalarExpr::r(A, comp, sc);
}

/// Neck-cut bubble carries omega_A; the idempotent-colored sphere gives its
/// inverse.
inline ScalarExpr bubble(const Subset& A, int N, const SignConvention& sc = {}) {
    return omega(A, N, sc);
}
inline ScalarExpr sphere(const Subset& A, int N, const SignConvention& sc = {}) {
    ScalarExpr w = omega(A, N, sc);
    return sc.mutate_sphere ? w : w.inverse();
}

inline ScalarExpr pitchfork3(const Subset& A, const Subset& C, const SignConvention& sc = {}) {
    return ScalarExpr::r(A, C, sc);
}

inline ScalarExpr blister(const Subset& A, const Subset& B, const SignConvention& sc = {}) {
    return ScalarExpr::r(A, B, sc);
}

inline ScalarExpr mp() { return ScalarExpr::one(); }
inline ScalarExpr pitchfork() { return ScalarExpr::one(); }

/// R2 normalization (-1)^{min(a,b)|a-b|}, both parallel and antiparallel.
inline ScalarExpr eps_r2(int a, int b, const SignConvention& sc = {}) {
    long e = static_cast<long>(std::min(a, b)) * std::abs(a - b);
    if (sc.mutate_eps_r2) e += 1;
    return ScalarExpr::sign_pow(e);
}

} // namespace rel

} // namespace functorial
