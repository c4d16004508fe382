#pragma once

#include "symcore/multipoly.hpp"
#include "symcore/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace functorial {

using symcore::MultiPoly;
using symcore::Rat;

/// Sorted set of indices into the fixed ordering of Sigma (0-based).
using Subset = std::vector<int>;

inline Subset set_union(const Subset& x, const Subset& y) {
    Subset r;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(r));
    return r;
}
inline Subset set_difference(const Subset& x, const Subset& y) {
    Subset r;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(r));
    return r;
}
inline bool set_disjoint(const Subset& x, const Subset& y) {
    Subset r;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(r));
    return r.empty();
}
/// Favourite coloring of an a-labeled strand: the first a elements of Sigma.
inline Subset favourite(int a) {
    Subset s(static_cast<size_t>(a));
    for (int i = 0; i < a; ++i) s[static_cast<size_t>(i)] = i;
    return s;
}
inline std::string subset_str(const Subset& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += "l" + std::to_string(s[i] + 1);
    }
    return out + "}";
}

/// Catalogued sign conventions. `mutate_*` flips the corresponding sign,
/// used to confirm the verification suite is sensitive to each of them.
struct SignConvention {
    bool mutate_antisym = false; // (lambda_j - lambda_i) = -(lambda_i - lambda_j)
    bool mutate_omega = false;   // omega_A = (-1)^{binom(a,2)} r(A, Sigma-A)
    bool mutate_disc = false;    // (-1)^{b(a-b)} annulus sign
    bool mutate_eps_r2 = false;  // (-1)^{min(a,b)|a-b|} R2 normalization
    bool mutate_sphere = false;  // sphere evaluates to omega^{-1}
};

/// Normalized symbolic scalar: zero, or
///   (-1)^{sign} * prod_{i<j} (lambda_i - lambda_j)^{e_ij}.
/// Every catalogued elementary scalar (r(X,Y), omega_A, signs) lands in this
/// lattice; r factors are expanded multiplicatively into the singleton pairs
/// and antisymmetry signs are pushed into the global sign, so equality with 1
/// is a syntactic check.
class ScalarExpr {
public:
    ScalarExpr() = default;

    static ScalarExpr one() { return ScalarExpr(); }

    static ScalarExpr zero() {
        ScalarExpr s;
        s.zero_ = true;
        return s;
    }

    static ScalarExpr sign_pow(long e) {
        ScalarExpr s;
        s.sign_ = static_cast<int>(((e % 2) + 2) % 2);
        return s;
    }

    /// r(X,Y) = prod_{x in X, y in Y} (lambda_x - lambda_y); zero on overlap.
    static ScalarExpr r(const Subset& X, const Subset& Y, const SignConvention& sc = {}) {
        ScalarExpr s;
        for (int x : X)
            for (int y : Y) {
                if (x == y) return zero();
                if (x < y) {
                    s.exps_[{x, y}] += 1;
                } else {
                    s.exps_[{y, x}] += 1;
                    if (!sc.mutate_antisym) s.sign_ ^= 1;
                }
            }
        s.strip();
        return s;
    }

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && sign_ == 0 && exps_.empty(); }

    ScalarExpr inverse() const {
        if (zero_) throw std::domain_error("ScalarExpr: inverse of zero");
        ScalarExpr s;
        s.sign_ = sign_;
        for (const auto& [k, e] : exps_) s.exps_[k] = -e;
        return s;
    }

    ScalarExpr pow(long e) const {
        if (e == 0) return one();
        if (zero_) return zero();
        ScalarExpr s;
        s.sign_ = static_cast<int>((static_cast<long>(sign_) * e % 2 + 2) % 2);
        for (const auto& [k, v] : exps_) {
            long ne = v * e;
            if (ne != 0) s.exps_[k] = ne;
        }
        return s;
    }

    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
        if (a.zero_ || b.zero_) return zero();
        ScalarExpr s;
        s.sign_ = a.sign_ ^ b.sign_;
        s.exps_ = a.exps_;
        for (const auto& [k, e] : b.exps_) {
            s.exps_[k] += e;
            if (s.exps_[k] == 0) s.exps_.erase(k);
        }
        return s;
    }
    ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }

    bool operator==(const ScalarExpr& o) const {
        return zero_ == o.zero_ && sign_ == o.sign_ && exps_ == o.exps_;
    }

    /// Exact value at a numeric Sigma.
    Rat eval(const std::vector<Rat>& lambda) const {
        if (zero_) return Rat(0);
        Rat v = sign_ ? Rat(-1) : Rat(1);
        for (const auto& [k, e] : exps_) {
            Rat d = lambda[static_cast<size_t>(k.first)] - lambda[static_cast<size_t>(k.second)];
            v *= symcore::rat_pow(d, e);
        }
        return v;
    }

    /// As a ratio of polynomials in lambda_1..lambda_N (numerator, denominator).
    std::pair<MultiPoly, MultiPoly> to_poly(int N) const {
        MultiPoly num = MultiPoly::constant(N, zero_ ? Rat(0) : (sign_ ? Rat(-1) : Rat(1)));
        MultiPoly den = MultiPoly::constant(N, Rat(1));
        for (const auto& [k, e] : exps_) {
            MultiPoly d = MultiPoly::variable(N, k.first) - MultiPoly::variable(N, k.second);
            for (long i = 0; i < std::abs(e); ++i) {
                if (e > 0)
                    num *= d;
                else
                    den *= d;
            }
        }
        return {num, den};
    }

    std::string to_string() const {
        if (zero_) return "0";
        if (is_one()) return "1";
        std::ostringstream os;
        os << (sign_ ? "-1" : "1");
        for (const auto& [k, e] : exps_) {
            os << " * (l" << (k.first + 1) << "-l" << (k.second + 1) << ")";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

private:
    void strip() {
        for (auto it = exps_.begin(); it != exps_.end();) {
            if (it->second == 0)
                it = exps_.erase(it);
            else
                ++it;
        }
    }

    bool zero_ = false;
    int sign_ = 0;
    std::map<std::pair<int, int>, long> exps_;
};

} // namespace functorial
