#pragma once

#include "symcore/difference.hpp"
#include "symcore/lr.hpp"
#include "symcore/multipoly.hpp"
#include "symcore/partition.hpp"
#include "symcore/rational.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace grassmann {

using symcore::MultiPoly;
using symcore::Partition;
using symcore::Rat;

inline bool ring_is_zero(const Rat& x) { return x == 0; }
inline bool ring_is_zero(const MultiPoly& x) { return x.is_zero(); }
inline Rat ring_negate(const Rat& x) { return -x; }
inline MultiPoly ring_negate(const MultiPoly& x) { return -x; }

/// Element in the box-bounded Schur basis {s_alpha(A) : alpha in P(a, N-a)}
/// with coefficients in a realization R of Sym(S).
template <typename R>
class GrassmannElt {
public:
    GrassmannElt() = default;

    const std::map<Partition, R>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    bool has(const Partition& p) const { return coeffs_.count(p) != 0; }
    const R* find(const Partition& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? nullptr : &it->second;
    }

    void add(const Partition& p, const R& c) {
        if (ring_is_zero(c)) return;
        auto it = coeffs_.find(p);
        if (it == coeffs_.end()) {
            coeffs_[p] = c;
        } else {
            it->second += c;
            if (ring_is_zero(it->second)) coeffs_.erase(it);
        }
    }

    GrassmannElt& operator+=(const GrassmannElt& o) {
        for (const auto& [p, c] : o.coeffs_) add(p, c);
        return *this;
    }
    GrassmannElt& operator-=(const GrassmannElt& o) {
        for (const auto& [p, c] : o.coeffs_) add(p, ring_negate(c));
        return *this;
    }
    friend GrassmannElt operator+(GrassmannElt a, const GrassmannElt& b) { return a += b; }
    friend GrassmannElt operator-(GrassmannElt a, const GrassmannElt& b) { return a -= b; }

    friend GrassmannElt operator*(const R& c, const GrassmannElt& x) {
        GrassmannElt r;
        if (ring_is_zero(c)) return r;
        for (const auto& [p, v] : x.coeffs_) r.add(p, c * v);
        return r;
    }

    bool operator==(const GrassmannElt& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<Partition, R> coeffs_;
};

/// H*_{GL_N}(Gr_a) presented as Sym(A|S) / <h_{N-a+i}(A-S) : i > 0>.
/// `schurS` converts s_mu(S) into the coefficient ring: evaluation at
/// numbers for R = Q, the dual Jacobi-Trudi determinant for R = Q[e_1..e_N],
/// or the monomial expansion for R = Q[lambda_1..lambda_N].
template <typename R>
class GrassmannAlgebra {
public:
    GrassmannAlgebra(int N, int a, R one, std::function<R(const Partition&)> schurS)
        : N_(N), a_(a), one_(std::move(one)), schurS_(std::move(schurS)) {
        if (a < 0 || a > N) throw std::invalid_argument("GrassmannAlgebra: need 0 <= a <= N");
    }

    int N() const { return N_; }
    int label() const { return a_; }
    const R& one() const { return one_; }
    R zero() const { return one_ - one_; }
    int box_cols() const { return N_ - a_; }
    Partition box() const {
        return Partition(std::vector<int>(static_cast<size_t>(a_), N_ - a_));
    }
    std::vector<Partition> basis() const { return symcore::partitions_in_box(a_, N_ - a_); }

    R schur_S(const Partition& mu) const { return schurS_(mu); }

    GrassmannElt<R> schur(const Partition& p, const R& c) const {
        GrassmannElt<R> e;
        if (p.rows() <= a_) e.add(p, c);
        return reduce(e);
    }
    GrassmannElt<R> schur(const Partition& p) const { return schur(p, one_); }
    GrassmannElt<R> unit() const { return schur(Partition{}); }

    /// Normal form in the box-bounded basis. An out-of-box s_gamma(A)
    /// (gamma_1 > N-a) is rewritten via the relation s_gamma(A-S) = 0, whose
    /// skew-splitting expansion
    ///   s_gamma(A) = -sum_{delta < gamma} (-1)^{|gamma/delta|}
    ///                 s_{(gamma/delta)^T}(S) s_delta(A)
    /// strictly lowers |gamma|.
    GrassmannElt<R> reduce(const GrassmannElt<R>& x) const {
        GrassmannElt<R> done;
        // worklist keyed by partition, processed from large to small sizes
        std::map<Partition, R> todo(x.coeffs().begin(), x.coeffs().end());
        while (!todo.empty()) {
            auto it = std::max_element(todo.begin(), todo.end(),
                                       [](const auto& p, const auto& q) {
                                           return p.first.size() < q.first.size();
                                       });
            Partition gamma = it->first;
            R c = it->second;
            todo.erase(it);
            if (ring_is_zero(c)) continue;
            if (gamma.cols() <= N_ - a_) {
                done.add(gamma, c);
                continue;
            }
            Partition gammaT = gamma.transpose();
            for (const Partition& delta : sub_partitions(gamma)) {
                if (delta == gamma || delta.rows() > a_) continue;
                long skew = gamma.size() - delta.size();
                R factor = skew_schur_S(gammaT, delta.transpose());
                if (ring_is_zero(factor)) continue;
                if (skew % 2 == 0) factor = ring_negate(factor); // -(-1)^{|gamma/delta|}
                R term = c * factor;
                auto jt = todo.find(delta);
                if (jt == todo.end()) {
                    todo[delta] = term;
                } else {
                    jt->second += term;
                    if (ring_is_zero(jt->second)) todo.erase(jt);
                }
            }
        }
        return done;
    }

    /// Product in the quotient: Littlewood-Richardson then reduction.
    GrassmannElt<R> multiply(const GrassmannElt<R>& x, const GrassmannElt<R>& y) const {
        GrassmannElt<R> prod;
        for (const auto& [p, cp] : x.coeffs())
            for (const auto& [q, cq] : y.coeffs()) {
                R c = cp * cq;
                for (const auto& [g, m] : symcore::lr_expand(p, q, a_))
                    prod.add(g, mul_long(c, m));
            }
        return reduce(prod);
    }

    /// Sym(S)-linear trace: tr_a(s_alpha(A)) = (-1)^{binom(a,2)} delta_{alpha, box}.
    R trace(const GrassmannElt<R>& x) const {
        const R* c = x.find(box());
        if (!c) return zero();
        R v = *c;
        if ((static_cast<long>(a_) * (a_ - 1) / 2) % 2 != 0) v = ring_negate(v);
        return v;
    }

    /// The mixed-basis element s_beta(A - S), expanded into the s_delta(A)
    /// basis with Sym(S) coefficients; beta must fit the box.
    GrassmannElt<R> dual_schur(const Partition& beta) const {
        if (!beta.fits(a_, N_ - a_))
            throw std::invalid_argument("dual_schur: partition must fit the box");
        GrassmannElt<R> out;
        Partition betaT = beta.transpose();
        for (const Partition& delta : sub_partitions(beta)) {
            if (delta.rows() > a_) continue;
            R factor = skew_schur_S(betaT, delta.transpose());
            if (ring_is_zero(factor)) continue;
            if ((beta.size() - delta.size()) % 2 != 0) factor = ring_negate(factor);
            out.add(delta, factor);
        }
        return out;
    }

    /// Poincare duality: s_alpha(A) -> (-1)^{binom(a,2)} s_{complement(alpha)}(A-S).
    GrassmannElt<R> poincare_dual(const Partition& alpha) const {
        GrassmannElt<R> d = dual_schur(alpha.complement(a_, N_ - a_));
        if ((static_cast<long>(a_) * (a_ - 1) / 2) % 2 == 0) return d;
        GrassmannElt<R> neg;
        for (const auto& [p, c] : d.coeffs()) neg.add(p, ring_negate(c));
        return neg;
    }

private:
    static R mul_long(const R& c, long m) {
        R acc = c - c;
        R cc = c;
        long mm = m < 0 ? -m : m;
        for (long i = 0; i < mm; ++i) acc += cc;
        return m < 0 ? ring_negate(acc) : acc;
    }

    /// skew Schur s_{lambda/mu}(S) converted into R via LR expansion.
    R skew_schur_S(const Partition& lambda, const Partition& mu) const {
        R acc = zero();
        int n = static_cast<int>(lambda.size() - mu.size());
        if (n < 0) return acc;
        if (n == 0) return lambda == mu ? one_ : acc;
        for (const Partition& nu : symcore::partitions_of(n, N_)) {
            long c = symcore::lr_coeff(mu, nu, lambda);
            if (c != 0) acc += mul_long(schurS_(nu), c);
        }
        return acc;
    }

    static std::vector<Partition> sub_partitions(const Partition& gamma) {
        std::vector<Partition> out;
        std::vector<int> stack;
        int rows = gamma.rows();
        auto rec = [&](auto&& self, int row, int maxPart) -> void {
            out.push_back(Partition(std::vector<int>(stack)));
            if (row == rows) return;
            for (int p = std::min(maxPart, gamma.part(row)); p >= 1; --p) {
                stack.push_back(p);
                self(self, row + 1, p);
                stack.pop_back();
            }
        };
        rec(rec, 0, gamma.cols());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    int N_, a_;
    R one_;
    std::function<R(const Partition&)> schurS_;
};

/// Ready-made coefficient realizations of Sym(S).

/// R = Q: numeric specialization at an explicit alphabet Sigma (size N).
inline GrassmannAlgebra<Rat> make_numeric_algebra(int N, int a, const std::vector<Rat>& sigma) {
    if (static_cast<int>(sigma.size()) != N)
        throw std::invalid_argument("make_numeric_algebra: |Sigma| must equal N");
    return GrassmannAlgebra<Rat>(N, a, Rat(1), [sigma](const Partition& mu) {
        return symcore::schur_value(mu, sigma);
    });
}

/// R = Q[e1..eN]: generic equivariant coefficients in the elementary
/// symmetric generators of Sym(S), via the dual Jacobi-Trudi determinant
/// s_mu(S) = det(e_{mu^T_i - i + j}(S)).
inline GrassmannAlgebra<MultiPoly> make_equivariant_algebra(int N, int a) {
    auto schurS = [N](const Partition& mu) {
        if (mu.rows() > N) return MultiPoly(N);
        Partition muT = mu.transpose();
        int n = muT.rows();
        if (n == 0) return MultiPoly::constant(N, Rat(1));
        std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(n),
                                              std::vector<MultiPoly>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int k = muT.part(i) + j - i;
                if (k < 0 || k > N)
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] = MultiPoly(N);
                else if (k == 0)
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        MultiPoly::constant(N, Rat(1));
                else
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        MultiPoly::variable(N, k - 1);
            }
        return symcore::detail::determinant(m, MultiPoly(N), MultiPoly::constant(N, Rat(1)));
    };
    return GrassmannAlgebra<MultiPoly>(N, a, MultiPoly::constant(N, Rat(1)), schurS);
}

/// R = Q[lambda_1..lambda_N]: symbolic specialization, s_mu(S) expanded into
/// monomials in the lambda variables.
inline GrassmannAlgebra<MultiPoly> make_symbolic_sigma_algebra(int N, int a) {
    auto schurS = [N](const Partition& mu) {
        MultiPoly p(N);
        for (const auto& [expo, c] : symcore::schur_monomials(mu, N)) p.add_term(expo, Rat(c.get_si()));
        return p;
    };
    return GrassmannAlgebra<MultiPoly>(N, a, MultiPoly::constant(N, Rat(1)), schurS);
}

} // namespace grassmann
