#pragma once

#include "symcore/lr.hpp"
#include "symcore/partition.hpp"
#include "symcore/rational.hpp"
#include "symcore/symelt.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace symcore {

/// Element of Sym(A|B) written in the Schur (x) Schur basis: a finite sum of
/// c * s_alpha(A) * s_beta(B) with alpha bounded by a rows, beta by b rows.
class BiSymElt {
public:
    BiSymElt() : a_(0), b_(0) {}
    BiSymElt(int a, int b) : a_(a), b_(b) {}

    static BiSymElt term(int a, int b, const Partition& alpha, const Partition& beta,
                         const Rat& c = Rat(1)) {
        BiSymElt e(a, b);
        e.add(alpha, beta, c);
        return e;
    }
    static BiSymElt unit(int a, int b) { return term(a, b, {}, {}); }

    int bound_a() const { return a_; }
    int bound_b() const { return b_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::pair<Partition, Partition>, Rat>& coeffs() const { return coeffs_; }

    void add(const Partition& alpha, const Partition& beta, const Rat& c) {
        if (c == 0 || alpha.rows() > a_ || beta.rows() > b_) return;
        auto key = std::make_pair(alpha, beta);
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            coeffs_[key] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    BiSymElt& operator+=(const BiSymElt& o) {
        for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
        return *this;
    }
    BiSymElt& operator-=(const BiSymElt& o) {
        for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, -c);
        return *this;
    }
    friend BiSymElt operator+(BiSymElt x, const BiSymElt& y) { return x += y; }
    friend BiSymElt operator-(BiSymElt x, const BiSymElt& y) { return x -= y; }

    friend BiSymElt operator*(const BiSymElt& x, const BiSymElt& y) {
        BiSymElt r(x.a_, x.b_);
        for (const auto& [kx, cx] : x.coeffs_)
            for (const auto& [ky, cy] : y.coeffs_) {
                Rat c = cx * cy;
                for (const auto& [ga, ma] : lr_expand(kx.first, ky.first, x.a_))
                    for (const auto& [gb, mb] : lr_expand(kx.second, ky.second, x.b_))
                        r.add(ga, gb, c * Rat(ma) * Rat(mb));
            }
        return r;
    }
    BiSymElt& operator*=(const BiSymElt& o) { return *this = *this * o; }

    friend BiSymElt operator*(const Rat& c, const BiSymElt& x) {
        BiSymElt r(x.a_, x.b_);
        if (c == 0) return r;
        for (const auto& [k, v] : x.coeffs_) r.coeffs_[k] = c * v;
        return r;
    }

    bool operator==(const BiSymElt& o) const {
        return a_ == o.a_ && b_ == o.b_ && coeffs_ == o.coeffs_;
    }

    /// Image under B -> 0: keeps the terms with beta empty.
    SymElt set_b_to_zero() const {
        SymElt r(a_);
        for (const auto& [k, c] : coeffs_)
            if (k.second.empty()) r.add(k.first, c);
        return r;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << c.get_str() << "*";
            os << "sA" << k.first.to_string() << "*sB" << k.second.to_string();
        }
        return os.str();
    }

private:
    int a_, b_;
    std::map<std::pair<Partition, Partition>, Rat> coeffs_;
};

/// Complete symmetric polynomial of the difference alphabet A - B:
/// the x^k coefficient of prod_B (1 - Bx) / prod_A (1 - Ax), i.e.
/// h_k(A-B) = sum_{i+j=k} h_i(A) * (-1)^j e_j(B).
inline BiSymElt h_difference(int k, int a, int b) {
    if (k < 0) throw std::invalid_argument("h_difference: k must be >= 0");
    BiSymElt r(a, b);
    for (int j = 0; j <= std::min(k, b); ++j) {
        int i = k - j;
        Partition hi = i > 0 ? Partition{i} : Partition{};
        Partition ej = j > 0 ? Partition(std::vector<int>(static_cast<size_t>(j), 1)) : Partition{};
        r.add(hi, ej, (j % 2 == 0) ? Rat(1) : Rat(-1));
    }
    return r;
}

namespace detail {

template <typename Elt>
Elt det_recursive(const std::vector<std::vector<Elt>>& m, std::vector<int>& cols, int row,
                  const Elt& zero) {
    if (cols.empty()) {
        Elt r = zero; // multiplicative unit handled by caller for 0x0
        return r;
    }
    Elt acc = zero;
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        int col = cols[ci];
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t cj = 0; cj < cols.size(); ++cj)
            if (cj != ci) rest.push_back(cols[cj]);
        Elt sub = rest.empty()
                      ? m[static_cast<size_t>(row)][static_cast<size_t>(col)]
                      : m[static_cast<size_t>(row)][static_cast<size_t>(col)] *
                            det_recursive(m, rest, row + 1, zero);
        if (ci % 2 == 0)
            acc += sub;
        else
            acc -= sub;
    }
    return acc;
}

template <typename Elt>
Elt determinant(const std::vector<std::vector<Elt>>& m, const Elt& zero, const Elt& one) {
    if (m.empty()) return one;
    std::vector<int> cols(m.size());
    for (size_t i = 0; i < cols.size(); ++i) cols[i] = static_cast<int>(i);
    return det_recursive(m, cols, 0, zero);
}

} // namespace detail

/// Schur polynomial of the difference alphabet by the Jacobi-Trudi formula
/// s_alpha(A-B) = det(h_{alpha_i + j - i}(A-B)).
inline BiSymElt schur_difference(const Partition& alpha, int a, int b) {
    if (alpha.rows() > a)
        throw std::invalid_argument("schur_difference: partition has more rows than alphabet");
    int n = alpha.rows();
    if (n == 0) return BiSymElt::unit(a, b);
    std::vector<std::vector<BiSymElt>> m(static_cast<size_t>(n),
                                         std::vector<BiSymElt>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = alpha.part(i) + j - i;
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                k < 0 ? BiSymElt(a, b) : h_difference(k, a, b);
        }
    return detail::determinant(m, BiSymElt(a, b), BiSymElt::unit(a, b));
}

/// h_k at an explicit alphabet, by the generating-function recursion
/// h_k = (1/k) * sum_{i=1}^{k} p_i h_{k-i} avoided; instead expand the
/// product directly: coefficients of prod 1/(1-A x) up to degree k.
inline std::vector<Rat> complete_homogeneous_values(const std::vector<Rat>& alphabet, int maxk) {
    std::vector<Rat> h(static_cast<size_t>(maxk) + 1, Rat(0));
    h[0] = 1;
    for (const Rat& x : alphabet)
        for (int k = 1; k <= maxk; ++k) h[static_cast<size_t>(k)] += x * h[static_cast<size_t>(k - 1)];
    return h;
}

/// Exact numeric evaluation of a Schur polynomial at an alphabet of rationals.
inline Rat schur_value(const Partition& alpha, const std::vector<Rat>& alphabet) {
    if (alpha.rows() > static_cast<int>(alphabet.size())) return Rat(0);
    int n = alpha.rows();
    if (n == 0) return Rat(1);
    int maxk = alpha.part(0) + n;
    auto h = complete_homogeneous_values(alphabet, maxk);
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = alpha.part(i) + j - i;
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (k < 0) ? Rat(0) : h[static_cast<size_t>(k)];
        }
    return detail::determinant(m, Rat(0), Rat(1));
}

/// Evaluate a SymElt at an explicit alphabet (every variable bound).
inline Rat eval(const SymElt& x, const std::vector<Rat>& alphabet) {
    if (static_cast<int>(alphabet.size()) != x.bound())
        throw std::invalid_argument("eval: alphabet size must match bound");
    Rat s = 0;
    for (const auto& [p, c] : x.coeffs()) s += c * schur_value(p, alphabet);
    return s;
}

/// Evaluate a BiSymElt at explicit alphabets for A and B.
inline Rat eval(const BiSymElt& x, const std::vector<Rat>& A, const std::vector<Rat>& B) {
    if (static_cast<int>(A.size()) != x.bound_a() || static_cast<int>(B.size()) != x.bound_b())
        throw std::invalid_argument("eval: alphabet sizes must match bounds");
    Rat s = 0;
    for (const auto& [k, c] : x.coeffs())
        s += c * schur_value(k.first, A) * schur_value(k.second, B);
    return s;
}

/// Monomial expansion of s_alpha in `nvars` variables via semistandard
/// tableaux; exponent vectors are indexed by variable. Used as the
/// independent oracle for Schur-basis products.
inline std::map<std::vector<int>, Int> schur_monomials(const Partition& alpha, int nvars) {
    std::map<std::vector<int>, Int> out;
    if (alpha.rows() > nvars) return out;
    if (alpha.empty()) {
        out[std::vector<int>(static_cast<size_t>(nvars), 0)] = 1;
        return out;
    }
    int rows = alpha.rows();
    std::vector<std::vector<int>> t(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) t[static_cast<size_t>(r)].assign(static_cast<size_t>(alpha.part(r)), 0);
    std::vector<int> content(static_cast<size_t>(nvars), 0);
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            auto it = out.find(content);
            if (it == out.end())
                out[content] = 1;
            else
                it->second += 1;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= alpha.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, t[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= nvars; ++v) {
            t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            content[static_cast<size_t>(v - 1)]++;
            self(self, nr, nc);
            content[static_cast<size_t>(v - 1)]--;
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace symcore
