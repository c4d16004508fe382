#pragma once

#include "symcore/rational.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace symcore {

/// Sparse Laurent polynomial in q and t with integer coefficients.
/// Exponent pairs map to nonzero coefficients; zero is the empty map.
class LaurentPoly {
public:
    using Key = std::pair<int, int>; // (q exponent, t exponent)

    LaurentPoly() = default;

    static LaurentPoly term(const Int& coeff, int qe, int te = 0) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[{qe, te}] = coeff;
        return p;
    }
    static LaurentPoly one() { return term(1, 0, 0); }

    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(int qe, int te = 0) const {
        auto it = terms_.find({qe, te});
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Int& c, int qe, int te = 0) {
        if (c == 0) return;
        auto it = terms_.find({qe, te});
        if (it == terms_.end()) {
            terms_[{qe, te}] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(c, k.first, k.second);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(-c, k.first, k.second);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const Int& c, const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [k, v] : a.terms_) r.add_term(c * v, k.first, k.second);
        return r;
    }

    LaurentPoly shifted(int dq, int dt = 0) const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[{k.first + dq, k.second + dt}] = c;
        return r;
    }

    /// q -> 1/q.
    LaurentPoly invert_q() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[{-k.first, k.second}] = c;
        return r;
    }
    /// (q,t) -> (1/q, 1/t).
    LaurentPoly invert_qt() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[{-k.first, -k.second}] = c;
        return r;
    }

    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

    /// Substitute q = t = given rationals.
    Rat eval(const Rat& q, const Rat& t) const {
        Rat s = 0;
        for (const auto& [k, c] : terms_)
            s += Rat(c) * rat_pow(q, k.first) * rat_pow(t, k.second);
        return s;
    }

    int min_q() const {
        int m = 0;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (first || k.first < m) m = k.first;
            first = false;
        }
        return m;
    }
    int max_q() const {
        int m = 0;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (first || k.first > m) m = k.first;
            first = false;
        }
        return m;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    /// Human-readable, ascending in (q,t): e.g. "q^-1 + 2 + q".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Int a = c;
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            first = false;
            if (a < 0) a = -a;
            const bool unitExp = (k.first == 0 && k.second == 0);
            if (a != 1 || unitExp) os << a.get_str();
            if (a != 1 && !unitExp) os << "*";
            if (k.first != 0) {
                os << "q";
                if (k.first != 1) os << "^" << k.first;
            }
            if (k.second != 0) {
                if (k.first != 0) os << "*";
                os << "t";
                if (k.second != 1) os << "^" << k.second;
            }
        }
        return os.str();
    }

private:
    std::map<Key, Int> terms_;
};

} // namespace symcore
