#pragma once

#include "symcore/rational.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace symcore {

/// Sparse multivariate polynomial over the rationals. The number of
/// variables is fixed per polynomial; names are supplied only for printing.
class MultiPoly {
public:
    using Expo = std::vector<int>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rat& c) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_[Expo(static_cast<size_t>(nvars), 0)] = c;
        return p;
    }
    static MultiPoly variable(int nvars, int i, const Rat& c = Rat(1)) {
        MultiPoly p(nvars);
        if (c != 0) {
            Expo e(static_cast<size_t>(nvars), 0);
            e[static_cast<size_t>(i)] = 1;
            p.terms_[e] = c;
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Expo(static_cast<size_t>(nvars_), 0));
    }
    Rat constant_term() const {
        auto it = terms_.find(Expo(static_cast<size_t>(nvars_), 0));
        return it == terms_.end() ? Rat(0) : it->second;
    }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_);
        Expo e(static_cast<size_t>(a.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator*(const Rat& c, const MultiPoly& a) {
        MultiPoly r(a.nvars_);
        if (c == 0) return r;
        for (const auto& [e, v] : a.terms_) r.terms_[e] = c * v;
        return r;
    }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Rat eval(const std::vector<Rat>& values) const {
        Rat s = 0;
        for (const auto& [e, c] : terms_) {
            Rat m = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) m *= rat_pow(values[i], e[i]);
            s += m;
        }
        return s;
    }

    /// Substitute polynomials for the variables (e.g. specializing symbols).
    MultiPoly substitute(const std::vector<MultiPoly>& values) const {
        MultiPoly s(values.empty() ? 0 : values[0].nvars());
        for (const auto& [e, c] : terms_) {
            MultiPoly m = MultiPoly::constant(s.nvars(), c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) m *= values[i];
            s += m;
        }
        return s;
    }

    /// Exact division; throws if the division leaves a remainder.
    /// Monomial order: lex on exponent vectors.
    MultiPoly divide_exact(const MultiPoly& d) const {
        if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
        MultiPoly rem = *this, quot(nvars_);
        const auto& [de, dc] = *d.terms_.rbegin(); // leading term, lex-max
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.rbegin();
            Expo qe(static_cast<size_t>(nvars_));
            for (size_t i = 0; i < qe.size(); ++i) {
                qe[i] = re[i] - de[i];
                if (qe[i] < 0) throw std::domain_error("divide_exact: not divisible");
            }
            Rat qc = rc / dc;
            MultiPoly mono(nvars_);
            mono.terms_[qe] = qc;
            quot += mono;
            rem -= mono * d;
        }
        return quot;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat a = c;
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            first = false;
            if (a < 0) a = -a;
            bool unitExp = true;
            for (int x : e)
                if (x != 0) unitExp = false;
            bool printed = false;
            if (a != 1 || unitExp) {
                os << a.get_str();
                printed = true;
            }
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (printed) os << "*";
                os << names[i];
                if (e[i] != 1) os << "^" << e[i];
                printed = true;
            }
        }
        return os.str();
    }

private:
    int nvars_;
    std::map<Expo, Rat> terms_;
};

} // namespace symcore
