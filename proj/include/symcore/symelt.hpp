#pragma once

#include "symcore/lr.hpp"
#include "symcore/partition.hpp"
#include "symcore/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace symcore {

/// Element of Sym(A) for an alphabet of size `bound`, written in the Schur
/// basis. Partitions with more than `bound` rows are identically zero and
/// never stored.
class SymElt {
public:
    SymElt() : bound_(0) {}
    explicit SymElt(int bound) : bound_(bound) {}

    static SymElt schur(int bound, const Partition& p, const Rat& c = Rat(1)) {
        SymElt e(bound);
        e.add(p, c);
        return e;
    }
    static SymElt unit(int bound) { return schur(bound, Partition{}); }

    int bound() const { return bound_; }
    const std::map<Partition, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rat coeff(const Partition& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void add(const Partition& p, const Rat& c) {
        if (c == 0 || p.rows() > bound_) return;
        auto it = coeffs_.find(p);
        if (it == coeffs_.end()) {
            coeffs_[p] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    SymElt& operator+=(const SymElt& o) {
        check_bound(o);
        for (const auto& [p, c] : o.coeffs_) add(p, c);
        return *this;
    }
    SymElt& operator-=(const SymElt& o) {
        check_bound(o);
        for (const auto& [p, c] : o.coeffs_) add(p, -c);
        return *this;
    }
    friend SymElt operator+(SymElt a, const SymElt& b) { return a += b; }
    friend SymElt operator-(SymElt a, const SymElt& b) { return a -= b; }
    friend SymElt operator*(const Rat& c, const SymElt& a) {
        SymElt r(a.bound_);
        if (c == 0) return r;
        for (const auto& [p, v] : a.coeffs_) r.coeffs_[p] = c * v;
        return r;
    }

    bool operator==(const SymElt& o) const { return bound_ == o.bound_ && coeffs_ == o.coeffs_; }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << c.get_str() << "*";
            os << "s" << p.to_string();
        }
        return os.str();
    }

private:
    void check_bound(const SymElt& o) const {
        if (bound_ != o.bound_)
            throw std::invalid_argument("SymElt: mismatched alphabet bounds");
    }

    int bound_;
    std::map<Partition, Rat> coeffs_;
};

/// Schur-basis product via the Littlewood-Richardson rule, truncated to
/// partitions with at most the shared alphabet bound's rows.
inline SymElt schur_product(const SymElt& x, const SymElt& y) {
    if (x.bound() != y.bound())
        throw std::invalid_argument("schur_product: mismatched alphabet bounds");
    SymElt r(x.bound());
    for (const auto& [a, ca] : x.coeffs())
        for (const auto& [b, cb] : y.coeffs())
            for (const auto& [g, m] : lr_expand(a, b, x.bound()))
                r.add(g, ca * cb * Rat(m));
    return r;
}

} // namespace symcore
