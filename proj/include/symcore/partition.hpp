#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcore {

/// Integer partition: weakly decreasing list of positive parts.
/// The empty partition is spelled "[]".
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_[0]; }
    bool empty() const { return parts_.empty(); }

    /// Row i, 0-indexed; zero beyond the last row.
    int part(int i) const {
        return (i >= 0 && i < rows()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    /// Number of boxes |alpha|.
    long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

    Partition transpose() const {
        if (parts_.empty()) return {};
        std::vector<int> t(static_cast<size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) t[static_cast<size_t>(j)]++;
        return Partition(std::move(t));
    }

    bool contains(const Partition& mu) const {
        for (int i = 0; i < mu.rows(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    /// Fits into the a x b box (at most a rows, parts at most b).
    bool fits(int a, int b) const { return rows() <= a && cols() <= b; }

    /// Complement in the a x b box: hat(alpha)_{a+1-j} = b - alpha_j.
    Partition complement(int a, int b) const {
        if (!fits(a, b)) throw std::invalid_argument("complement: partition does not fit box");
        std::vector<int> c(static_cast<size_t>(a));
        for (int j = 1; j <= a; ++j) c[static_cast<size_t>(a - j)] = b - part(j - 1);
        return Partition(std::move(c));
    }

    /// Transpose of the complement in the a x b box; lands in P(b, a).
    Partition complement_transpose(int a, int b) const { return complement(a, b).transpose(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    static Partition parse(const std::string& s) {
        size_t i = 0;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size() || s[i] != '[') throw std::invalid_argument("partition must start with '['");
        ++i;
        std::vector<int> parts;
        std::string cur;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c == ']') {
                if (!cur.empty()) parts.push_back(std::stoi(cur));
                return Partition(std::move(parts));
            }
            if (c == ',') {
                if (cur.empty()) throw std::invalid_argument("empty entry in partition");
                parts.push_back(std::stoi(cur));
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        throw std::invalid_argument("partition missing ']'");
    }

private:
    std::vector<int> parts_;
};

/// All partitions with at most `rows` rows and parts at most `cols` (the box P(rows, cols)).
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> stack;
    auto gen = [&](auto&& self, int row, int maxPart) -> void {
        out.push_back(Partition(std::vector<int>(stack)));
        if (row == rows) return;
        for (int p = std::min(maxPart, cols); p >= 1; --p) {
            stack.push_back(p);
            self(self, row + 1, p);
            stack.pop_back();
        }
    };
    gen(gen, 0, cols);
    std::sort(out.begin(), out.end());
    return out;
}

/// All partitions of n with at most `rows` rows.
inline std::vector<Partition> partitions_of(int n, int rows) {
    std::vector<Partition> out;
    std::vector<int> stack;
    auto gen = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.push_back(Partition(std::vector<int>(stack)));
            return;
        }
        if (static_cast<int>(stack.size()) == rows) return;
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            stack.push_back(p);
            self(self, remaining - p, p);
            stack.pop_back();
        }
    };
    gen(gen, n, n);
    return out;
}

} // namespace symcore
