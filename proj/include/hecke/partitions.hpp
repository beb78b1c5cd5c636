#pragma once

#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/poly.hpp"

namespace hecke {

// Integer partition: weakly decreasing positive parts, possibly none.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    [[nodiscard]] int size() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    // 1-based row access; rows past the last part have size zero.
    [[nodiscard]] int part(int i) const {
        if (i < 1) throw IndexOutOfRange("partition rows are 1-based");
        return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }

    // Containment of Young diagrams: every row of other fits inside this row.
    [[nodiscard]] bool contains(const Partition& other) const {
        if (other.length() > length()) return false;
        for (int i = 1; i <= other.length(); ++i)
            if (other.part(i) > part(i)) return false;
        return true;
    }

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

// Composition: ordered positive parts; zero parts are never stored.
class Composition {
  public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }

    [[nodiscard]] int size() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int part(int i) const {
        if (i < 1 || i > length()) throw IndexOutOfRange("composition part index");
        return parts_[static_cast<std::size_t>(i - 1)];
    }
    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const Composition&) const = default;

  private:
    std::vector<int> parts_;
};

// Pair of compositions (alpha; beta); either side may be empty.
struct Bicomposition {
    Composition alpha;
    Composition beta;

    [[nodiscard]] int size() const { return alpha.size() + beta.size(); }
    [[nodiscard]] int length() const { return alpha.length() + beta.length(); }

    auto operator<=>(const Bicomposition&) const = default;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        acc.push_back(first);
        partitions_rec(remaining - first, first, acc, out);
        acc.pop_back();
    }
}

inline void compositions_rec(int remaining, std::vector<int>& acc, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int first = remaining; first >= 1; --first) {
        acc.push_back(first);
        compositions_rec(remaining - first, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

// All partitions of r in decreasing lexicographic order; r = 0 yields the
// empty partition alone.
inline std::vector<Partition> enumerate_partitions(int r) {
    if (r < 0) throw IndexOutOfRange("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::partitions_rec(r, r == 0 ? 1 : r, acc, out);
    return out;
}

// All compositions of k, ordered by first part descending, recursively.
inline std::vector<Composition> enumerate_compositions(int k) {
    if (k < 0) throw IndexOutOfRange("enumerate_compositions: negative size");
    std::vector<Composition> out;
    std::vector<int> acc;
    detail::compositions_rec(k, acc, out);
    return out;
}

// All bicompositions of a, |alpha| descending, each side in composition order.
inline std::vector<Bicomposition> enumerate_bicompositions(int a) {
    if (a < 0) throw IndexOutOfRange("enumerate_bicompositions: negative size");
    std::vector<Bicomposition> out;
    for (int s = a; s >= 0; --s)
        for (const Composition& alpha : enumerate_compositions(s))
            for (const Composition& beta : enumerate_compositions(a - s))
                out.push_back({alpha, beta});
    return out;
}

// Partitions of r whose diagram fits in the hook with arm width m and leg
// height n: rows beyond the m-th have length at most n.
inline std::vector<Partition> hook_partitions(int m, int n, int r) {
    if (m < 0 || n < 0 || m + n < 1) throw IndexOutOfRange("hook_partitions: need m, n >= 0, m + n >= 1");
    std::vector<Partition> out;
    for (Partition& lambda : enumerate_partitions(r))
        if (lambda.part(m + 1) <= n) out.push_back(std::move(lambda));
    return out;
}

// Binomial coefficient; zero outside 0 <= k <= n.
inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int num = 1;
    for (int i = 1; i <= k; ++i) {
        num *= n - k + i;
        num /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return num;
}

}  // namespace hecke
