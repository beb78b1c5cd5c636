#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/partitions.hpp"
#include "hecke/poly.hpp"
#include "hecke/skew.hpp"
#include "hecke/tableaux.hpp"

namespace hecke {

inline const QPoly& one_minus_q() {
    static const QPoly p(std::vector<Int>{1, -1});
    return p;
}

inline const QPoly& one_plus_q() {
    static const QPoly p(std::vector<Int>{1, 1});
    return p;
}

// Weight a broken rim strip contributes on removal:
// (-q)^length * (1 - q)^(components - 1).
inline QPoly strip_weight(const BrokenRimStrip& s) {
    return neg_q_power(s.length) * power(one_minus_q(), s.components - 1);
}

// Memo for the strip removal recursion, keyed by (shape, remaining cycle
// parts). Concurrent readers are fine; entries are immutable once stored, so
// a racing recomputation writes the same value.
class CharCache {
  public:
    using Key = std::pair<SkewDiagram, std::vector<int>>;

    std::optional<QPoly> find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void store(Key key, QPoly value) {
        std::unique_lock lock(mutex_);
        map_.emplace(std::move(key), std::move(value));
    }

    [[nodiscard]] std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

  private:
    mutable std::shared_mutex mutex_;
    std::map<Key, QPoly> map_;
};

namespace detail {

// Character value by repeated strip removal. parts must be weakly
// decreasing; each step removes the first (largest remaining) part.
inline QPoly skew_char_rec(const SkewDiagram& shape, const std::vector<int>& parts,
                           std::size_t next, CharCache& cache) {
    if (shape.empty()) return 1;
    CharCache::Key key{shape, std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(next),
                                               parts.end())};
    if (auto hit = cache.find(key)) return *hit;
    QPoly total;
    for (const BrokenRimStrip& strip : enumerate_rim_strips(shape, parts[next]))
        total += strip_weight(strip) * skew_char_rec(shape.remove(strip.cells), parts, next + 1, cache);
    cache.store(std::move(key), total);
    return total;
}

}  // namespace detail

// Character of the skew module for shape at the standard element of cycle
// type mu. Requires |shape| = |mu|.
inline QPoly skew_character(const SkewDiagram& shape, const Partition& mu, CharCache& cache) {
    if (shape.size() != mu.size()) throw SizeMismatch("skew_character: |shape| and |mu| differ");
    return detail::skew_char_rec(shape, mu.parts(), 0, cache);
}

inline QPoly skew_character(const SkewDiagram& shape, const Partition& mu) {
    CharCache cache;
    return skew_character(shape, mu, cache);
}

// Same recursion with the removal order fixed by the caller instead of
// largest-first. The result must not depend on the order; tests rely on this
// entry point to confirm that.
inline QPoly skew_character_with_order(const SkewDiagram& shape, const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) {
        if (p < 1) throw IndexOutOfRange("skew_character_with_order: parts must be positive");
        total += p;
    }
    if (shape.size() != total) throw SizeMismatch("skew_character_with_order: sizes differ");
    // |shape| determines the recursion depth, so the shape alone keys the memo.
    std::map<SkewDiagram, QPoly> memo;
    auto rec = [&](auto&& self, const SkewDiagram& current, std::size_t next) -> QPoly {
        if (current.empty()) return 1;
        auto it = memo.find(current);
        if (it != memo.end()) return it->second;
        QPoly out;
        for (const BrokenRimStrip& strip : enumerate_rim_strips(current, parts[next]))
            out += strip_weight(strip) * self(self, current.remove(strip.cells), next + 1);
        memo.emplace(current, out);
        return out;
    };
    return rec(rec, shape, 0);
}

inline QPoly irreducible_character(const Partition& lambda, const Partition& mu, CharCache& cache) {
    return skew_character(SkewDiagram::straight(lambda), mu, cache);
}

inline QPoly irreducible_character(const Partition& lambda, const Partition& mu) {
    CharCache cache;
    return irreducible_character(lambda, mu, cache);
}

// Contribution of bicompositions with exactly k even-row parts and l odd-row
// parts to the one-part factor of the sign permutation character:
// sum over (alpha; beta) |= a with l(alpha) = k, l(beta) = l of
// C(m,k) C(n,l) (-q)^{|beta| - l} (1 - q)^{k + l - 1}.
inline QPoly sign_rep_part_term(int m, int n, int k, int l, int a) {
    if (a < 1) throw IndexOutOfRange("sign_rep_part_term: part must be positive");
    QPoly sum;
    for (const Bicomposition& w : enumerate_bicompositions(a)) {
        if (w.alpha.length() != k || w.beta.length() != l) continue;
        Int scalar = binomial(m, k) * binomial(n, l);
        if (scalar == 0) continue;
        sum += QPoly(scalar) * neg_q_power(w.beta.size() - l) * power(one_minus_q(), k + l - 1);
    }
    return sum;
}

// One-part factor of the sign permutation character: the sum of the terms
// above over all bicomposition shapes of a.
inline QPoly sign_rep_part_factor(int m, int n, int a) {
    if (a < 1) throw IndexOutOfRange("sign_rep_part_factor: part must be positive");
    QPoly sum;
    for (const Bicomposition& w : enumerate_bicompositions(a)) {
        Int scalar = binomial(m, w.alpha.length()) * binomial(n, w.beta.length());
        if (scalar == 0) continue;
        sum += QPoly(scalar) * neg_q_power(w.beta.size() - w.beta.length()) *
               power(one_minus_q(), w.length() - 1);
    }
    return sum;
}

// Character of the sign permutation module on m even and n odd letters at
// the standard element of cycle type mu; multiplicative over the parts.
inline QPoly sign_rep_character(int m, int n, const Partition& mu) {
    if (m < 0 || n < 0 || m + n < 1)
        throw IndexOutOfRange("sign_rep_character: need m, n >= 0 and m + n >= 1");
    QPoly out(1);
    for (int i = 1; i <= mu.length(); ++i) out *= sign_rep_part_factor(m, n, mu.part(i));
    return out;
}

// Sum of the irreducible characters over all hooks of r, in closed form:
// 2^{l(mu) - 1} * prod_i [mu_i]_{-q}. Requires a nonempty mu.
inline QPoly hook_sum_closed_form(const Partition& mu) {
    if (mu.empty()) throw IndexOutOfRange("hook_sum_closed_form: mu must be nonempty");
    QPoly out(Int(1) << (mu.length() - 1));
    for (int i = 1; i <= mu.length(); ++i) out *= neg_q_integer(mu.part(i));
    return out;
}

// The same sum taken literally over the hooks (r - i, 1^i), 0 <= i < r.
inline QPoly hook_sum_via_mn(const Partition& mu, CharCache& cache) {
    const int r = mu.size();
    if (r < 1) throw IndexOutOfRange("hook_sum_via_mn: mu must be nonempty");
    QPoly out;
    for (int i = 0; i < r; ++i) {
        std::vector<int> parts{r - i};
        parts.insert(parts.end(), static_cast<std::size_t>(i), 1);
        out += irreducible_character(Partition(std::move(parts)), mu, cache);
    }
    return out;
}

inline QPoly hook_sum_via_mn(const Partition& mu) {
    CharCache cache;
    return hook_sum_via_mn(mu, cache);
}

// Sign permutation character for m = 2, n = 1 as a product of one-part
// factors ((2 + 6q + 4(-q)^{a+1}) + (2a - 1)(1 - q)(1 + q)) / (1 + q)^2.
// Every division is exact; NotDivisible would flag a formula bug.
inline QPoly sign_rep_21_closed_form(const Partition& mu) {
    QPoly out(1);
    const QPoly denom = power(one_plus_q(), 2);
    for (int i = 1; i <= mu.length(); ++i) {
        const int a = mu.part(i);
        QPoly numerator = QPoly(2) + QPoly::monomial(6, 1) + QPoly(4) * neg_q_power(a + 1) +
                          QPoly(2 * a - 1) * one_minus_q() * one_plus_q();
        out *= exact_divide(numerator, denom);
    }
    return out;
}

// Two routes to one value; callers compare the sides.
struct IdentityPair {
    QPoly lhs;
    QPoly rhs;
    [[nodiscard]] bool consistent() const { return lhs == rhs; }
};

// Weighted sum over two-column hooks: sum of (lambda_1 - lambda_2 + 1) *
// character over lambda in H(2,1;r) with lambda_2 > 0, against its closed
// form (sign_rep_21(mu) - (2r + 1)) / 4, using that the single-row character
// is identically 1. Requires r >= 2.
inline IdentityPair weighted_hook_sum_21(const Partition& mu, CharCache& cache) {
    const int r = mu.size();
    if (r < 2) throw IndexOutOfRange("weighted_hook_sum_21: need |mu| >= 2");
    QPoly lhs;
    for (const Partition& lambda : hook_partitions(2, 1, r)) {
        if (lambda.part(2) == 0) continue;
        lhs += QPoly(lambda.part(1) - lambda.part(2) + 1) * irreducible_character(lambda, mu, cache);
    }
    QPoly rhs = exact_divide(sign_rep_21_closed_form(mu) - QPoly(2 * r + 1), QPoly(4));
    return {std::move(lhs), std::move(rhs)};
}

inline IdentityPair weighted_hook_sum_21(const Partition& mu) {
    CharCache cache;
    return weighted_hook_sum_21(mu, cache);
}

// Hooks whose characters add up to the character of the two-block strip
// shape ((a); (r - a)): the one-row or one-column shape at the ends, two
// adjacent hooks in between.
inline std::vector<Partition> hook_branching(int a, int r) {
    if (r < 1 || a < 0 || a > r) throw IndexOutOfRange("hook_branching: need 0 <= a <= r, r >= 1");
    auto hook = [](int arm, int rest) {
        std::vector<int> parts{arm};
        parts.insert(parts.end(), static_cast<std::size_t>(rest), 1);
        return Partition(std::move(parts));
    };
    if (a == 0) return {hook(1, r - 1)};
    if (a == r) return {hook(r, 0)};
    return {hook(a, r - a), hook(a + 1, r - a - 1)};
}

// Sign permutation character reassembled from irreducible pieces:
// sum over lambda in H(m,n;r) of count_semistandard(m,n,lambda) * character.
inline QPoly hook_decomposition_sum(int m, int n, const Partition& mu, CharCache& cache) {
    if (m < 0 || n < 0 || m + n < 1)
        throw IndexOutOfRange("hook_decomposition_sum: need m, n >= 0 and m + n >= 1");
    QPoly out;
    for (const Partition& lambda : hook_partitions(m, n, mu.size()))
        out += QPoly(count_semistandard(m, n, lambda)) * irreducible_character(lambda, mu, cache);
    return out;
}

inline QPoly hook_decomposition_sum(int m, int n, const Partition& mu) {
    CharCache cache;
    return hook_decomposition_sum(m, n, mu, cache);
}

// Difference between the sign permutation character and its q -> 1 product
// form prod_i (m + (-q)^{mu_i - 1} n). The difference is divisible by
// (1 - q), which is checked here; the defect itself is returned.
inline QPoly q1_defect(int m, int n, const Partition& mu) {
    QPoly product(1);
    for (int i = 1; i <= mu.length(); ++i)
        product *= QPoly(m) + QPoly(n) * neg_q_power(mu.part(i) - 1);
    QPoly defect = sign_rep_character(m, n, mu) - product;
    exact_divide(defect, one_minus_q());  // divisibility check only
    return defect;
}

// Character of the staircase strip shape of w against its expansion into
// irreducible characters weighted by tableau counts. Requires |w| = |mu|.
inline IdentityPair strip_shape_character_identity(const Bicomposition& w, const Partition& mu,
                                                   CharCache& cache) {
    if (w.size() != mu.size())
        throw SizeMismatch("strip_shape_character_identity: |w| and |mu| differ");
    if (w.size() < 1) throw IndexOutOfRange("strip_shape_character_identity: empty weight");
    QPoly lhs = skew_character(build_strip_shape(w), mu, cache);
    QPoly rhs;
    for (const Partition& lambda : hook_partitions(w.alpha.length(), w.beta.length(), mu.size()))
        rhs += QPoly(count_weight_tableaux(lambda, w)) * irreducible_character(lambda, mu, cache);
    return {std::move(lhs), std::move(rhs)};
}

inline IdentityPair strip_shape_character_identity(const Bicomposition& w, const Partition& mu) {
    CharCache cache;
    return strip_shape_character_identity(w, mu, cache);
}

}  // namespace hecke
