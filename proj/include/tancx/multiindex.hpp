#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tancx {

/// Strictly increasing index set I ⊆ {1..ambient}.
///
/// This is the bookkeeping unit of the splitting of iterated shifted tangent
/// bundles: the degree-m part of the level-k object carries one copy of the
/// fiber per m-element index set. Values are immutable once built.
class MultiIndex {
public:
    MultiIndex() = default;

    /// Throws InvalidArgument unless entries are strictly increasing and
    /// contained in {1..ambient}.
    MultiIndex(std::vector<int> entries, int ambient);

    /// Subset with the given bit pattern; bit b stands for entry b+1.
    static MultiIndex from_mask(std::uint32_t mask, int ambient);

    /// The full index (1, .., ambient).
    static MultiIndex full(int ambient);

    const std::vector<int>& entries() const { return entries_; }
    int ambient() const { return ambient_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool contains(int value) const;
    bool is_full() const { return static_cast<int>(entries_.size()) == ambient_; }

    std::uint32_t mask() const;

    std::string to_string() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    /// Lexicographic on the entry sequence, ambient as tie-breaker.
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<int> entries_;
    int ambient_ = 0;
};

/// Every entry strictly greater than `i` moves right by one; ambient grows by
/// one. Total: the result is always strictly increasing.
MultiIndex push(const MultiIndex& index, int i);

/// Every entry strictly greater than `i` moves left by one; ambient shrinks by
/// one. Absent when two entries collide (the zero component) or when the top
/// entry would stay outside the smaller ambient.
std::optional<MultiIndex> pull(const MultiIndex& index, int i);

/// Replaces entry i by i+1. Absent unless i ∈ J and i+1 ∉ J.
std::optional<MultiIndex> raise_swap(const MultiIndex& index, int i);

/// Replaces entry i+1 by i. Absent unless i+1 ∈ J, i ∉ J and i >= 1.
std::optional<MultiIndex> lower_swap(const MultiIndex& index, int i);

/// All m-element subsets of {1..k} in lexicographic order.
std::vector<MultiIndex> subsets(int k, int m);

/// All subsets of {1..k}, by cardinality and then lexicographically.
std::vector<MultiIndex> all_subsets(int k);

std::uint64_t binomial(int n, int m);

}  // namespace tancx
