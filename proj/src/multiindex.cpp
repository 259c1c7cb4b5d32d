#include "tancx/multiindex.hpp"

#include <algorithm>
#include <sstream>

#include "tancx/error.hpp"

namespace tancx {

namespace {

// Masks are 32-bit words; keep one bit of headroom for push.
constexpr int kMaxAmbient = 31;

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries, int ambient)
    : entries_(std::move(entries)), ambient_(ambient) {
    if (ambient_ < 0 || ambient_ > kMaxAmbient) {
        throw InvalidArgument("multi-index ambient " + std::to_string(ambient_) +
                              " outside [0, " + std::to_string(kMaxAmbient) + "]");
    }
    for (std::size_t p = 0; p < entries_.size(); ++p) {
        if (entries_[p] < 1 || entries_[p] > ambient_) {
            throw InvalidArgument("multi-index entry " + std::to_string(entries_[p]) +
                                  " outside {1.." + std::to_string(ambient_) + "}");
        }
        if (p > 0 && entries_[p] <= entries_[p - 1]) {
            throw InvalidArgument("multi-index entries must be strictly increasing");
        }
    }
}

MultiIndex MultiIndex::from_mask(std::uint32_t mask, int ambient) {
    std::vector<int> entries;
    for (int b = 0; b < 32; ++b) {
        if (mask & (std::uint32_t{1} << b)) entries.push_back(b + 1);
    }
    return MultiIndex(std::move(entries), ambient);
}

MultiIndex MultiIndex::full(int ambient) {
    std::vector<int> entries(static_cast<std::size_t>(std::max(ambient, 0)));
    for (int e = 0; e < ambient; ++e) entries[e] = e + 1;
    return MultiIndex(std::move(entries), ambient);
}

bool MultiIndex::contains(int value) const {
    return std::binary_search(entries_.begin(), entries_.end(), value);
}

std::uint32_t MultiIndex::mask() const {
    std::uint32_t m = 0;
    for (int e : entries_) m |= std::uint32_t{1} << (e - 1);
    return m;
}

std::string MultiIndex::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t p = 0; p < entries_.size(); ++p) {
        if (p) out << ',';
        out << entries_[p];
    }
    out << ')';
    return out.str();
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                        b.entries_.begin(), b.entries_.end());
        c != 0) {
        return c;
    }
    return a.ambient_ <=> b.ambient_;
}

MultiIndex push(const MultiIndex& index, int i) {
    std::vector<int> out = index.entries();
    for (int& e : out) {
        if (e > i) ++e;
    }
    return MultiIndex(std::move(out), index.ambient() + 1);
}

std::optional<MultiIndex> pull(const MultiIndex& index, int i) {
    const int ambient = index.ambient() - 1;
    if (ambient < 0) return std::nullopt;
    std::vector<int> out = index.entries();
    for (int& e : out) {
        if (e > i) --e;
    }
    for (std::size_t p = 0; p < out.size(); ++p) {
        if (out[p] < 1 || out[p] > ambient) return std::nullopt;
        if (p > 0 && out[p] == out[p - 1]) return std::nullopt;
    }
    return MultiIndex(std::move(out), ambient);
}

std::optional<MultiIndex> raise_swap(const MultiIndex& index, int i) {
    if (!index.contains(i) || index.contains(i + 1) || i + 1 > index.ambient()) {
        return std::nullopt;
    }
    std::vector<int> out = index.entries();
    for (int& e : out) {
        if (e == i) e = i + 1;
    }
    return MultiIndex(std::move(out), index.ambient());
}

std::optional<MultiIndex> lower_swap(const MultiIndex& index, int i) {
    if (i < 1 || index.contains(i) || !index.contains(i + 1)) return std::nullopt;
    std::vector<int> out = index.entries();
    for (int& e : out) {
        if (e == i + 1) e = i;
    }
    return MultiIndex(std::move(out), index.ambient());
}

std::vector<MultiIndex> subsets(int k, int m) {
    if (k < 0 || m < 0 || m > k) {
        throw InvalidArgument("subsets(" + std::to_string(k) + ", " + std::to_string(m) +
                              "): need 0 <= m <= k");
    }
    std::vector<MultiIndex> out;
    out.reserve(binomial(k, m));
    std::vector<int> current(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) current[p] = p + 1;
    while (true) {
        out.emplace_back(current, k);
        // Advance to the lexicographic successor.
        int p = m - 1;
        while (p >= 0 && current[p] == k - (m - 1 - p)) --p;
        if (p < 0) break;
        ++current[p];
        for (int q = p + 1; q < m; ++q) current[q] = current[q - 1] + 1;
    }
    return out;
}

std::vector<MultiIndex> all_subsets(int k) {
    std::vector<MultiIndex> out;
    for (int m = 0; m <= k; ++m) {
        auto level = subsets(k, m);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::uint64_t binomial(int n, int m) {
    if (m < 0 || n < 0 || m > n) return 0;
    std::uint64_t r = 1;
    for (int t = 1; t <= m; ++t) r = r * static_cast<std::uint64_t>(n - m + t) / t;
    return r;
}

}  // namespace tancx
