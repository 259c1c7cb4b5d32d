#include "tancx/examples.hpp"

#include <algorithm>
#include <numeric>

#include "tancx/error.hpp"

namespace tancx {

namespace {

constexpr int kMaxExampleLevel = 10;
constexpr std::size_t kMaxExampleDim = 16;

void add_identity(Mat& m, std::size_t row, std::size_t col, std::size_t n) {
    for (std::size_t t = 0; t < n; ++t) m(row + t, col + t) += 1;
}

void add_block(Mat& m, std::size_t row, std::size_t col, const Mat& block) {
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) m(row + r, col + c) += block(r, c);
}

void check_level(int max_level, int least) {
    if (max_level < least || max_level > kMaxExampleLevel) {
        throw InvalidArgument("max level " + std::to_string(max_level) + " outside [" +
                              std::to_string(least) + ", " + std::to_string(kMaxExampleLevel) + "]");
    }
}

}  // namespace

SimplicialVS nerve_group_vs(std::size_t d, int max_level) {
    check_level(max_level, 1);
    const auto n = static_cast<std::size_t>(max_level);
    std::vector<std::size_t> dims(n + 1);
    for (std::size_t l = 0; l <= n; ++l) dims[l] = l * d;

    std::vector<std::vector<Mat>> faces(n + 1), degens(n);
    for (std::size_t l = 1; l <= n; ++l) {
        for (std::size_t i = 0; i <= l; ++i) {
            Mat f(dims[l - 1], dims[l]);
            // output coordinate p (0-based, l-1 of them) in terms of inputs
            for (std::size_t p = 0; p + 1 < l; ++p) {
                if (i == 0) {
                    add_identity(f, p * d, (p + 1) * d, d);
                } else if (p + 1 < i) {
                    add_identity(f, p * d, p * d, d);
                } else if (p + 1 == i) {
                    add_identity(f, p * d, p * d, d);
                    add_identity(f, p * d, (p + 1) * d, d);
                } else {
                    add_identity(f, p * d, (p + 1) * d, d);
                }
            }
            faces[l].push_back(std::move(f));
        }
    }
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j <= l; ++j) {
            Mat s(dims[l + 1], dims[l]);
            for (std::size_t p = 0; p < l; ++p) add_identity(s, (p < j ? p : p + 1) * d, p * d, d);
            degens[l].push_back(std::move(s));
        }
    }
    return SimplicialVS(std::move(dims), std::move(faces), std::move(degens));
}

SimplicialVS nerve_pair_groupoid(std::size_t d, int max_level) {
    check_level(max_level, 0);
    const auto n = static_cast<std::size_t>(max_level);
    std::vector<std::size_t> dims(n + 1);
    for (std::size_t k = 0; k <= n; ++k) dims[k] = (k + 1) * d;

    std::vector<std::vector<Mat>> faces(n + 1), degens(n);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            Mat f(dims[k - 1], dims[k]);
            for (std::size_t p = 0; p < k; ++p) add_identity(f, p * d, (p < i ? p : p + 1) * d, d);
            faces[k].push_back(std::move(f));
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            Mat s(dims[k + 1], dims[k]);
            for (std::size_t p = 0; p <= k + 1; ++p) add_identity(s, p * d, (p <= i ? p : p - 1) * d, d);
            degens[k].push_back(std::move(s));
        }
    }
    return SimplicialVS(std::move(dims), std::move(faces), std::move(degens));
}

SimplicialVS wbar(const SimplicialVS& s) {
    const int n = s.max_level();
    if (n < 1) throw InvalidArgument("wbar needs max level >= 1");

    // Level k holds blocks q = 0..k-1 with block q in S_{k-1-q}.
    std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(n) + 1);
    std::vector<std::size_t> dims(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        std::size_t at = 0;
        for (int q = 0; q < k; ++q) {
            offsets[k].push_back(at);
            at += s.dim(k - 1 - q);
        }
        dims[k] = at;
    }

    std::vector<std::vector<Mat>> faces(static_cast<std::size_t>(n) + 1), degens(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i <= k; ++i) {
            Mat f(dims[k - 1], dims[k]);
            for (int q = 0; q <= k - 2; ++q) {
                const std::size_t row = offsets[k - 1][q];
                if (q < i - 1) {
                    add_block(f, row, offsets[k][q], s.face(k - 1 - q, i - 1 - q));
                } else if (q == i - 1) {
                    add_block(f, row, offsets[k][q], s.face(k - 1 - q, 0));
                    add_identity(f, row, offsets[k][q + 1], s.dim(k - 2 - q));
                } else {
                    add_identity(f, row, offsets[k][q + 1], s.dim(k - 2 - q));
                }
            }
            faces[k].push_back(std::move(f));
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i <= k; ++i) {
            Mat g(dims[k + 1], dims[k]);
            for (int q = 0; q <= k; ++q) {
                const std::size_t row = offsets[k + 1][q];
                if (q < i) {
                    add_block(g, row, offsets[k][q], s.degeneracy(k - 1 - q, i - 1 - q));
                } else if (q > i) {
                    add_identity(g, row, offsets[k][q - 1], s.dim(k - q));
                }
            }
            degens[k].push_back(std::move(g));
        }
    }
    return SimplicialVS(std::move(dims), std::move(faces), std::move(degens));
}

// ------------------------------------------------------------------ catalogue

namespace {

enum class Recipe { Point, NerveGroup, PairGroupoid, CrossedModule, NTower, WbarNerve, Courant };

struct Preset {
    const char* name;
    const char* summary;
    Recipe recipe;
    std::vector<std::size_t> default_dims;
    std::size_t min_dims;
    std::size_t max_dims;
    int default_level;
    bool documentation_only;
};

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table{
        {"point", "the zero simplicial vector space", Recipe::Point, {}, 0, 0, 3, false},
        {"nerve-group", "nerve of the additive group Q^d", Recipe::NerveGroup, {1}, 1, 1, 3, false},
        {"pair-groupoid", "pair groupoid of Q^d", Recipe::PairGroupoid, {1}, 1, 1, 3, false},
        {"crossed-module", "strict 2-group from h -> g, including h into the leading coordinates of g",
         Recipe::CrossedModule, {2, 1}, 2, 2, 3, false},
        {"ntower", "n-tower with vanishing cocycles, one entry per degree", Recipe::NTower, {1, 1, 1}, 1, 6, 0,
         false},
        {"wbar-nerve", "classifying complex of the nerve of Q^d", Recipe::WbarNerve, {1}, 1, 1, 4, false},
        {"courant", "dimension profile of the standard Courant 2-groupoid over an n-manifold", Recipe::Courant,
         {1}, 1, 1, 3, true},
    };
    return table;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (name == p.name) return p;
    std::string known;
    for (const auto& p : presets()) known += std::string(known.empty() ? "" : ", ") + p.name;
    throw InvalidArgument("unknown example '" + name + "' (known: " + known + ")");
}

std::vector<std::size_t> padded(std::vector<std::size_t> dims, int max_level) {
    dims.resize(static_cast<std::size_t>(max_level) + 1, 0);
    return dims;
}

}  // namespace

std::vector<std::string> example_names() {
    std::vector<std::string> names;
    for (const auto& p : presets()) names.emplace_back(p.name);
    return names;
}

ExampleSpec make_example(const std::string& name, const std::optional<std::vector<std::size_t>>& dims,
                         std::optional<int> max_level) {
    const Preset& p = find_preset(name);
    ExampleSpec spec;
    spec.name = p.name;
    spec.summary = p.summary;
    spec.documentation_only = p.documentation_only;
    spec.dims = dims.value_or(p.default_dims);
    if (spec.dims.size() < p.min_dims || spec.dims.size() > p.max_dims) {
        throw InvalidArgument("example '" + name + "' takes between " + std::to_string(p.min_dims) + " and " +
                              std::to_string(p.max_dims) + " dimensions, got " +
                              std::to_string(spec.dims.size()));
    }
    for (std::size_t d : spec.dims) {
        if (d > kMaxExampleDim) {
            throw InvalidArgument("example dimension " + std::to_string(d) + " exceeds " +
                                  std::to_string(kMaxExampleDim));
        }
    }
    const int least = p.recipe == Recipe::NTower ? static_cast<int>(spec.dims.size()) : 1;
    spec.max_level = max_level.value_or(std::max(p.default_level, least));
    check_level(spec.max_level, least);

    std::vector<std::size_t> expected{0};
    switch (p.recipe) {
        case Recipe::Point:
            break;
        case Recipe::NerveGroup:
        case Recipe::PairGroupoid:
            expected.push_back(spec.dims[0]);
            break;
        case Recipe::CrossedModule:
            expected.push_back(spec.dims[0]);
            expected.push_back(spec.dims[1]);
            break;
        case Recipe::NTower:
            expected.insert(expected.end(), spec.dims.begin(), spec.dims.end());
            break;
        case Recipe::WbarNerve:
            expected.push_back(0);
            expected.push_back(spec.dims[0]);
            break;
        case Recipe::Courant:
            expected.push_back(2 * spec.dims[0]);
            expected.push_back(spec.dims[0]);
            break;
    }
    if (expected.size() > static_cast<std::size_t>(spec.max_level) + 1) expected.resize(spec.max_level + 1);
    spec.expected_tangent = padded(std::move(expected), spec.max_level);
    return spec;
}

std::vector<ExampleSpec> catalogue() {
    std::vector<ExampleSpec> out;
    for (const auto& p : presets()) out.push_back(make_example(p.name));
    return out;
}

SimplicialVS build(const ExampleSpec& spec) {
    const Recipe recipe = find_preset(spec.name).recipe;
    const int n = spec.max_level;
    switch (recipe) {
        case Recipe::Point:
            return nerve_group_vs(0, n);
        case Recipe::NerveGroup:
            return nerve_group_vs(spec.dims[0], n);
        case Recipe::PairGroupoid:
            return nerve_pair_groupoid(spec.dims[0], n);
        case Recipe::CrossedModule: {
            const std::size_t g = spec.dims[0], h = spec.dims[1];
            Mat boundary(g, h);
            for (std::size_t t = 0; t < std::min(g, h); ++t) boundary(t, t) = 1;
            return dk_realize(ChainComplex({0, g, h}, {Mat(0, 0), Mat(0, g), boundary}), n);
        }
        case Recipe::NTower: {
            std::vector<std::size_t> dims{0};
            dims.insert(dims.end(), spec.dims.begin(), spec.dims.end());
            return dk_realize(ChainComplex::with_zero_differential(dims), n);
        }
        case Recipe::WbarNerve:
            return wbar(nerve_group_vs(spec.dims[0], n));
        case Recipe::Courant: {
            // T ⊕ T* → T anchors onto the first summand, T* → T ⊕ T* includes
            // into the second.
            const std::size_t m = spec.dims[0];
            Mat anchor(m, 2 * m), inclusion(2 * m, m);
            for (std::size_t t = 0; t < m; ++t) {
                anchor(t, t) = 1;
                inclusion(m + t, t) = 1;
            }
            return dk_realize(ChainComplex({m, 2 * m, m}, {Mat(0, m), anchor, inclusion}), n);
        }
    }
    throw InternalError("unhandled example recipe");
}

}  // namespace tancx
