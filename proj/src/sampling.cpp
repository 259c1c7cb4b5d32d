#include "tancx/sampling.hpp"

#include "tancx/error.hpp"

namespace tancx {

Rat random_rat(Rng& rng) {
    const long num = static_cast<long>(rng() % 9) - 4;
    const long den = static_cast<long>(rng() % 3) + 1;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat random_small_int(Rng& rng) {
    if (rng() % 3 == 0) return 0;
    return static_cast<long>(rng() % 7) - 3;
}

Mat random_mat(Rng& rng, std::size_t rows, std::size_t cols) {
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_small_int(rng);
    return m;
}

ChainComplex random_complex(Rng& rng, int max_length, std::size_t max_dim) {
    if (max_length < 0) throw InvalidArgument("max_length must be >= 0");
    const auto length = static_cast<std::size_t>(rng() % (static_cast<std::uint64_t>(max_length) + 1));
    std::vector<std::size_t> dims(length + 1);
    for (auto& d : dims) d = static_cast<std::size_t>(rng() % (max_dim + 1));
    std::vector<Mat> diffs{Mat(0, dims[0])};
    for (std::size_t k = 1; k <= length; ++k) {
        const Mat kernel = nullspace(diffs[k - 1]).as_matrix();
        diffs.push_back(kernel * random_mat(rng, kernel.cols(), dims[k]));
    }
    return ChainComplex(std::move(dims), std::move(diffs));
}

TanFamily random_truncated_family(Rng& rng, int k, std::size_t fiber_dim) {
    TanFamily w(k, fiber_dim, true);
    for (const MultiIndex& index : all_subsets(k)) {
        if (index.is_full()) continue;
        Vec v(fiber_dim);
        for (auto& x : v) x = random_rat(rng);
        w.set(index, std::move(v));
    }
    return w;
}

TanFamily random_family(Rng& rng, int k, std::size_t fiber_dim) {
    TanFamily w(k, fiber_dim);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask)
        for (auto& x : w.at_mask(mask)) x = random_rat(rng);
    return w;
}

SparseMat compat_constraints(int k, std::size_t fiber_dim) {
    if (k < 1) throw InvalidArgument("compatible families need k >= 1");
    const std::size_t per_member = (std::size_t{1} << (k - 1)) * fiber_dim;
    auto slot = [&](int member, std::uint32_t mask, std::size_t c) {
        return static_cast<std::uint32_t>(static_cast<std::size_t>(member) * per_member + mask * fiber_dim + c);
    };
    SparseMat m(static_cast<std::size_t>(k) * per_member);
    // σ_a of member b at index I, as signed entries.
    auto add_sigma = [&](std::vector<std::pair<std::uint32_t, Rat>>& row, int a, int b, const MultiIndex& I,
                         std::size_t c, int sign) {
        row.emplace_back(slot(b, push(I, a).mask(), c), sign);
        if (I.contains(a)) row.emplace_back(slot(b, push(I, a - 1).mask(), c), sign);
    };
    for (int i = 0; i <= k - 2; ++i) {
        for (int j = i; j <= k - 2; ++j) {
            for (const MultiIndex& I : all_subsets(k - 2)) {
                for (std::size_t c = 0; c < fiber_dim; ++c) {
                    std::vector<std::pair<std::uint32_t, Rat>> row;
                    add_sigma(row, i, j + 1, I, c, 1);
                    add_sigma(row, j, i, I, c, -1);
                    m.add_row(std::move(row));
                }
            }
        }
    }
    return m;
}

CompatFamilySampler::CompatFamilySampler(int k, std::size_t fiber_dim)
    : k_(k), fiber_dim_(fiber_dim), space_(nullspace(compat_constraints(k, fiber_dim))) {}

CompatFamily CompatFamilySampler::sample(Rng& rng) const {
    Vec x(space_.ambient);
    for (const Vec& b : space_.basis) {
        const Rat coeff = random_rat(rng);
        if (coeff == 0) continue;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (b[t] != 0) x[t] += coeff * b[t];
    }
    CompatFamily f = zero_family(k_, fiber_dim_);
    std::size_t at = 0;
    for (auto& member : f.members) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (k_ - 1)); ++mask) {
            Vec& v = member.at_mask(mask);
            for (std::size_t c = 0; c < fiber_dim_; ++c) v[c] = x[at++];
        }
    }
    return f;
}

}  // namespace tancx
