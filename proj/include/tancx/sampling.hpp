#pragma once

#include <cstdint>
#include <random>

#include "tancx/simplicial.hpp"
#include "tancx/tangent.hpp"

namespace tancx {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Small rationals: numerator in [-4, 4], denominator in [1, 3].
Rat random_rat(Rng& rng);

/// Small integers in [-3, 3]; zero about a third of the time.
Rat random_small_int(Rng& rng);

Mat random_mat(Rng& rng, std::size_t rows, std::size_t cols);

/// Random complex of length <= max_length with dims <= max_dim. Each ∂_k is a
/// random map into ker ∂_{k-1}, so ∂∂ = 0 by construction.
ChainComplex random_complex(Rng& rng, int max_length, std::size_t max_dim);

/// Truncated family with random entries everywhere except the full index.
TanFamily random_truncated_family(Rng& rng, int k, std::size_t fiber_dim);

/// Untruncated family with random entries at every index.
TanFamily random_family(Rng& rng, int k, std::size_t fiber_dim);

/// Draws compatible families as random combinations of a basis of the
/// solution space of σ_i v_{j+1} = σ_j v_i, without going through sigma.
class CompatFamilySampler {
public:
    CompatFamilySampler(int k, std::size_t fiber_dim);

    CompatFamily sample(Rng& rng) const;
    std::size_t dim() const { return space_.dim(); }

private:
    int k_;
    std::size_t fiber_dim_;
    Nullspace space_;
};

/// Unknown layout used by CompatFamilySampler: member i, subset mask, coordinate.
SparseMat compat_constraints(int k, std::size_t fiber_dim);

}  // namespace tancx
