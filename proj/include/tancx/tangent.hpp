#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tancx/exactla.hpp"
#include "tancx/multiindex.hpp"
#include "tancx/simplicial.hpp"

namespace tancx {

/// An element of ⊕_{I ⊆ {1..k}} V_I with dim V = fiber_dim: one vector per
/// multi-index. Missing components are zero. A truncated family has no
/// component at the full index (1, .., k).
class TanFamily {
public:
    TanFamily(int ambient, std::size_t fiber_dim, bool truncated = false);

    int ambient() const { return ambient_; }
    std::size_t fiber_dim() const { return fiber_dim_; }
    bool truncated() const { return truncated_; }

    /// Zero vector when the component is absent.
    const Vec& component(const MultiIndex& index) const;
    void set(const MultiIndex& index, Vec value);

    const Vec& at_mask(std::uint32_t mask) const { return components_[mask]; }
    Vec& at_mask(std::uint32_t mask) { return components_[mask]; }

    bool is_zero() const;

    friend bool operator==(const TanFamily&, const TanFamily&) = default;

private:
    void check_index(const MultiIndex& index) const;

    int ambient_;
    std::size_t fiber_dim_;
    bool truncated_;
    std::vector<Vec> components_;  // indexed by subset mask
};

/// v_0 .. v_{k-1}, each an untruncated family over {1..k-1}.
struct CompatFamily {
    int k = 0;
    std::vector<TanFamily> members;

    std::size_t fiber_dim() const { return members.empty() ? 0 : members.front().fiber_dim(); }
};

/// (σ_i w)^I = w^{push(I,i)}, plus w^{push(I,i-1)} when i ∈ I; 0 <= i <= k-1.
TanFamily sigma(const TanFamily& w, int i);

/// (coface_j x)^{push(I, j-1)} = x^I, every other component zero; 0 <= j <= k.
TanFamily coface(const TanFamily& x, int j);

struct CompatViolation {
    int i;
    int j;
    MultiIndex index;
};

struct CompatCheck {
    bool ok;
    std::optional<CompatViolation> first_violation;
};

/// σ_i v_{j+1} = σ_j v_i for all 0 <= i <= j <= k-2. Violations are searched
/// in order of (i, j) and then by index (cardinality, lexicographic).
CompatCheck check_compatible(const CompatFamily& f);

/// The unique truncated w with σ_i w = v_i for every i, built degree by
/// degree with a backwards lexicographic induction over the index sets.
/// Throws IncompatibleFamily when `f` fails check_compatible.
TanFamily reconstruct(const CompatFamily& f);

/// Independent oracle for reconstruct: every coordinate equation of
/// σ_i w = v_i stacked into one system and handed to solve_unique. Absent
/// when inconsistent; UnderdeterminedSystem propagates.
std::optional<TanFamily> reconstruct_bruteforce(const CompatFamily& f);

/// Ambient k, all members zero.
CompatFamily zero_family(int k, std::size_t fiber_dim);

/// {σ_i w}_{i=0..k-1}.
CompatFamily family_from(const TanFamily& w);

/// Tangent complex: degree k is ker p^k_0 for k >= 1, degree 0 is the zero
/// space (everything is linearized at the basepoint 0), ∂_k is d_0 restricted.
ChainComplex tangent_complex(const SimplicialVS& s);

/// Same kernels with their bases; entry 0 is the zero space.
std::vector<Nullspace> tangent_kernels(const SimplicialVS& s);

enum class FaceZeroMode {
    /// Impose the i = 0 face equations wherever the restricted coface is
    /// defined (components J with 1 ∉ J).
    Restricted,
    /// Drop every i = 0 face equation.
    Drop,
};

struct HomLimitOptions {
    FaceZeroMode face_zero = FaceZeroMode::Restricted;
    bool witnesses = false;
};

struct HomLimitDegree {
    int degree;
    std::size_t unknowns;
    std::size_t equations;
    std::size_t dim;
    /// Solution basis, only when witnesses were requested. Coordinates follow
    /// hom_limit_layout.
    std::vector<Vec> witnesses;
};

struct HomLimitReport {
    int cutoff;
    std::vector<HomLimitDegree> degrees;  // degrees 1..cutoff
    std::vector<std::size_t> previous;    // dims at cutoff-1, degrees 1..cutoff-1
    /// Cutoffs N and N-1 agree in degrees 1..N-2.
    bool stable;

    std::vector<std::size_t> dims() const;
};

/// Linearized Hom(D_•, X_•) up to level `cutoff`. Unknowns x_k^I ∈ X_k for
/// 1 <= k <= cutoff and nonempty I ⊆ {1..k}; equations
///   σ_i x_k = s_i x_{k-1}            (0 <= i <= k-1)
///   d_i x_k = coface_i x_{k-1}       (0 <= i <= k, see FaceZeroMode)
/// solved separately for every index cardinality.
HomLimitReport hom_limit(const SimplicialVS& s, int cutoff, const HomLimitOptions& options = {});

/// Dimension of the degree-`degree` block only.
std::size_t hom_limit_dim(const SimplicialVS& s, int cutoff, int degree,
                          FaceZeroMode mode = FaceZeroMode::Restricted);

struct HomLimitSlot {
    int level;
    MultiIndex index;
    std::size_t offset;
};

/// Unknown layout of a degree block: levels ascending, then index sets
/// lexicographically, each followed by dim X_k coordinates.
std::vector<HomLimitSlot> hom_limit_layout(const SimplicialVS& s, int cutoff, int degree);

}  // namespace tancx
