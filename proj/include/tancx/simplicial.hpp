#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tancx/exactla.hpp"

namespace tancx {

/// A finite tower X_0 .. X_N of rational vector spaces with face maps
/// d^l_i : X_l → X_{l-1} (1 <= l <= N, 0 <= i <= l) and degeneracies
/// s^l_i : X_l → X_{l+1} (0 <= l < N, 0 <= i <= l).
///
/// Construction checks shapes only; the simplicial identities are the
/// business of validate().
class SimplicialVS {
public:
    /// `faces[l][i]` is d^l_i with `faces[0]` empty; `degens[l][i]` is s^l_i.
    /// Throws ShapeError on any inconsistency with `dims`.
    SimplicialVS(std::vector<std::size_t> dims, std::vector<std::vector<Mat>> faces,
                 std::vector<std::vector<Mat>> degens);

    int max_level() const { return static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int level) const { return dims_.at(static_cast<std::size_t>(level)); }
    const std::vector<std::size_t>& dims() const { return dims_; }

    const Mat& face(int level, int i) const;
    const Mat& degeneracy(int level, int i) const;

    const std::vector<std::vector<Mat>>& faces() const { return faces_; }
    const std::vector<std::vector<Mat>>& degens() const { return degens_; }

    /// Keeps levels 0..max_level.
    SimplicialVS truncated(int max_level) const;

    friend bool operator==(const SimplicialVS&, const SimplicialVS&) = default;

private:
    std::vector<std::size_t> dims_;
    std::vector<std::vector<Mat>> faces_;
    std::vector<std::vector<Mat>> degens_;
};

/// Non-negatively graded chain complex C_0 .. C_n with ∂_k : C_k → C_{k-1}.
/// `diffs[0]` is the 0 × dim C_0 matrix. Construction rejects ∂∂ ≠ 0.
class ChainComplex {
public:
    ChainComplex() : ChainComplex({0}, {Mat(0, 0)}) {}
    ChainComplex(std::vector<std::size_t> dims, std::vector<Mat> diffs);

    /// Zero differentials.
    static ChainComplex with_zero_differential(std::vector<std::size_t> dims);

    int length() const { return static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int k) const { return dims_.at(static_cast<std::size_t>(k)); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const Mat& diff(int k) const { return diffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Mat>& diffs() const { return diffs_; }

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

private:
    std::vector<std::size_t> dims_;
    std::vector<Mat> diffs_;
};

enum class IdentityKind { FaceFace, DegenDegen, FaceDegen };

/// One failed simplicial identity. `level` is the level of the source space;
/// (i, j) are the operator indices as they appear in the identity.
struct IdentityViolation {
    IdentityKind kind;
    int level;
    int i;
    int j;

    std::string describe() const;
};

struct ValidationReport {
    std::vector<IdentityViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks d_i d_j = d_{j-1} d_i (i < j), s_i s_j = s_{j+1} s_i (i <= j) and
/// the three d_i s_j cases exactly.
ValidationReport validate(const SimplicialVS& s);

/// Hom(Λ[l, j], X): tuples (y_i)_{i≠j} of (l-1)-simplices with
/// d_a y_b = d_{b-1} y_a for a < b, both ≠ j. Variables are ordered by face
/// index and then coordinate. `projection` is p^l_j in the coordinates of
/// `space`.
struct HornSpace {
    int level = 0;
    int missing = 0;
    Nullspace space;
    Mat projection;

    std::size_t dim() const { return space.dim(); }
};

HornSpace horn_space(const SimplicialVS& s, int level, int missing);

struct HornCheck {
    int level;
    int missing;
    std::size_t horn_dim;
    std::size_t simplex_dim;
    std::size_t rank;
    bool surjective;
    bool injective;
};

struct KanReport {
    int degree;
    int max_level;
    std::vector<HornCheck> horns;
    /// All horn projections onto, and one-to-one above `degree`.
    bool verdict;
};

KanReport kan_report(const SimplicialVS& s, int degree);

/// N_0 = X_0, N_k = ∩_{i=1..k} ker d^k_i with ∂_k the restriction of d^k_0.
ChainComplex moore_complex(const SimplicialVS& s);

/// The kernels N_k together with their canonical bases (N_0 is all of X_0).
std::vector<Nullspace> moore_kernels(const SimplicialVS& s);

/// Expresses d^k_0 restricted to N_k in the bases of `kernels`.
Mat restricted_face_zero(const SimplicialVS& s, int k, const Nullspace& source,
                         const Nullspace& target);

/// `c` followed by zero spaces up to `length` (no-op when already that long).
ChainComplex extended(const ChainComplex& c, int length);

/// Dold–Kan realization up to level `max_level` (>= length of `c`).
///
/// Level m is ⊕ C_i over the surjections σ : [m] ↠ [i], ordered by i and then
/// by the jump set of σ, so the identity surjection comes last. A simplicial
/// operator θ sends the σ-summand to the δ-summand where σθ = ηδ is the
/// epi–mono factorization: identity when η = id, ∂ when η is the coface
/// skipping 0, zero otherwise. With that convention the Moore complex of the
/// realization returns `c` itself, with no sign twist.
SimplicialVS dk_realize(const ChainComplex& c, int max_level);

}  // namespace tancx
