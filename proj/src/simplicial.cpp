#include "tancx/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "tancx/error.hpp"
#include "tancx/multiindex.hpp"

namespace tancx {

namespace {

void expect_shape(const Mat& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw ShapeError(what + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    }
}

std::string op_name(const char* op, int level, int i) {
    return std::string(op) + "^" + std::to_string(level) + "_" + std::to_string(i);
}

}  // namespace

SimplicialVS::SimplicialVS(std::vector<std::size_t> dims, std::vector<std::vector<Mat>> faces,
                           std::vector<std::vector<Mat>> degens)
    : dims_(std::move(dims)), faces_(std::move(faces)), degens_(std::move(degens)) {
    if (dims_.empty()) throw ShapeError("simplicial vector space needs at least level 0");
    const std::size_t n = dims_.size() - 1;
    if (faces_.size() != n + 1) {
        throw ShapeError("faces has " + std::to_string(faces_.size()) + " levels, expected " +
                         std::to_string(n + 1));
    }
    if (degens_.size() != n) {
        throw ShapeError("degens has " + std::to_string(degens_.size()) + " levels, expected " +
                         std::to_string(n));
    }
    if (!faces_[0].empty()) throw ShapeError("faces[0] must be empty");
    for (std::size_t l = 1; l <= n; ++l) {
        if (faces_[l].size() != l + 1) {
            throw ShapeError("level " + std::to_string(l) + " has " +
                             std::to_string(faces_[l].size()) + " faces, expected " +
                             std::to_string(l + 1));
        }
        for (std::size_t i = 0; i <= l; ++i)
            expect_shape(faces_[l][i], dims_[l - 1], dims_[l],
                         op_name("d", static_cast<int>(l), static_cast<int>(i)));
    }
    for (std::size_t l = 0; l < n; ++l) {
        if (degens_[l].size() != l + 1) {
            throw ShapeError("level " + std::to_string(l) + " has " +
                             std::to_string(degens_[l].size()) + " degeneracies, expected " +
                             std::to_string(l + 1));
        }
        for (std::size_t i = 0; i <= l; ++i)
            expect_shape(degens_[l][i], dims_[l + 1], dims_[l],
                         op_name("s", static_cast<int>(l), static_cast<int>(i)));
    }
}

const Mat& SimplicialVS::face(int level, int i) const {
    if (level < 1 || level > max_level() || i < 0 || i > level) {
        throw OutOfRange("no face map " + op_name("d", level, i));
    }
    return faces_[static_cast<std::size_t>(level)][static_cast<std::size_t>(i)];
}

const Mat& SimplicialVS::degeneracy(int level, int i) const {
    if (level < 0 || level >= max_level() || i < 0 || i > level) {
        throw OutOfRange("no degeneracy map " + op_name("s", level, i));
    }
    return degens_[static_cast<std::size_t>(level)][static_cast<std::size_t>(i)];
}

SimplicialVS SimplicialVS::truncated(int level) const {
    if (level < 0 || level > max_level()) throw OutOfRange("truncation level out of range");
    const auto n = static_cast<std::size_t>(level);
    return SimplicialVS({dims_.begin(), dims_.begin() + static_cast<std::ptrdiff_t>(n + 1)},
                        {faces_.begin(), faces_.begin() + static_cast<std::ptrdiff_t>(n + 1)},
                        {degens_.begin(), degens_.begin() + static_cast<std::ptrdiff_t>(n)});
}

// ------------------------------------------------------------ chain complex

ChainComplex::ChainComplex(std::vector<std::size_t> dims, std::vector<Mat> diffs)
    : dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (dims_.empty()) throw ShapeError("chain complex needs at least degree 0");
    if (diffs_.size() != dims_.size()) {
        throw ShapeError("chain complex has " + std::to_string(diffs_.size()) +
                         " differentials, expected " + std::to_string(dims_.size()));
    }
    expect_shape(diffs_[0], 0, dims_[0], "differential 0");
    for (std::size_t k = 1; k < dims_.size(); ++k)
        expect_shape(diffs_[k], dims_[k - 1], dims_[k], "differential " + std::to_string(k));
    for (std::size_t k = 1; k + 1 < dims_.size(); ++k) {
        if (!(diffs_[k] * diffs_[k + 1]).is_zero()) {
            throw InvalidComplex("differential " + std::to_string(k) + " composed with " +
                                 std::to_string(k + 1) + " is nonzero");
        }
    }
}

ChainComplex ChainComplex::with_zero_differential(std::vector<std::size_t> dims) {
    std::vector<Mat> diffs;
    for (std::size_t k = 0; k < dims.size(); ++k) diffs.emplace_back(k == 0 ? 0 : dims[k - 1], dims[k]);
    return ChainComplex(std::move(dims), std::move(diffs));
}

// --------------------------------------------------------------- identities

std::string IdentityViolation::describe() const {
    const std::string where = " at level " + std::to_string(level);
    const std::string is = std::to_string(i);
    const std::string js = std::to_string(j);
    switch (kind) {
        case IdentityKind::FaceFace:
            return "d_" + is + " d_" + js + " = d_" + std::to_string(j - 1) + " d_" + is + where;
        case IdentityKind::DegenDegen:
            return "s_" + is + " s_" + js + " = s_" + std::to_string(j + 1) + " s_" + is + where;
        case IdentityKind::FaceDegen:
            if (i < j) return "d_" + is + " s_" + js + " = s_" + std::to_string(j - 1) + " d_" + is + where;
            if (i == j || i == j + 1) return "d_" + is + " s_" + js + " = id" + where;
            return "d_" + is + " s_" + js + " = s_" + js + " d_" + std::to_string(i - 1) + where;
    }
    return {};
}

ValidationReport validate(const SimplicialVS& s) {
    ValidationReport report;
    const int n = s.max_level();
    // d_i d_j = d_{j-1} d_i on X_l, i < j.
    for (int l = 2; l <= n; ++l)
        for (int j = 1; j <= l; ++j)
            for (int i = 0; i < j; ++i)
                if (s.face(l - 1, i) * s.face(l, j) != s.face(l - 1, j - 1) * s.face(l, i))
                    report.violations.push_back({IdentityKind::FaceFace, l, i, j});
    // s_i s_j = s_{j+1} s_i on X_l, i <= j.
    for (int l = 0; l + 2 <= n; ++l)
        for (int j = 0; j <= l; ++j)
            for (int i = 0; i <= j; ++i)
                if (s.degeneracy(l + 1, i) * s.degeneracy(l, j) !=
                    s.degeneracy(l + 1, j + 1) * s.degeneracy(l, i))
                    report.violations.push_back({IdentityKind::DegenDegen, l, i, j});
    // d_i s_j on X_l.
    for (int l = 0; l + 1 <= n; ++l) {
        for (int j = 0; j <= l; ++j) {
            for (int i = 0; i <= l + 1; ++i) {
                const Mat lhs = s.face(l + 1, i) * s.degeneracy(l, j);
                Mat rhs;
                if (i < j) {
                    rhs = s.degeneracy(l - 1, j - 1) * s.face(l, i);
                } else if (i == j || i == j + 1) {
                    rhs = Mat::identity(s.dim(l));
                } else {
                    rhs = s.degeneracy(l - 1, j) * s.face(l, i - 1);
                }
                if (lhs != rhs) report.violations.push_back({IdentityKind::FaceDegen, l, i, j});
            }
        }
    }
    return report;
}

// -------------------------------------------------------------------- horns

namespace {

// Rows of `m` appended to `sys` with column offset; `sign` multiplies.
void append_block(std::vector<std::vector<std::pair<std::uint32_t, Rat>>>& rows, const Mat& m,
                  std::size_t col_offset, int sign) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m(r, c)) != 0)
                rows[r].emplace_back(static_cast<std::uint32_t>(col_offset + c),
                                     sign > 0 ? Rat(m(r, c)) : Rat(-m(r, c)));
}

Mat stacked_faces(const SimplicialVS& s, int level, int skip, int first) {
    std::size_t rows = 0;
    for (int i = first; i <= level; ++i)
        if (i != skip) rows += s.dim(level - 1);
    Mat out(rows, s.dim(level));
    std::size_t r0 = 0;
    for (int i = first; i <= level; ++i) {
        if (i == skip) continue;
        const Mat& d = s.face(level, i);
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c) out(r0 + r, c) = d(r, c);
        r0 += d.rows();
    }
    return out;
}

}  // namespace

HornSpace horn_space(const SimplicialVS& s, int level, int missing) {
    if (level < 1 || level > s.max_level() || missing < 0 || missing > level) {
        throw OutOfRange("horn (" + std::to_string(level) + ", " + std::to_string(missing) +
                         ") outside 1 <= l <= " + std::to_string(s.max_level()) + ", 0 <= j <= l");
    }
    const std::size_t block = s.dim(level - 1);
    std::vector<int> faces;
    for (int i = 0; i <= level; ++i)
        if (i != missing) faces.push_back(i);
    SparseMat constraints(block * faces.size());
    if (level >= 2) {
        for (std::size_t pa = 0; pa < faces.size(); ++pa) {
            for (std::size_t pb = pa + 1; pb < faces.size(); ++pb) {
                const int a = faces[pa];
                const int b = faces[pb];
                // d_a y_b - d_{b-1} y_a = 0
                std::vector<std::vector<std::pair<std::uint32_t, Rat>>> rows(s.dim(level - 2));
                append_block(rows, s.face(level - 1, a), pb * block, +1);
                append_block(rows, s.face(level - 1, b - 1), pa * block, -1);
                for (auto& r : rows) constraints.add_row(std::move(r));
            }
        }
    }
    HornSpace h;
    h.level = level;
    h.missing = missing;
    h.space = nullspace(constraints);
    h.projection = stacked_faces(s, level, missing, 0).select_rows(h.space.free_columns);
    return h;
}

KanReport kan_report(const SimplicialVS& s, int degree) {
    KanReport report{degree, s.max_level(), {}, true};
    for (int l = 1; l <= s.max_level(); ++l) {
        for (int j = 0; j <= l; ++j) {
            const HornSpace h = horn_space(s, l, j);
            const std::size_t r = rank(h.projection);
            HornCheck check{l, j, h.dim(), s.dim(l), r, r == h.dim(), r == s.dim(l)};
            if (!check.surjective || (l > degree && !check.injective)) report.verdict = false;
            report.horns.push_back(check);
        }
    }
    return report;
}

// -------------------------------------------------------------------- Moore

std::vector<Nullspace> moore_kernels(const SimplicialVS& s) {
    std::vector<Nullspace> kernels;
    Nullspace base;
    base.ambient = s.dim(0);
    for (std::size_t c = 0; c < s.dim(0); ++c) {
        base.free_columns.push_back(c);
        Vec e(s.dim(0));
        e[c] = 1;
        base.basis.push_back(std::move(e));
    }
    kernels.push_back(std::move(base));
    for (int k = 1; k <= s.max_level(); ++k)
        kernels.push_back(nullspace(SparseMat::from_dense(stacked_faces(s, k, 0, 1))));
    return kernels;
}

Mat restricted_face_zero(const SimplicialVS& s, int k, const Nullspace& source,
                         const Nullspace& target) {
    Mat out(target.dim(), source.dim());
    const Mat& d0 = s.face(k, 0);
    for (std::size_t b = 0; b < source.dim(); ++b) {
        const Vec image = d0 * source.basis[b];
        if (!target.contains(image)) {
            throw InternalError("d_0 of a level-" + std::to_string(k) +
                                " normalized chain leaves the normalized subspace");
        }
        const Vec coords = target.coordinates(image);
        for (std::size_t r = 0; r < coords.size(); ++r) out(r, b) = coords[r];
    }
    return out;
}

ChainComplex moore_complex(const SimplicialVS& s) {
    const auto kernels = moore_kernels(s);
    std::vector<std::size_t> dims;
    std::vector<Mat> diffs;
    for (const auto& k : kernels) dims.push_back(k.dim());
    diffs.emplace_back(0, dims[0]);
    for (int k = 1; k <= s.max_level(); ++k)
        diffs.push_back(restricted_face_zero(s, k, kernels[static_cast<std::size_t>(k)],
                                             kernels[static_cast<std::size_t>(k - 1)]));
    return ChainComplex(std::move(dims), std::move(diffs));
}

// ---------------------------------------------------------------- Dold–Kan

namespace {

// A surjection [m] ↠ [i] is stored by its jump set S ⊆ {1..m}: σ(t) counts
// the jumps at positions <= t.
struct DkLevel {
    int m = 0;
    std::size_t dim = 0;
    std::map<std::pair<int, std::uint32_t>, std::size_t> offset;  // (i, jumps) → column
    std::vector<std::pair<int, std::uint32_t>> blocks;
};

DkLevel dk_level(const ChainComplex& c, int m) {
    DkLevel level;
    level.m = m;
    for (int i = 0; i <= std::min(m, c.length()); ++i) {
        for (const MultiIndex& jumps : subsets(m, i)) {
            level.offset[{i, jumps.mask()}] = level.dim;
            level.blocks.emplace_back(i, jumps.mask());
            level.dim += c.dim(i);
        }
    }
    return level;
}

int apply_surjection(std::uint32_t jumps, int t) {
    return std::popcount(jumps & ((std::uint32_t{1} << t) - 1));
}

// Matrix of X(θ) : X_m → X_{m'} where θ : [m'] → [m] is monotone.
Mat dk_operator(const ChainComplex& c, const DkLevel& src, const DkLevel& dst,
                const std::vector<int>& theta) {
    Mat out(dst.dim, src.dim);
    for (const auto& [i, jumps] : src.blocks) {
        std::vector<int> phi(theta.size());
        for (std::size_t t = 0; t < theta.size(); ++t) phi[t] = apply_surjection(jumps, theta[t]);
        std::vector<int> image(phi);
        image.erase(std::unique(image.begin(), image.end()), image.end());
        std::uint32_t epi = 0;
        for (std::size_t t = 1; t < phi.size(); ++t)
            if (phi[t] != phi[t - 1]) epi |= std::uint32_t{1} << (t - 1);
        const auto width = static_cast<int>(image.size());
        const std::size_t col = src.offset.at({i, jumps});
        if (width == i + 1) {
            const std::size_t row = dst.offset.at({i, epi});
            for (std::size_t x = 0; x < c.dim(i); ++x) out(row + x, col + x) = 1;
        } else if (width == i && image.front() == 1) {
            // Image misses exactly 0: the mono part is the coface skipping 0.
            const std::size_t row = dst.offset.at({i - 1, epi});
            const Mat& d = c.diff(i);
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (std::size_t x = 0; x < d.cols(); ++x) out(row + r, col + x) = d(r, x);
        }
    }
    return out;
}

}  // namespace

SimplicialVS dk_realize(const ChainComplex& c, int max_level) {
    if (max_level < c.length()) {
        throw InvalidArgument("Dold-Kan realization to level " + std::to_string(max_level) +
                              " cannot hold a complex of length " + std::to_string(c.length()));
    }
    std::vector<DkLevel> levels;
    for (int m = 0; m <= max_level; ++m) levels.push_back(dk_level(c, m));
    std::vector<std::size_t> dims;
    for (const auto& l : levels) dims.push_back(l.dim);

    std::vector<std::vector<Mat>> faces(static_cast<std::size_t>(max_level) + 1);
    std::vector<std::vector<Mat>> degens(static_cast<std::size_t>(max_level));
    for (int m = 1; m <= max_level; ++m) {
        for (int j = 0; j <= m; ++j) {
            std::vector<int> coface(static_cast<std::size_t>(m));
            for (int t = 0; t < m; ++t) coface[t] = t < j ? t : t + 1;
            faces[m].push_back(dk_operator(c, levels[m], levels[m - 1], coface));
        }
    }
    for (int m = 0; m < max_level; ++m) {
        for (int j = 0; j <= m; ++j) {
            std::vector<int> codegen(static_cast<std::size_t>(m) + 2);
            for (int t = 0; t <= m + 1; ++t) codegen[t] = t <= j ? t : t - 1;
            degens[m].push_back(dk_operator(c, levels[m], levels[m + 1], codegen));
        }
    }
    return SimplicialVS(std::move(dims), std::move(faces), std::move(degens));
}

ChainComplex extended(const ChainComplex& c, int length) {
    std::vector<std::size_t> dims = c.dims();
    std::vector<Mat> diffs = c.diffs();
    while (static_cast<int>(dims.size()) <= length) {
        diffs.emplace_back(dims.back(), 0);
        dims.push_back(0);
    }
    return ChainComplex(std::move(dims), std::move(diffs));
}

}  // namespace tancx
