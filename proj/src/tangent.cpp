#include "tancx/tangent.hpp"

#include <algorithm>

#include "tancx/error.hpp"

namespace tancx {

namespace {

// 2^20 components is far beyond anything the solvers can digest anyway.
constexpr int kMaxFamilyAmbient = 20;

}  // namespace

TanFamily::TanFamily(int ambient, std::size_t fiber_dim, bool truncated)
    : ambient_(ambient), fiber_dim_(fiber_dim), truncated_(truncated) {
    if (ambient < 0 || ambient > kMaxFamilyAmbient) {
        throw InvalidArgument("family ambient " + std::to_string(ambient) + " outside [0, " +
                              std::to_string(kMaxFamilyAmbient) + "]");
    }
    components_.assign(std::size_t{1} << ambient, Vec(fiber_dim));
}

void TanFamily::check_index(const MultiIndex& index) const {
    if (index.ambient() != ambient_) {
        throw InvalidArgument("index " + index.to_string() + " has ambient " +
                              std::to_string(index.ambient()) + ", family has " +
                              std::to_string(ambient_));
    }
}

const Vec& TanFamily::component(const MultiIndex& index) const {
    check_index(index);
    return components_[index.mask()];
}

void TanFamily::set(const MultiIndex& index, Vec value) {
    check_index(index);
    if (value.size() != fiber_dim_) {
        throw ShapeError("component " + index.to_string() + " has length " +
                         std::to_string(value.size()) + ", fiber dimension is " +
                         std::to_string(fiber_dim_));
    }
    if (truncated_ && index.is_full() && !tancx::is_zero(value)) {
        throw InvalidArgument("truncated family has no component at the full index");
    }
    components_[index.mask()] = std::move(value);
}

bool TanFamily::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Vec& v) { return tancx::is_zero(v); });
}

namespace {

void add_into(Vec& target, const Vec& source) {
    for (std::size_t c = 0; c < target.size(); ++c) target[c] += source[c];
}

Vec difference(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c] - b[c];
    return out;
}

void check_well_formed(const CompatFamily& f) {
    if (f.k < 1) throw InvalidArgument("compatible family needs k >= 1");
    if (f.members.size() != static_cast<std::size_t>(f.k)) {
        throw InvalidArgument("family for k = " + std::to_string(f.k) + " needs " +
                              std::to_string(f.k) + " members, got " +
                              std::to_string(f.members.size()));
    }
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        const TanFamily& v = f.members[i];
        if (v.ambient() != f.k - 1 || v.truncated() || v.fiber_dim() != f.fiber_dim()) {
            throw InvalidArgument("member " + std::to_string(i) +
                                  " must be an untruncated family over {1.." +
                                  std::to_string(f.k - 1) + "} with the common fiber dimension");
        }
    }
}

}  // namespace

TanFamily sigma(const TanFamily& w, int i) {
    const int k = w.ambient();
    if (k < 1 || i < 0 || i > k - 1) {
        throw OutOfRange("sigma_" + std::to_string(i) + " needs 0 <= i <= " + std::to_string(k - 1));
    }
    TanFamily out(k - 1, w.fiber_dim());
    for (const MultiIndex& index : all_subsets(k - 1)) {
        Vec& value = out.at_mask(index.mask());
        value = w.at_mask(push(index, i).mask());
        if (index.contains(i)) add_into(value, w.at_mask(push(index, i - 1).mask()));
    }
    return out;
}

TanFamily coface(const TanFamily& x, int j) {
    const int k = x.ambient() + 1;
    if (j < 0 || j > k) {
        throw OutOfRange("coface_" + std::to_string(j) + " needs 0 <= j <= " + std::to_string(k));
    }
    TanFamily out(k, x.fiber_dim());
    for (const MultiIndex& index : all_subsets(k - 1))
        out.at_mask(push(index, j - 1).mask()) = x.at_mask(index.mask());
    return out;
}

CompatCheck check_compatible(const CompatFamily& f) {
    check_well_formed(f);
    for (int i = 0; i <= f.k - 2; ++i) {
        for (int j = i; j <= f.k - 2; ++j) {
            const TanFamily lhs = sigma(f.members[static_cast<std::size_t>(j) + 1], i);
            const TanFamily rhs = sigma(f.members[static_cast<std::size_t>(i)], j);
            for (const MultiIndex& index : all_subsets(f.k - 2)) {
                if (lhs.at_mask(index.mask()) != rhs.at_mask(index.mask()))
                    return {false, CompatViolation{i, j, index}};
            }
        }
    }
    return {true, std::nullopt};
}

TanFamily reconstruct(const CompatFamily& f) {
    if (const CompatCheck check = check_compatible(f); !check.ok) {
        const auto& v = *check.first_violation;
        throw IncompatibleFamily("sigma_" + std::to_string(v.i) + " v_" + std::to_string(v.j + 1) +
                                 " != sigma_" + std::to_string(v.j) + " v_" + std::to_string(v.i) +
                                 " at index " + v.index.to_string());
    }
    const int k = f.k;
    const auto& v = f.members;
    TanFamily w(k, f.fiber_dim(), true);

    // Index cardinalities never mix, so each degree is solved on its own;
    // within a degree the induction runs from the lexicographically last set
    // downwards and only ever reads components that are already fixed.
    for (int degree = 0; degree < k; ++degree) {
        const std::vector<MultiIndex> level = subsets(k, degree);
        for (std::size_t pos = level.size(); pos-- > 0;) {
            const MultiIndex& J = level[pos];
            if (pos + 1 == level.size()) {
                // J = (k-degree+1, .., k) contains neither 0 nor 1.
                w.at_mask(J.mask()) = v[0].at_mask(pull(J, 0)->mask());
                continue;
            }
            int top_gap = k;
            while (J.contains(top_gap)) --top_gap;
            const int j = top_gap - 1;  // j + 1 ∉ J
            const auto pulled = pull(J, j);
            if (!pulled) throw InternalError("pull(" + J.to_string() + ", " + std::to_string(j) + ") collided");
            const Vec& source = v[static_cast<std::size_t>(j)].at_mask(pulled->mask());
            if (!J.contains(j)) {
                w.at_mask(J.mask()) = source;
            } else {
                const auto raised = raise_swap(J, j);
                if (!raised) throw InternalError("raise_swap undefined inside the induction");
                w.at_mask(J.mask()) = difference(source, w.at_mask(raised->mask()));
            }
        }
    }

#ifndef NDEBUG
    for (int i = 0; i < k; ++i) {
        if (sigma(w, i) != v[static_cast<std::size_t>(i)]) {
            throw InternalError("reconstruction violates sigma_" + std::to_string(i) +
                                " w = v_" + std::to_string(i));
        }
    }
#endif
    return w;
}

std::optional<TanFamily> reconstruct_bruteforce(const CompatFamily& f) {
    check_well_formed(f);
    const int k = f.k;
    const std::size_t fd = f.fiber_dim();

    std::vector<std::size_t> slot(std::size_t{1} << k, 0);
    std::vector<MultiIndex> unknown_sets;
    for (const MultiIndex& J : all_subsets(k)) {
        if (J.is_full()) continue;
        slot[J.mask()] = unknown_sets.size() * fd;
        unknown_sets.push_back(J);
    }

    SparseMat system(unknown_sets.size() * fd);
    Vec rhs;
    for (int i = 0; i < k; ++i) {
        for (const MultiIndex& I : all_subsets(k - 1)) {
            const std::size_t a = slot[push(I, i).mask()];
            const std::optional<std::size_t> b =
                I.contains(i) ? std::optional<std::size_t>(slot[push(I, i - 1).mask()]) : std::nullopt;
            for (std::size_t c = 0; c < fd; ++c) {
                std::vector<std::pair<std::uint32_t, Rat>> row;
                row.emplace_back(static_cast<std::uint32_t>(a + c), 1);
                if (b) row.emplace_back(static_cast<std::uint32_t>(*b + c), 1);
                system.add_row(std::move(row));
                rhs.push_back(f.members[static_cast<std::size_t>(i)].at_mask(I.mask())[c]);
            }
        }
    }

    const std::optional<Vec> x = solve_unique(system, rhs);
    if (!x) return std::nullopt;
    TanFamily w(k, fd, true);
    for (const MultiIndex& J : unknown_sets) {
        Vec value(fd);
        for (std::size_t c = 0; c < fd; ++c) value[c] = (*x)[slot[J.mask()] + c];
        w.at_mask(J.mask()) = std::move(value);
    }
    return w;
}

CompatFamily zero_family(int k, std::size_t fiber_dim) {
    CompatFamily f;
    f.k = k;
    for (int i = 0; i < k; ++i) f.members.emplace_back(k - 1, fiber_dim);
    return f;
}

CompatFamily family_from(const TanFamily& w) {
    CompatFamily f;
    f.k = w.ambient();
    for (int i = 0; i < f.k; ++i) f.members.push_back(sigma(w, i));
    return f;
}

// ------------------------------------------------------------ tangent complex

std::vector<Nullspace> tangent_kernels(const SimplicialVS& s) {
    std::vector<Nullspace> kernels;
    kernels.emplace_back();  // degree 0: the zero space
    for (int k = 1; k <= s.max_level(); ++k) {
        const HornSpace horn = horn_space(s, k, 0);
        kernels.push_back(nullspace(horn.projection));
    }
    return kernels;
}

ChainComplex tangent_complex(const SimplicialVS& s) {
    const auto kernels = tangent_kernels(s);
    const auto moore = moore_kernels(s);
    std::vector<std::size_t> dims{0};
    std::vector<Mat> diffs{Mat(0, 0)};
    for (int k = 1; k <= s.max_level(); ++k) {
        const auto& ker = kernels[static_cast<std::size_t>(k)];
        if (ker.basis != moore[static_cast<std::size_t>(k)].basis) {
            throw InternalError("ker p^" + std::to_string(k) + "_0 differs from N_" + std::to_string(k));
        }
        dims.push_back(ker.dim());
        if (k == 1) {
            diffs.emplace_back(0, ker.dim());
        } else {
            diffs.push_back(restricted_face_zero(s, k, ker, kernels[static_cast<std::size_t>(k - 1)]));
        }
    }
    return ChainComplex(std::move(dims), std::move(diffs));
}

// ---------------------------------------------------------------- hom limit

namespace {

struct SparseOps {
    // [level][i] → rows of the matrix
    std::vector<std::vector<std::vector<SparseRow>>> faces;
    std::vector<std::vector<std::vector<SparseRow>>> degens;
};

std::vector<SparseRow> sparse_rows(const Mat& m) { return SparseMat::from_dense(m).row_list(); }

SparseOps sparse_ops(const SimplicialVS& s, int cutoff) {
    SparseOps ops;
    ops.faces.resize(static_cast<std::size_t>(cutoff) + 1);
    ops.degens.resize(static_cast<std::size_t>(cutoff));
    for (int l = 1; l <= cutoff; ++l)
        for (int i = 0; i <= l; ++i) ops.faces[l].push_back(sparse_rows(s.face(l, i)));
    for (int l = 0; l < cutoff; ++l)
        for (int i = 0; i <= l; ++i) ops.degens[l].push_back(sparse_rows(s.degeneracy(l, i)));
    return ops;
}

struct DegreeSystem {
    SparseMat matrix;
    std::size_t unknowns = 0;
};

DegreeSystem assemble(const SimplicialVS& s, const SparseOps& ops, int cutoff, int degree,
                      FaceZeroMode mode) {
    const int m = degree;
    // offsets[k][mask]
    std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(cutoff) + 1);
    std::size_t unknowns = 0;
    for (int k = m; k <= cutoff; ++k) {
        offsets[k].assign(std::size_t{1} << k, 0);
        for (const MultiIndex& I : subsets(k, m)) {
            offsets[k][I.mask()] = unknowns;
            unknowns += s.dim(k);
        }
    }
    SparseMat sys(unknowns);
    auto col = [](std::size_t c) { return static_cast<std::uint32_t>(c); };

    // Degeneracy compatibility: σ_i x_k = s_i x_{k-1}.
    for (int k = m + 1; k <= cutoff; ++k) {
        for (int i = 0; i <= k - 1; ++i) {
            const auto& s_rows = ops.degens[k - 1][i];
            for (const MultiIndex& I : subsets(k - 1, m)) {
                const std::size_t a = offsets[k][push(I, i).mask()];
                const bool two = I.contains(i);
                const std::size_t b = two ? offsets[k][push(I, i - 1).mask()] : 0;
                const std::size_t lower = offsets[k - 1][I.mask()];
                for (std::size_t r = 0; r < s.dim(k); ++r) {
                    std::vector<std::pair<std::uint32_t, Rat>> row;
                    row.emplace_back(col(a + r), 1);
                    if (two) row.emplace_back(col(b + r), 1);
                    for (const auto& [c, v] : s_rows[r]) row.emplace_back(col(lower + c), -v);
                    sys.add_row(std::move(row));
                }
            }
        }
    }

    // Face compatibility: d_i x_k = coface_i x_{k-1}.
    for (int k = m; k <= cutoff; ++k) {
        for (int i = 0; i <= k; ++i) {
            const auto& d_rows = ops.faces[k][i];
            for (const MultiIndex& J : subsets(k, m)) {
                if (i == 0 && (mode == FaceZeroMode::Drop || J.contains(1))) continue;
                std::optional<std::size_t> lower;
                if (i == 0 || !J.contains(i)) {
                    const auto I = pull(J, i - 1);
                    if (!I) throw InternalError("coface preimage of " + J.to_string() + " missing");
                    lower = offsets[k - 1][I->mask()];
                }
                const std::size_t upper = offsets[k][J.mask()];
                for (std::size_t r = 0; r < s.dim(k - 1); ++r) {
                    std::vector<std::pair<std::uint32_t, Rat>> row;
                    for (const auto& [c, v] : d_rows[r]) row.emplace_back(col(upper + c), v);
                    if (lower) row.emplace_back(col(*lower + r), -1);
                    if (row.empty()) continue;
                    sys.add_row(std::move(row));
                }
            }
        }
    }
    return {std::move(sys), unknowns};
}

void check_cutoff(const SimplicialVS& s, int cutoff) {
    if (cutoff < 1 || cutoff > s.max_level()) {
        throw OutOfRange("hom-limit cutoff " + std::to_string(cutoff) + " outside [1, " +
                         std::to_string(s.max_level()) + "]");
    }
}

}  // namespace

std::vector<HomLimitSlot> hom_limit_layout(const SimplicialVS& s, int cutoff, int degree) {
    check_cutoff(s, cutoff);
    std::vector<HomLimitSlot> slots;
    std::size_t offset = 0;
    for (int k = std::max(degree, 1); k <= cutoff; ++k) {
        for (const MultiIndex& I : subsets(k, degree)) {
            slots.push_back({k, I, offset});
            offset += s.dim(k);
        }
    }
    return slots;
}

std::size_t hom_limit_dim(const SimplicialVS& s, int cutoff, int degree, FaceZeroMode mode) {
    check_cutoff(s, cutoff);
    if (degree < 1 || degree > cutoff) throw OutOfRange("hom-limit degree out of range");
    const SparseOps ops = sparse_ops(s, cutoff);
    const DegreeSystem sys = assemble(s, ops, cutoff, degree, mode);
    return sys.unknowns - rank(sys.matrix);
}

std::vector<std::size_t> HomLimitReport::dims() const {
    std::vector<std::size_t> out;
    for (const auto& d : degrees) out.push_back(d.dim);
    return out;
}

HomLimitReport hom_limit(const SimplicialVS& s, int cutoff, const HomLimitOptions& options) {
    check_cutoff(s, cutoff);
    const SparseOps ops = sparse_ops(s, cutoff);
    HomLimitReport report{cutoff, {}, {}, true};
    for (int m = 1; m <= cutoff; ++m) {
        const DegreeSystem sys = assemble(s, ops, cutoff, m, options.face_zero);
        HomLimitDegree d{m, sys.unknowns, sys.matrix.rows(), 0, {}};
        if (options.witnesses) {
            Nullspace ns = nullspace(sys.matrix);
            d.dim = ns.dim();
            d.witnesses = std::move(ns.basis);
        } else {
            d.dim = sys.unknowns - rank(sys.matrix);
        }
        report.degrees.push_back(std::move(d));
    }
    for (int m = 1; m <= cutoff - 1; ++m) {
        const DegreeSystem sys = assemble(s, ops, cutoff - 1, m, options.face_zero);
        report.previous.push_back(sys.unknowns - rank(sys.matrix));
    }
    for (int m = 1; m <= cutoff - 2; ++m)
        if (report.previous[m - 1] != report.degrees[m - 1].dim) report.stable = false;
    return report;
}

}  // namespace tancx
