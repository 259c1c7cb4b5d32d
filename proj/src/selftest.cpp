#include "tancx/selftest.hpp"

#include <algorithm>
#include <functional>

#include "tancx/error.hpp"
#include "tancx/examples.hpp"
#include "tancx/multiindex.hpp"
#include "tancx/sampling.hpp"
#include "tancx/simplicial.hpp"
#include "tancx/tangent.hpp"

namespace tancx {

bool SelftestReport::ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failures == 0; });
}

namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& what) {
        ++result_.cases;
        if (ok) return;
        if (result_.failures++ == 0) result_.first_failure = what();
    }

    /// Runs `body`; an escaping exception counts as one failed case.
    void guarded(const std::string& label, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return label + ": " + e.what(); });
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string idx(const MultiIndex& I, int i) { return I.to_string() + " @ " + std::to_string(i); }

SuiteResult multiindex_suite() {
    Suite s("multiindex");
    s.guarded("multiindex", [&] {
        const MultiIndex I({2, 3, 5, 7}, 8);
        s.check(push(I, 3) == MultiIndex({2, 3, 6, 8}, 9), [] { return "push((2,3,5,7),3)"; });
        s.check(push(I, -1) == MultiIndex({3, 4, 6, 8}, 9), [] { return "push((2,3,5,7),-1)"; });
        const MultiIndex P({2, 3, 6, 8}, 9);
        s.check(!pull(P, 2), [] { return "pull((2,3,6,8),2) should be absent"; });
        s.check(pull(P, 3) == I && pull(P, 4) == I, [] { return "pull((2,3,6,8),3|4)"; });

        for (int k = 0; k <= 6; ++k) {
            for (int m = 0; m <= k; ++m) {
                const auto list = subsets(k, m);
                s.check(list.size() == binomial(k, m) && std::is_sorted(list.begin(), list.end()),
                        [&] { return "subsets(" + std::to_string(k) + "," + std::to_string(m) + ")"; });
            }
            for (const MultiIndex& J : all_subsets(k)) {
                for (int i = -1; i <= k; ++i) {
                    s.check(pull(push(J, i), i) == J, [&] { return "pull(push) " + idx(J, i); });
                }
                for (int i = 1; i <= k; ++i) {
                    const auto raised = raise_swap(J, i);
                    const bool defined = J.contains(i) && !J.contains(i + 1) && i + 1 <= k;
                    s.check(raised.has_value() == defined, [&] { return "raise_swap domain " + idx(J, i); });
                    if (!raised) continue;
                    const auto pulled = pull(J, i);
                    s.check(pulled && push(*pulled, i - 1) == *raised,
                            [&] { return "raise_swap = push(pull) " + idx(J, i); });
                    s.check(lower_swap(*raised, i) == J, [&] { return "lower_swap inverse " + idx(J, i); });
                }
            }
        }
    });
    return s.take();
}

SuiteResult exactla_suite(Rng& rng) {
    Suite s("exactla");
    for (int trial = 0; trial < 40; ++trial) {
        s.guarded("matrix trial " + std::to_string(trial), [&] {
            const std::size_t rows = rng() % 8, cols = rng() % 8;
            Mat a = random_mat(rng, rows, cols);
            if (trial % 4 == 0 && rows > 1) {
                // force a dependent row
                for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = a(0, c) * 2;
            }
            const Nullspace ns = nullspace(a);
            s.check(rank(a) + ns.dim() == cols, [&] { return "rank-nullity, trial " + std::to_string(trial); });
            for (const Vec& b : ns.basis)
                s.check(is_zero(a * b), [&] { return "A * kernel vector != 0, trial " + std::to_string(trial); });
            const SparseMat sp = SparseMat::from_dense(a);
            const Echelon dense = rref_dense(a), sparse = rref_sparse(sp);
            s.check(dense.rows == sparse.rows && dense.pivot_columns == sparse.pivot_columns,
                    [&] { return "dense and sparse RREF differ, trial " + std::to_string(trial); });
            s.check(rank(sp) == rank(a), [&] { return "sparse rank differs, trial " + std::to_string(trial); });

            const std::size_t n = cols;
            Mat sq = random_mat(rng, n, n);
            for (std::size_t t = 0; t < n; ++t) sq(t, t) += 17;  // diagonally dominant
            Vec x(n);
            for (auto& v : x) v = random_rat(rng);
            const auto solved = solve_unique(sq, sq * x);
            s.check(solved && *solved == x, [&] { return "solve_unique, trial " + std::to_string(trial); });
        });
    }
    return s.take();
}

SuiteResult simplicial_suite(Rng& rng) {
    Suite s("simplicial");
    for (int trial = 0; trial < 15; ++trial) {
        s.guarded("complex trial " + std::to_string(trial), [&] {
            const ChainComplex c = random_complex(rng, 3, 2);
            const int n = 4;
            const SimplicialVS x = dk_realize(c, n);
            const std::string t = std::to_string(trial);
            s.check(validate(x).ok(), [&] { return "dk_realize violates an identity, trial " + t; });
            s.check(moore_complex(x) == extended(c, n), [&] { return "moore(dk_realize(C)) != C, trial " + t; });
            s.check(kan_report(x, c.length()).verdict, [&] { return "Kan verdict negative, trial " + t; });
            const auto tangent = tangent_complex(x).dims();
            const auto moore = moore_complex(x).dims();
            s.check(std::equal(tangent.begin() + 1, tangent.end(), moore.begin() + 1),
                    [&] { return "ker p_0 differs from Moore, trial " + t; });
        });
    }
    return s.take();
}

SuiteResult tangent_suite(Rng& rng) {
    Suite s("tangent");
    for (int k = 1; k <= 5; ++k) {
        for (std::size_t fd = 1; fd <= 2; ++fd) {
            s.guarded("families k=" + std::to_string(k), [&] {
                const CompatFamilySampler sampler(k, fd);
                const std::string where = "k=" + std::to_string(k) + " fiber=" + std::to_string(fd);
                for (int trial = 0; trial < 6; ++trial) {
                    const TanFamily w0 = random_truncated_family(rng, k, fd);
                    const CompatFamily f = trial % 2 == 0 ? family_from(w0) : sampler.sample(rng);
                    s.check(check_compatible(f).ok, [&] { return "generated family incompatible, " + where; });
                    const TanFamily w = reconstruct(f);
                    if (trial % 2 == 0) s.check(w == w0, [&] { return "roundtrip, " + where; });
                    s.check(family_from(w).members == f.members, [&] { return "sigma(reconstruct), " + where; });
                    s.check(reconstruct_bruteforce(f) == w, [&] { return "brute-force oracle, " + where; });
                }
            });
        }
    }
    for (int n = 1; n <= 5; ++n) {
        s.guarded("cosimplicial n=" + std::to_string(n), [&] {
            const std::string where = "n=" + std::to_string(n);
            const TanFamily y = random_family(rng, n + 1, 1);
            const TanFamily x = random_family(rng, n, 1);
            for (int j = 0; j <= n - 1; ++j)
                for (int i = 0; i <= j; ++i)
                    s.check(sigma(sigma(y, i), j) == sigma(sigma(y, j + 1), i),
                            [&] { return "sigma-sigma " + where; });
            for (int j = 0; j <= n; ++j) {
                for (int i = 0; i <= n + 1; ++i) {
                    const TanFamily lhs = sigma(coface(x, i), j);
                    // coface_0 coincides with coface_1, hence the extra identity case (0, 1)
                    const bool identity = i == j || i == j + 1 || (i == 0 && j == 1);
                    const TanFamily rhs = identity ? x
                                          : i < j  ? coface(sigma(x, j - 1), i)
                                                   : coface(sigma(x, j), i - 1);
                    s.check(lhs == rhs, [&] { return "sigma-coface " + where; });
                }
            }
        });
    }
    for (int trial = 0; trial < 6; ++trial) {
        s.guarded("hom-limit trial " + std::to_string(trial), [&] {
            const ChainComplex c = random_complex(rng, 2, 2);
            const SimplicialVS x = dk_realize(c, 4);
            const HomLimitReport r = hom_limit(x, 4);
            const auto tangent = tangent_complex(x).dims();
            const std::string t = std::to_string(trial);
            const auto dims = r.dims();
            s.check(std::equal(dims.begin(), dims.end(), tangent.begin() + 1),
                    [&] { return "hom-limit dims differ from tangent dims, trial " + t; });
            s.check(r.stable, [&] { return "hom-limit unstable, trial " + t; });
            for (int m = 1; m <= 4; ++m)
                s.check(hom_limit_dim(x, 4, m, FaceZeroMode::Drop) == r.degrees[m - 1].dim,
                        [&] { return "dropping i = 0 changed the solution space, trial " + t; });
        });
    }
    return s.take();
}

SuiteResult examples_suite() {
    Suite s("examples");
    for (const ExampleSpec& spec : catalogue()) {
        s.guarded(spec.name, [&] {
            const SimplicialVS x = build(spec);
            s.check(validate(x).ok(), [&] { return spec.name + " violates an identity"; });
            s.check(tangent_complex(x).dims() == spec.expected_tangent,
                    [&] { return spec.name + " tangent dims differ from the recorded profile"; });
            if (x.max_level() >= 2) {
                const auto shifted = moore_complex(wbar(x)).dims();
                const auto base = moore_complex(x).dims();
                for (int k = 1; k <= x.max_level(); ++k)
                    s.check(shifted[k] == base[k - 1], [&] { return spec.name + " wbar shift"; });
            }
        });
    }
    return s.take();
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
    Rng rng(seed);
    SelftestReport report;
    report.seed = seed;
    report.suites.push_back(multiindex_suite());
    report.suites.push_back(exactla_suite(rng));
    report.suites.push_back(simplicial_suite(rng));
    report.suites.push_back(tangent_suite(rng));
    report.suites.push_back(examples_suite());
    return report;
}

}  // namespace tancx
