// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tancx/examples.hpp"
#include "tancx/multiindex.hpp"
#include "tancx/sampling.hpp"
#include "tancx/simplicial.hpp"
#include "tancx/tangent.hpp"

using namespace tancx;

namespace {

constexpr std::uint64_t kSeed = 424242;

struct Outcome {
    bool ok = true;
    std::size_t checks = 0;
    std::string first_failure;

    void expect(bool condition, const std::function<std::string()>& what) {
        ++checks;
        if (condition || !ok) {
            if (!condition) ok = false;
            return;
        }
        ok = false;
        first_failure = what();
    }
};

bool run(int number, const char* title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.first_failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= budget_seconds;
    const bool pass = out.ok && in_time;
    std::printf("%s criterion %d: %s (%zu checks, %.2f s of %.0f s)", pass ? "PASS" : "FAIL", number, title,
                out.checks, seconds, budget_seconds);
    if (!out.ok) std::printf(" -- %s", out.first_failure.c_str());
    if (!in_time) std::printf(" -- over the time budget");
    std::printf("\n");
    std::fflush(stdout);
    return pass;
}

// σ_i computed from the definition on sets.
TanFamily ref_sigma(const TanFamily& w, int i) {
    const int k = w.ambient();
    TanFamily out(k - 1, w.fiber_dim());
    for (const MultiIndex& I : all_subsets(k - 1)) {
        std::set<int> up, up_before;
        for (int e : I.entries()) {
            up.insert(e > i ? e + 1 : e);
            up_before.insert(e > i - 1 ? e + 1 : e);
        }
        auto mask_of = [](const std::set<int>& s) {
            std::uint32_t m = 0;
            for (int e : s) m |= std::uint32_t{1} << (e - 1);
            return m;
        };
        Vec v = w.at_mask(mask_of(up));
        if (I.contains(i))
            for (std::size_t c = 0; c < v.size(); ++c) v[c] += w.at_mask(mask_of(up_before))[c];
        out.at_mask(I.mask()) = v;
    }
    return out;
}

std::vector<ChainComplex> complex_population(std::size_t count) {
    Rng rng(kSeed);
    std::vector<ChainComplex> out;
    while (out.size() < count) out.push_back(random_complex(rng, 4, 3));
    return out;
}

std::vector<std::size_t> tail(const std::vector<std::size_t>& v) { return {v.begin() + 1, v.end()}; }

std::string tuple(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// Basis of families: one unit vector at one index.
std::vector<TanFamily> unit_families(int k) {
    std::vector<TanFamily> out;
    for (const MultiIndex& I : all_subsets(k)) {
        TanFamily w(k, 1);
        w.set(I, Vec{1});
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

int main() {
    const std::vector<ChainComplex> population = complex_population(60);
    constexpr int kLevel = 6;
    std::vector<SimplicialVS> realized;
    for (const ChainComplex& c : population) realized.push_back(dk_realize(c, kLevel));

    bool all = true;

    all &= run(1, "reconstruct equals the brute-force solve and satisfies every sigma equation", 30, [](Outcome& o) {
        Rng rng(kSeed + 1);
        for (int k = 2; k <= 6; ++k) {
            for (std::size_t fd = 1; fd <= 3; ++fd) {
                const CompatFamilySampler sampler(k, fd);
                for (int trial = 0; trial < 200; ++trial) {
                    const bool via_sigma = trial % 2 == 0;
                    const CompatFamily f =
                        via_sigma ? family_from(random_truncated_family(rng, k, fd)) : sampler.sample(rng);
                    const TanFamily w = reconstruct(f);
                    const auto oracle = reconstruct_bruteforce(f);
                    const std::string where = "k=" + std::to_string(k) + " fiber=" + std::to_string(fd) +
                                              " trial=" + std::to_string(trial);
                    o.expect(oracle.has_value() && *oracle == w, [&] { return "oracle mismatch, " + where; });
                    for (int i = 0; i < k; ++i)
                        o.expect(ref_sigma(w, i) == f.members[i], [&] { return "sigma equation, " + where; });
                }
            }
        }
    });

    all &= run(2, "reconstruct(sigma(w)) = w for random truncated w", 10, [](Outcome& o) {
        Rng rng(kSeed + 2);
        for (int k = 1; k <= 6; ++k) {
            for (int trial = 0; trial < 100; ++trial) {
                const TanFamily w = random_truncated_family(rng, k, 1 + trial % 3);
                o.expect(reconstruct(family_from(w)) == w,
                         [&] { return "k=" + std::to_string(k) + " trial=" + std::to_string(trial); });
            }
        }
    });

    all &= run(3, "hom-limit = tangent = Moore dims on realizations to level 6, stable from cutoff 5", 300,
               [&](Outcome& o) {
                   for (std::size_t n = 0; n < realized.size(); ++n) {
                       const SimplicialVS& x = realized[n];
                       const auto moore = tail(moore_complex(x).dims());
                       const auto tangent = tail(tangent_complex(x).dims());
                       const HomLimitReport r = hom_limit(x, kLevel);
                       const auto hom = r.dims();
                       const std::string where = "complex " + std::to_string(n) + ": hom " + tuple(hom) +
                                                 " tangent " + tuple(tangent) + " moore " + tuple(moore);
                       o.expect(hom == tangent && tangent == moore, [&] { return where; });
                       o.expect(r.stable, [&] { return "unstable, " + where; });
                   }
               });

    all &= run(4, "moore(dk_realize(C)) = C with the same differentials", 60, [&](Outcome& o) {
        for (std::size_t n = 0; n < population.size(); ++n) {
            o.expect(moore_complex(realized[n]) == extended(population[n], kLevel),
                     [&] { return "complex " + std::to_string(n); });
        }
    });

    all &= run(5, "realizations are Kan with unique fillers above their length; generators validate", 60,
               [&](Outcome& o) {
                   for (std::size_t n = 0; n < population.size(); ++n) {
                       const KanReport kan = kan_report(realized[n], population[n].length());
                       for (const HornCheck& h : kan.horns) {
                           o.expect(h.surjective && (h.level <= population[n].length() || h.injective), [&] {
                               return "complex " + std::to_string(n) + " horn p^" + std::to_string(h.level) + "_" +
                                      std::to_string(h.missing);
                           });
                       }
                       o.expect(kan.verdict, [&] { return "verdict, complex " + std::to_string(n); });
                   }
                   std::vector<std::pair<std::string, SimplicialVS>> generated;
                   for (std::size_t d = 0; d <= 3; ++d) {
                       generated.emplace_back("nerve d=" + std::to_string(d), nerve_group_vs(d, 5));
                       generated.emplace_back("pair d=" + std::to_string(d), nerve_pair_groupoid(d, 5));
                       generated.emplace_back("wbar nerve d=" + std::to_string(d), wbar(nerve_group_vs(d, 5)));
                       generated.emplace_back("wbar pair d=" + std::to_string(d), wbar(nerve_pair_groupoid(d, 5)));
                   }
                   for (const ExampleSpec& spec : catalogue()) generated.emplace_back(spec.name, build(spec));
                   for (const auto& [name, x] : generated)
                       o.expect(validate(x).ok(), [&] { return name + " violates an identity"; });
               });

    all &= run(6, "nerve, crossed module, n-tower, pair groupoid and W-bar fixtures", 60, [&](Outcome& o) {
        for (std::size_t d = 0; d <= 4; ++d) {
            o.expect(tangent_complex(nerve_group_vs(d, 1)).dims() == std::vector<std::size_t>{0, d},
                     [&] { return "nerve d=" + std::to_string(d); });
            const ChainComplex pair = moore_complex(nerve_pair_groupoid(d, 1));
            o.expect(pair.dims() == std::vector<std::size_t>{d, d} && rank(pair.diff(1)) == d,
                     [&] { return "pair groupoid d=" + std::to_string(d); });
        }
        o.expect(tangent_complex(build(make_example("crossed-module", std::vector<std::size_t>{2, 1}, 2))).dims() ==
                     std::vector<std::size_t>{0, 2, 1},
                 [] { return "crossed module"; });
        o.expect(tangent_complex(build(make_example("ntower", std::vector<std::size_t>{1, 1, 1}, 3))).dims() ==
                     std::vector<std::size_t>{0, 1, 1, 1},
                 [] { return "n-tower"; });

        std::vector<std::pair<std::string, SimplicialVS>> generated;
        for (std::size_t d = 0; d <= 3; ++d) {
            generated.emplace_back("nerve d=" + std::to_string(d), nerve_group_vs(d, 4));
            generated.emplace_back("pair d=" + std::to_string(d), nerve_pair_groupoid(d, 4));
        }
        for (const ExampleSpec& spec : catalogue()) {
            if (spec.max_level >= 1) generated.emplace_back(spec.name, build(make_example(spec.name, spec.dims,
                                                                                          std::max(spec.max_level, 4))));
        }
        for (std::size_t n = 0; n < realized.size(); ++n)
            generated.emplace_back("complex " + std::to_string(n), realized[n].truncated(4));
        for (const auto& [name, s] : generated) {
            const auto base = moore_complex(s).dims();
            const auto shifted = moore_complex(wbar(s)).dims();
            for (int k = 1; k <= 4; ++k)
                o.expect(shifted[k] == base[k - 1], [&] { return "W-bar shift, " + name; });
            o.expect(shifted[0] == 0, [&] { return "W-bar degree 0, " + name; });
        }
    });

    all &= run(7, "index algebra for ambient <= 7 and cosimplicial identities for k <= 6", 30, [](Outcome& o) {
        const MultiIndex I({2, 3, 5, 7}, 8);
        o.expect(push(I, 3).entries() == std::vector<int>{2, 3, 6, 8}, [] { return "push example 3"; });
        o.expect(push(I, 4).entries() == std::vector<int>{2, 3, 6, 8}, [] { return "push example 4"; });
        o.expect(push(I, -1).entries() == std::vector<int>{3, 4, 6, 8}, [] { return "push example -1"; });
        o.expect(push(I, 10).entries() == I.entries(), [] { return "push example 10"; });
        const MultiIndex P({2, 3, 6, 8}, 9);
        o.expect(!pull(P, 2) && pull(P, 3) == I && pull(P, 4) == I, [] { return "pull examples"; });

        for (int k = 0; k <= 7; ++k) {
            for (const MultiIndex& J : all_subsets(k)) {
                const std::string where = J.to_string() + " in {1.." + std::to_string(k) + "}";
                for (int i = -1; i <= k + 1; ++i) {
                    o.expect(pull(push(J, i), i) == J, [&] { return "pull(push) " + where; });
                    // entries above i jump past i + 1
                    o.expect(!push(J, i).contains(i + 1), [&] { return "push hits i+1 " + where; });
                }
                for (int i = 0; i <= k; ++i) {
                    const auto raised = raise_swap(J, i);
                    const bool defined = i >= 1 && J.contains(i) && !J.contains(i + 1) && i + 1 <= k;
                    o.expect(raised.has_value() == defined, [&] { return "raise_swap domain " + where; });
                    if (raised) {
                        const auto pulled = pull(J, i);
                        o.expect(pulled && push(*pulled, i - 1) == *raised,
                                 [&] { return "raise_swap = push(pull) " + where; });
                        o.expect(lower_swap(*raised, i) == J, [&] { return "lower_swap inverse " + where; });
                    }
                    o.expect(!lower_swap(J, 0).has_value(), [&] { return "lower_swap at 0 " + where; });
                }
            }
        }

        // Linear maps, so checking on every unit family is exhaustive.
        for (int n = 0; n <= 6; ++n) {
            const std::string where = "ambient " + std::to_string(n);
            if (n + 1 <= 6) {
                for (const TanFamily& y : unit_families(n + 1)) {
                    for (int j = 0; j <= n - 1; ++j)
                        for (int i = 0; i <= j; ++i)
                            o.expect(sigma(sigma(y, i), j) == sigma(sigma(y, j + 1), i),
                                     [&] { return "sigma sigma, " + where; });
                }
            }
            if (n >= 2) {
                for (const TanFamily& x : unit_families(n - 2))
                    for (int j = 0; j <= n; ++j)
                        for (int i = 0; i < j; ++i)
                            o.expect(coface(coface(x, i), j) == coface(coface(x, j - 1), i),
                                     [&] { return "coface coface, " + where; });
            }
            if (n + 1 <= 6) {
                for (const TanFamily& x : unit_families(n)) {
                    for (int j = 0; j <= n; ++j) {
                        for (int i = 0; i <= n + 1; ++i) {
                            const TanFamily lhs = sigma(coface(x, i), j);
                            // coface_0 coincides with coface_1, so (0, 1) lands on the identity case
                            const bool identity = i == j || i == j + 1 || (i == 0 && j == 1);
                            const TanFamily rhs = identity ? x
                                                  : i < j  ? coface(sigma(x, j - 1), i)
                                                           : coface(sigma(x, j), i - 1);
                            o.expect(lhs == rhs, [&] {
                                return "sigma_" + std::to_string(j) + " coface_" + std::to_string(i) + ", " + where;
                            });
                        }
                    }
                }
            }
        }
    });

    all &= run(8, "dropping the i = 0 face equations leaves every solution space unchanged", 300, [&](Outcome& o) {
        // The dropped system has fewer equations, so equal dimensions mean equal spaces.
        for (std::size_t n = 0; n < realized.size(); ++n) {
            const HomLimitReport with = hom_limit(realized[n], kLevel);
            const HomLimitReport without = hom_limit(realized[n], kLevel, {FaceZeroMode::Drop, false});
            o.expect(with.dims() == without.dims(), [&] {
                return "complex " + std::to_string(n) + ": " + tuple(with.dims()) + " vs " + tuple(without.dims());
            });
        }
    });

    return all ? 0 : 1;
}
