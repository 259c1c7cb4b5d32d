#include <catch_amalgamated.hpp>

#include <set>

#include "tancx/error.hpp"
#include "tancx/examples.hpp"
#include "tancx/sampling.hpp"
#include "tancx/tangent.hpp"

using namespace tancx;

namespace {

// σ_i straight from the definition, with sets instead of masks: each
// component of the source contributes to every I it pushes to.
TanFamily ref_sigma(const TanFamily& w, int i) {
    const int k = w.ambient();
    TanFamily out(k - 1, w.fiber_dim());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (k - 1)); ++mask) {
        std::set<int> I;
        for (int b = 0; b < k - 1; ++b)
            if (mask >> b & 1) I.insert(b + 1);
        auto shifted = [&](int at) {
            std::uint32_t m = 0;
            for (int e : I) m |= std::uint32_t{1} << ((e > at ? e + 1 : e) - 1);
            return m;
        };
        Vec value = w.at_mask(shifted(i));
        if (I.count(i)) {
            const Vec& extra = w.at_mask(shifted(i - 1));
            for (std::size_t c = 0; c < value.size(); ++c) value[c] += extra[c];
        }
        out.at_mask(mask) = value;
    }
    return out;
}

TanFamily single(int k, std::vector<int> entries, Rat value) {
    TanFamily w(k, 1);
    w.set(MultiIndex(std::move(entries), k), Vec{std::move(value)});
    return w;
}

}  // namespace

TEST_CASE("sigma matches its definition", "[tangent]") {
    Rng rng(1);
    for (int k = 1; k <= 6; ++k) {
        const TanFamily w = random_family(rng, k, 2);
        for (int i = 0; i < k; ++i) CHECK(sigma(w, i) == ref_sigma(w, i));
    }
    CHECK_THROWS_AS(sigma(TanFamily(2, 1), 2), OutOfRange);
    CHECK_THROWS_AS(sigma(TanFamily(0, 1), 0), OutOfRange);
}

TEST_CASE("coface places components at push(I, j-1)", "[tangent]") {
    const TanFamily x = single(2, {1}, 5);
    CHECK(coface(x, 0) == single(3, {2}, 5));
    CHECK(coface(x, 1) == single(3, {2}, 5));
    CHECK(coface(x, 2) == single(3, {1}, 5));
    CHECK(coface(x, 3) == single(3, {1}, 5));
    CHECK_THROWS_AS(coface(x, 4), OutOfRange);
}

TEST_CASE("hand-solved k = 2 family", "[tangent]") {
    CompatFamily f = zero_family(2, 1);
    f.members[0].set(MultiIndex({1}, 1), Vec{1});
    f.members[1].set(MultiIndex({1}, 1), Vec{3});
    const TanFamily w = reconstruct(f);
    CHECK(w.component(MultiIndex({2}, 2)) == Vec{1});
    CHECK(w.component(MultiIndex({1}, 2)) == Vec{2});
    CHECK(w.component(MultiIndex({}, 2)) == Vec{0});
    CHECK(w.truncated());
}

TEST_CASE("incompatible families are rejected by both solvers", "[tangent]") {
    CompatFamily f = zero_family(3, 1);
    f.members[0].set(MultiIndex({}, 2), Vec{1});  // σ_0 v_1 and σ_0 v_0 disagree at ()
    const CompatCheck check = check_compatible(f);
    REQUIRE_FALSE(check.ok);
    CHECK(check.first_violation->i == 0);
    CHECK(check.first_violation->j == 0);
    CHECK(check.first_violation->index.empty());
    CHECK_THROWS_AS(reconstruct(f), IncompatibleFamily);
    CHECK_FALSE(reconstruct_bruteforce(f).has_value());

    CompatFamily short_family = zero_family(3, 1);
    short_family.members.pop_back();
    CHECK_THROWS_AS(check_compatible(short_family), InvalidArgument);
}

TEST_CASE("reconstruction agrees with the brute-force solve", "[tangent][property]") {
    Rng rng(2);
    for (int k = 1; k <= 5; ++k) {
        for (std::size_t fd = 1; fd <= 2; ++fd) {
            const CompatFamilySampler sampler(k, fd);
            CHECK(sampler.dim() == ((std::size_t{1} << k) - 1) * fd);
            for (int trial = 0; trial < 8; ++trial) {
                const TanFamily w0 = random_truncated_family(rng, k, fd);
                const CompatFamily from_w = family_from(w0);
                CHECK(reconstruct(from_w) == w0);
                const CompatFamily sampled = sampler.sample(rng);
                REQUIRE(check_compatible(sampled).ok);
                const TanFamily w = reconstruct(sampled);
                for (int i = 0; i < k; ++i) CHECK(ref_sigma(w, i) == sampled.members[i]);
                CHECK(reconstruct_bruteforce(sampled) == w);
            }
        }
    }
}

TEST_CASE("the zero family reconstructs to zero", "[tangent]") {
    for (int k = 1; k <= 4; ++k) CHECK(reconstruct(zero_family(k, 2)).is_zero());
}

TEST_CASE("degree m of a family has binomial(k, m) components", "[tangent]") {
    for (int k = 0; k <= 6; ++k) {
        std::vector<std::size_t> count(static_cast<std::size_t>(k) + 1, 0);
        for (const MultiIndex& I : all_subsets(k)) ++count[I.size()];
        for (int m = 0; m <= k; ++m) CHECK(count[m] == binomial(k, m));
    }
}

TEST_CASE("truncated families refuse the full index", "[tangent]") {
    TanFamily w(2, 1, true);
    CHECK_THROWS_AS(w.set(MultiIndex({1, 2}, 2), Vec{1}), InvalidArgument);
    CHECK_NOTHROW(w.set(MultiIndex({1, 2}, 2), Vec{0}));
    CHECK_THROWS_AS(w.set(MultiIndex({1}, 2), Vec{1, 2}), ShapeError);
    CHECK_THROWS_AS(w.component(MultiIndex({1}, 3)), InvalidArgument);
}

TEST_CASE("tangent complex of the presets", "[tangent]") {
    CHECK(tangent_complex(nerve_group_vs(2, 3)).dims() == std::vector<std::size_t>{0, 2, 0, 0});
    const ChainComplex t = tangent_complex(nerve_pair_groupoid(2, 3));
    CHECK(t.dims() == std::vector<std::size_t>{0, 2, 0, 0});
    CHECK(t.diff(1).rows() == 0);
    const Mat boundary = Mat::from_rows({{1}, {0}}, 1);
    const ChainComplex c({0, 2, 1}, {Mat(0, 0), Mat(0, 2), boundary});
    const ChainComplex tc = tangent_complex(dk_realize(c, 3));
    CHECK(tc.dims() == std::vector<std::size_t>{0, 2, 1, 0});
    CHECK(tc.diff(2) == boundary);
}

TEST_CASE("hom_limit on the reference objects", "[tangent]") {
    SECTION("nerve of Q^2") {
        const HomLimitReport r = hom_limit(nerve_group_vs(2, 4), 4);
        CHECK(r.dims() == std::vector<std::size_t>{2, 0, 0, 0});
        CHECK(r.stable);
    }
    SECTION("realization of (0, 1, 1)") {
        const SimplicialVS x = dk_realize(ChainComplex::with_zero_differential({0, 1, 1}), 5);
        const HomLimitReport r = hom_limit(x, 5);
        CHECK(r.dims() == std::vector<std::size_t>{1, 1, 0, 0, 0});
        CHECK(r.previous == std::vector<std::size_t>{1, 1, 0, 0});
        CHECK(r.stable);
    }
    SECTION("zero object") {
        const HomLimitReport r = hom_limit(nerve_group_vs(0, 3), 3);
        CHECK(r.dims() == std::vector<std::size_t>{0, 0, 0});
    }
    SECTION("pair groupoid needs the restricted i = 0 equations") {
        const SimplicialVS x = nerve_pair_groupoid(2, 4);
        CHECK(hom_limit(x, 4).dims() == std::vector<std::size_t>{2, 0, 0, 0});
        CHECK(hom_limit_dim(x, 4, 1, FaceZeroMode::Drop) == 2);
    }
    SECTION("cutoff range") {
        const SimplicialVS x = nerve_group_vs(1, 3);
        CHECK_THROWS_AS(hom_limit(x, 4), OutOfRange);
        CHECK_THROWS_AS(hom_limit(x, 0), OutOfRange);
        CHECK_THROWS_AS(hom_limit_dim(x, 3, 4), OutOfRange);
    }
}

TEST_CASE("hom_limit witnesses solve the assembled system", "[tangent]") {
    const SimplicialVS x = dk_realize(ChainComplex::with_zero_differential({0, 1, 1}), 4);
    const HomLimitReport r = hom_limit(x, 4, {FaceZeroMode::Restricted, true});
    for (const HomLimitDegree& d : r.degrees) {
        CHECK(d.witnesses.size() == d.dim);
        const auto layout = hom_limit_layout(x, 4, d.degree);
        std::size_t unknowns = 0;
        for (const auto& slot : layout) {
            CHECK(slot.offset == unknowns);
            CHECK(slot.index.size() == static_cast<std::size_t>(d.degree));
            unknowns += x.dim(slot.level);
        }
        CHECK(unknowns == d.unknowns);
        for (const Vec& w : d.witnesses) CHECK(w.size() == d.unknowns);
    }
}

TEST_CASE("hom_limit equals Moore dims on random realizations", "[tangent][property]") {
    Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const ChainComplex c = random_complex(rng, 3, 2);
        const SimplicialVS x = dk_realize(c, 5);
        const auto moore = moore_complex(x).dims();
        const auto tangent = tangent_complex(x).dims();
        const HomLimitReport r = hom_limit(x, 5);
        for (int m = 1; m <= 5; ++m) {
            CHECK(r.degrees[m - 1].dim == moore[m]);
            CHECK(tangent[m] == moore[m]);
            CHECK(hom_limit_dim(x, 5, m, FaceZeroMode::Drop) == r.degrees[m - 1].dim);
        }
        CHECK(r.stable);
    }
}
