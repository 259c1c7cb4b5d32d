#include <catch_amalgamated.hpp>

#include "tancx/error.hpp"
#include "tancx/exactla.hpp"
#include "tancx/sampling.hpp"

using namespace tancx;

namespace {

// Textbook elimination with fractions, no pivoting tricks.
std::size_t naive_rank(Mat a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        for (std::size_t t = 0; t < a.cols(); ++t) std::swap(a(r, t), a(p, t));
        for (std::size_t q = r + 1; q < a.rows(); ++q) {
            const Rat f = a(q, c) / a(r, c);
            for (std::size_t t = 0; t < a.cols(); ++t) a(q, t) -= f * a(r, t);
        }
        ++r;
    }
    return r;
}

Mat sparse_random(Rng& rng, std::size_t rows, std::size_t cols, unsigned density_percent) {
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() % 100 < density_percent) m(r, c) = static_cast<long>(rng() % 5) - 2;
    return m;
}

}  // namespace

TEST_CASE("rationals print and parse canonically", "[exactla]") {
    Rat half(6, 4);
    half.canonicalize();
    CHECK(to_string(half) == "3/2");
    CHECK(to_string(Rat(-4)) == "-4");
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(to_string(parse_rat("10/5")) == "2");
    CHECK(parse_rat("0") == 0);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("abc"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
}

TEST_CASE("nullspace of a fixed matrix has the canonical basis", "[exactla]") {
    // x + 2y - z = 0, 2x + 4y + w = 0  → pivots x and z, free y and w
    const Mat a = Mat::from_rows({{1, 2, -1, 0}, {2, 4, 0, 1}}, 4);
    const Nullspace ns = nullspace(a);
    REQUIRE(ns.dim() == 2);
    CHECK(ns.free_columns == std::vector<std::size_t>{1, 3});
    CHECK(ns.basis[0] == Vec{-2, 1, 0, 0});
    CHECK(ns.basis[1] == Vec{Rat(-1, 2), 0, Rat(-1, 2), 1});
    CHECK(rank(a) == 2);
    CHECK(ns.coordinates(Vec{-1, 1, 1, -2}) == Vec{1, -2});
    CHECK(ns.contains(Vec{-1, 1, 1, -2}));
    CHECK_FALSE(ns.contains(Vec{1, 0, 0, 0}));
}

TEST_CASE("dense, sparse and reference elimination agree", "[exactla][property]") {
    Rng rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = rng() % 9, cols = rng() % 9;
        Mat a = sparse_random(rng, rows, cols, 30 + static_cast<unsigned>(rng() % 60));
        if (rows >= 2 && trial % 3 == 0)
            for (std::size_t c = 0; c < cols; ++c) a(1, c) = a(0, c) * Rat(3, 2);
        const SparseMat sp = SparseMat::from_dense(a);
        const Echelon dense = rref_dense(a);
        const Echelon sparse = rref_sparse(sp);
        CHECK(dense.rows == sparse.rows);
        CHECK(dense.pivot_columns == sparse.pivot_columns);
        const std::size_t r = naive_rank(a);
        CHECK(rank(a) == r);
        CHECK(rank(sp) == r);
        const Nullspace ns = nullspace(a);
        CHECK(ns.dim() + r == cols);
        for (const Vec& b : ns.basis) CHECK(is_zero(a * b));
        CHECK(nullspace(sp).basis == ns.basis);
    }
}

TEST_CASE("large sparse systems take the sparse path and match the reference rank", "[exactla]") {
    Rng rng(5);
    const Mat a = sparse_random(rng, 140, 110, 3);
    REQUIRE(a.rows() * a.cols() > kDenseEntryLimit);
    const std::size_t r = naive_rank(a);
    CHECK(rank(SparseMat::from_dense(a)) == r);
    CHECK(rank(a) == r);
    const Nullspace ns = nullspace(a);
    CHECK(ns.dim() == 110 - r);
    for (const Vec& b : ns.basis) CHECK(is_zero(a * b));
}

TEST_CASE("solve_unique distinguishes unique, inconsistent and underdetermined", "[exactla]") {
    const Mat a = Mat::from_rows({{2, 1}, {1, 3}, {1, -2}}, 2);
    const auto x = solve_unique(a, Vec{3, 4, -1});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{1, 1});
    CHECK_FALSE(solve_unique(a, Vec{3, 4, 0}).has_value());
    const Mat under = Mat::from_rows({{1, 1}}, 2);
    CHECK_THROWS_AS(solve_unique(under, Vec{1}), UnderdeterminedSystem);
    CHECK_THROWS_AS(solve_unique(a, Vec{1}), ShapeError);

    SparseMat sp(2);
    sp.add_row({{1, 1}, {0, 1}, {1, 1}});  // x + 2y, duplicates summed
    sp.add_row({{0, 1}});
    const auto y = solve_unique(sp, Vec{5, 1});
    REQUIRE(y.has_value());
    CHECK(*y == Vec{1, 2});
}

TEST_CASE("matrix arithmetic and shapes", "[exactla]") {
    const Mat a = Mat::from_rows({{1, 2}, {3, 4}}, 2);
    const Mat i = Mat::identity(2);
    CHECK(a * i == a);
    CHECK(a + a - a == a);
    CHECK(a.transpose().transpose() == a);
    CHECK((a * Mat(2, 0)).cols() == 0);
    CHECK((Mat(3, 0) * Mat(0, 4)).is_zero());
    CHECK(vstack(a, i).rows() == 4);
    CHECK_THROWS_AS(a * Mat(3, 1), ShapeError);
    CHECK(a.nonzeros() == 4);
    CHECK(Mat::from_columns({{1, 3}, {2, 4}}, 2) == a);
}
