#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tancx {

/// Arbitrary-precision rational, always kept in canonical form (gcd 1,
/// positive denominator).
using Rat = mpq_class;
using Vec = std::vector<Rat>;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

/// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws ParseError.
Rat parse_rat(std::string_view text);

/// Dense row-major rational matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Mat from_columns(const std::vector<Vec>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rat> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vec column(std::size_t c) const;

    bool is_zero() const;
    std::size_t nonzeros() const;
    Mat transpose() const;

    /// Rows listed in `rows`, in that order.
    Mat select_rows(std::span<const std::size_t> rows) const;

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& x);

/// [a; b] is rows of `b` appended below `a`.
Mat vstack(const Mat& a, const Mat& b);

/// One sparse row: (column, value) pairs sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, Rat>>;

/// Row-list sparse matrix used to assemble the large constraint systems.
class SparseMat {
public:
    explicit SparseMat(std::size_t cols = 0) : cols_(cols) {}

    static SparseMat from_dense(const Mat& m);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<SparseRow>& row_list() const { return rows_; }

    /// Entries may come unsorted and with repeated columns; they are summed.
    void add_row(std::vector<std::pair<std::uint32_t, Rat>> entries);

    Mat to_dense() const;

private:
    std::size_t cols_;
    std::vector<SparseRow> rows_;
};

/// Kernel basis in the form read off the reduced row echelon form: one basis
/// vector per free column f, with a 1 at f and 0 at the other free columns.
/// The basis depends only on the kernel and the column order.
struct Nullspace {
    std::size_t ambient = 0;
    std::vector<Vec> basis;
    std::vector<std::size_t> free_columns;
    std::vector<std::size_t> pivot_columns;

    std::size_t dim() const { return basis.size(); }

    /// Coordinates of a vector known to lie in the span of `basis`: because
    /// of the echelon form these are its entries at the free columns.
    Vec coordinates(const Vec& v) const;

    /// True when `v` is the combination of `basis` given by its coordinates.
    bool contains(const Vec& v) const;

    /// Basis vectors as the columns of an ambient × dim matrix.
    Mat as_matrix() const;
};

/// Reduced row echelon form with pivot choice "first nonzero in column order".
struct Echelon {
    std::vector<SparseRow> rows;  // one per pivot, pivot entry equal to 1
    std::vector<std::size_t> pivot_columns;
    std::size_t cols = 0;
};

/// Dense inputs up to this many entries go through fraction-free (Bareiss)
/// elimination; larger ones through the sparse row-merge path.
inline constexpr std::size_t kDenseEntryLimit = 10000;

Echelon rref(const Mat& a);
Echelon rref(const SparseMat& a);

/// Fraction-free elimination on the dense path regardless of size.
Echelon rref_dense(const Mat& a);
/// Sparse path regardless of size.
Echelon rref_sparse(const SparseMat& a);

Nullspace nullspace(const Mat& a);
Nullspace nullspace(const SparseMat& a);
Nullspace nullspace_from_echelon(const Echelon& e);

std::size_t rank(const Mat& a);
/// Rank by sparse elimination with a fill-reducing pivot order (shortest row,
/// then least-used column). Only the rank is produced.
std::size_t rank(const SparseMat& a);

/// The unique x with A x = b. Absent when the system is inconsistent; throws
/// UnderdeterminedSystem when it is consistent with a nontrivial kernel.
std::optional<Vec> solve_unique(const Mat& a, const Vec& b);
std::optional<Vec> solve_unique(const SparseMat& a, const Vec& b);

bool is_zero(const Vec& v);

}  // namespace tancx
