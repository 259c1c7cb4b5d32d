#include "tancx/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tancx/error.hpp"

namespace tancx {

// ---------------------------------------------------------------- rationals

std::string to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw ParseError("not a rational: \"" + std::string(text) + "\"");
    }
    if (slash != std::string_view::npos && std::all_of(den.begin(), den.end(),
                                                       [](char ch) { return ch == '0'; })) {
        throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    }
    std::string canon(text.front() == '+' ? text.substr(1) : text);
    Rat r(canon, 10);
    r.canonicalize();
    return r;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

// ------------------------------------------------------------------ matrices

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ShapeError("row length differs from column count");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
    Mat m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw ShapeError("column length differs from row count");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vec Mat::column(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

std::size_t Mat::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) != 0; }));
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Mat Mat::select_rows(std::span<const std::size_t> rows) const {
    Mat out(rows.size(), cols_);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(rows[r], c);
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    // Face and degeneracy matrices are mostly zero; walk nonzeros only.
    std::vector<std::vector<std::pair<std::size_t, const Rat*>>> brows(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (sgn(b(k, j)) != 0) brows[k].emplace_back(j, &b(k, j));
    Mat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (const auto& [j, bkj] : brows[k]) out(i, j) += aik * *bkj;
        }
    }
    return out;
}

namespace {

Mat elementwise(const Mat& a, const Mat& b, bool subtract) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
    Mat out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = subtract ? Rat(a(r, c) - b(r, c)) : Rat(a(r, c) + b(r, c));
    return out;
}

}  // namespace

Mat operator+(const Mat& a, const Mat& b) { return elementwise(a, b, false); }
Mat operator-(const Mat& a, const Mat& b) { return elementwise(a, b, true); }

Vec operator*(const Mat& a, const Vec& x) {
    if (a.cols() != x.size()) throw ShapeError("matrix-vector shape mismatch");
    Vec out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (sgn(a(r, c)) != 0 && sgn(x[c]) != 0) out[r] += a(r, c) * x[c];
    return out;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
    Mat out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
    return out;
}

// ------------------------------------------------------------ sparse storage

SparseMat SparseMat::from_dense(const Mat& m) {
    SparseMat s(m.cols());
    s.rows_.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m(r, c)) != 0) row.emplace_back(static_cast<std::uint32_t>(c), m(r, c));
        s.rows_.push_back(std::move(row));
    }
    return s;
}

void SparseMat::add_row(std::vector<std::pair<std::uint32_t, Rat>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseRow row;
    row.reserve(entries.size());
    for (auto& [c, v] : entries) {
        if (c >= cols_) throw ShapeError("sparse entry column out of range");
        if (!row.empty() && row.back().first == c) {
            row.back().second += v;
        } else {
            row.emplace_back(c, std::move(v));
        }
    }
    std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
    rows_.push_back(std::move(row));
}

Mat SparseMat::to_dense() const {
    Mat m(rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r]) m(r, c) = v;
    return m;
}

// --------------------------------------------------------------- elimination

namespace {

const Rat* find_entry(const SparseRow& row, std::uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::uint32_t c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// target += factor * source, dropping cancellations.
void axpy(SparseRow& target, const Rat& factor, const SparseRow& source) {
    SparseRow out;
    out.reserve(target.size() + source.size());
    auto t = target.begin();
    auto s = source.begin();
    while (t != target.end() || s != source.end()) {
        if (s == source.end() || (t != target.end() && t->first < s->first)) {
            out.push_back(std::move(*t));
            ++t;
        } else if (t == target.end() || s->first < t->first) {
            out.emplace_back(s->first, factor * s->second);
            ++s;
        } else {
            Rat v = t->second + factor * s->second;
            if (sgn(v) != 0) out.emplace_back(t->first, std::move(v));
            ++t;
            ++s;
        }
    }
    target = std::move(out);
}

void scale_to_unit_pivot(SparseRow& row) {
    const Rat inv = 1 / row.front().second;
    for (auto& e : row) e.second *= inv;
}

// Rows in echelon order with unit pivots in front; clears every pivot column
// from the rows above it.
void back_substitute(Echelon& e) {
    std::vector<std::ptrdiff_t> row_of_pivot(e.cols, -1);
    for (std::size_t t = 0; t < e.pivot_columns.size(); ++t)
        row_of_pivot[e.pivot_columns[t]] = static_cast<std::ptrdiff_t>(t);
    for (std::size_t t = e.rows.size(); t-- > 0;) {
        // Rows below t are already reduced and contain only free columns
        // besides their pivot, so one sweep over the original row suffices.
        const SparseRow original = e.rows[t];
        for (const auto& [c, v] : original) {
            if (c == e.pivot_columns[t]) continue;
            const auto r = row_of_pivot[c];
            if (r < 0) continue;
            const Rat* cur = find_entry(e.rows[t], c);
            if (!cur) continue;
            const Rat factor = -*cur;
            axpy(e.rows[t], factor, e.rows[static_cast<std::size_t>(r)]);
        }
    }
}

}  // namespace

Echelon rref_dense(const Mat& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    // Clear denominators row by row, then eliminate fraction-free.
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (sgn(a(r, c)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            if (sgn(a(r, c)) == 0) continue;
            m[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
        }
    }

    Echelon e;
    e.cols = cols;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        e.pivot_columns.push_back(c);
        ++r;
    }
    for (std::size_t t = 0; t < e.pivot_columns.size(); ++t) {
        SparseRow row;
        for (std::size_t c = e.pivot_columns[t]; c < cols; ++c)
            if (sgn(m[t][c]) != 0) row.emplace_back(static_cast<std::uint32_t>(c), Rat(m[t][c]));
        scale_to_unit_pivot(row);
        e.rows.push_back(std::move(row));
    }
    back_substitute(e);
    return e;
}

Echelon rref_sparse(const SparseMat& a) {
    std::vector<SparseRow> rows = a.row_list();
    const std::size_t cols = a.cols();
    std::vector<std::vector<std::uint32_t>> col_rows(cols);
    for (std::uint32_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
    std::vector<char> active(rows.size(), 1);

    Echelon e;
    e.cols = cols;
    for (std::uint32_t c = 0; c < cols; ++c) {
        // Active rows never hold entries left of c (those columns are either
        // eliminated pivots or were empty among active rows).
        std::vector<std::uint32_t> holders;
        for (std::uint32_t r : col_rows[c])
            if (active[r] && !rows[r].empty() && rows[r].front().first == c) holders.push_back(r);
        std::sort(holders.begin(), holders.end());
        holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
        col_rows[c].clear();
        col_rows[c].shrink_to_fit();
        if (holders.empty()) continue;
        const auto pivot = *std::min_element(
            holders.begin(), holders.end(), [&](std::uint32_t x, std::uint32_t y) {
                return rows[x].size() != rows[y].size() ? rows[x].size() < rows[y].size() : x < y;
            });
        scale_to_unit_pivot(rows[pivot]);
        active[pivot] = 0;
        for (std::uint32_t r : holders) {
            if (r == pivot) continue;
            const Rat factor = -rows[r].front().second;
            axpy(rows[r], factor, rows[pivot]);
            // Fill-in can only come from the pivot row's columns.
            for (const auto& [cc, v] : rows[pivot])
                if (cc != c) col_rows[cc].push_back(r);
        }
        e.pivot_columns.push_back(c);
        e.rows.push_back(std::move(rows[pivot]));
    }
    back_substitute(e);
    return e;
}

Echelon rref(const Mat& a) {
    if (a.rows() * a.cols() <= kDenseEntryLimit) return rref_dense(a);
    return rref_sparse(SparseMat::from_dense(a));
}

Echelon rref(const SparseMat& a) {
    if (a.rows() * a.cols() <= kDenseEntryLimit) return rref_dense(a.to_dense());
    return rref_sparse(a);
}

Nullspace nullspace_from_echelon(const Echelon& e) {
    Nullspace ns;
    ns.ambient = e.cols;
    ns.pivot_columns = e.pivot_columns;
    std::vector<std::ptrdiff_t> free_pos(e.cols, -1);
    std::vector<char> is_pivot(e.cols, 0);
    for (std::size_t c : e.pivot_columns) is_pivot[c] = 1;
    for (std::size_t c = 0; c < e.cols; ++c) {
        if (is_pivot[c]) continue;
        free_pos[c] = static_cast<std::ptrdiff_t>(ns.free_columns.size());
        ns.free_columns.push_back(c);
    }
    ns.basis.assign(ns.free_columns.size(), Vec(e.cols));
    for (std::size_t f = 0; f < ns.free_columns.size(); ++f) ns.basis[f][ns.free_columns[f]] = 1;
    for (std::size_t t = 0; t < e.rows.size(); ++t) {
        for (const auto& [c, v] : e.rows[t]) {
            if (c == e.pivot_columns[t]) continue;
            ns.basis[static_cast<std::size_t>(free_pos[c])][e.pivot_columns[t]] = -v;
        }
    }
    return ns;
}

Nullspace nullspace(const Mat& a) { return nullspace_from_echelon(rref(a)); }
Nullspace nullspace(const SparseMat& a) { return nullspace_from_echelon(rref(a)); }

Vec Nullspace::coordinates(const Vec& v) const {
    if (v.size() != ambient) throw ShapeError("coordinates: vector length differs from ambient");
    Vec out(free_columns.size());
    for (std::size_t f = 0; f < free_columns.size(); ++f) out[f] = v[free_columns[f]];
    return out;
}

bool Nullspace::contains(const Vec& v) const {
    if (v.size() != ambient) return false;
    Vec rebuilt(ambient);
    const Vec coords = coordinates(v);
    for (std::size_t f = 0; f < basis.size(); ++f) {
        if (sgn(coords[f]) == 0) continue;
        for (std::size_t c = 0; c < ambient; ++c)
            if (sgn(basis[f][c]) != 0) rebuilt[c] += coords[f] * basis[f][c];
    }
    return rebuilt == v;
}

Mat Nullspace::as_matrix() const { return Mat::from_columns(basis, ambient); }

std::size_t rank(const Mat& a) {
    if (a.rows() * a.cols() <= kDenseEntryLimit) return rref_dense(a).pivot_columns.size();
    return rank(SparseMat::from_dense(a));
}

std::size_t rank(const SparseMat& a) {
    std::vector<SparseRow> rows = a.row_list();
    std::vector<std::vector<std::uint32_t>> col_rows(a.cols());
    for (std::uint32_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);

    std::set<std::pair<std::size_t, std::uint32_t>> queue;
    for (std::uint32_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty()) queue.emplace(rows[r].size(), r);
    std::vector<char> done(rows.size(), 0);
    std::vector<std::uint32_t> stamp(rows.size(), 0);
    std::uint32_t round = 0;

    std::size_t r = 0;
    while (!queue.empty()) {
        const auto [len, pivot] = *queue.begin();
        queue.erase(queue.begin());
        done[pivot] = 1;
        const SparseRow& prow = rows[pivot];
        std::uint32_t col = prow.front().first;
        std::size_t best = col_rows[col].size();
        for (const auto& [c, v] : prow) {
            if (col_rows[c].size() < best) {
                best = col_rows[c].size();
                col = c;
            }
        }
        const Rat* pv = find_entry(prow, col);
        const Rat inv = -1 / *pv;
        ++round;
        std::vector<std::uint32_t> holders;
        for (std::uint32_t h : col_rows[col]) {
            if (done[h] || stamp[h] == round) continue;
            stamp[h] = round;
            if (find_entry(rows[h], col)) holders.push_back(h);
        }
        col_rows[col].clear();
        col_rows[col].shrink_to_fit();
        for (std::uint32_t h : holders) {
            queue.erase({rows[h].size(), h});
            const Rat factor = *find_entry(rows[h], col) * inv;
            axpy(rows[h], factor, prow);
            for (const auto& [c, v] : prow)
                if (c != col) col_rows[c].push_back(h);
            if (rows[h].empty()) {
                done[h] = 1;
            } else {
                queue.emplace(rows[h].size(), h);
            }
        }
        rows[pivot].clear();
        rows[pivot].shrink_to_fit();
        ++r;
    }
    return r;
}

namespace {

std::optional<Vec> solve_from_echelon(const Echelon& e, std::size_t unknowns) {
    if (!e.pivot_columns.empty() && e.pivot_columns.back() == unknowns) return std::nullopt;
    if (e.pivot_columns.size() < unknowns) {
        throw UnderdeterminedSystem("system has a " +
                                    std::to_string(unknowns - e.pivot_columns.size()) +
                                    "-dimensional solution space");
    }
    Vec x(unknowns);
    for (std::size_t t = 0; t < e.rows.size(); ++t) {
        if (const Rat* rhs = find_entry(e.rows[t], static_cast<std::uint32_t>(unknowns)))
            x[e.pivot_columns[t]] = *rhs;
    }
    return x;
}

}  // namespace

std::optional<Vec> solve_unique(const Mat& a, const Vec& b) {
    if (b.size() != a.rows()) throw ShapeError("solve_unique: right-hand side length mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    return solve_from_echelon(rref(aug), a.cols());
}

std::optional<Vec> solve_unique(const SparseMat& a, const Vec& b) {
    if (b.size() != a.rows()) throw ShapeError("solve_unique: right-hand side length mismatch");
    SparseMat aug(a.cols() + 1);
    const auto tail = static_cast<std::uint32_t>(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::vector<std::pair<std::uint32_t, Rat>> entries(a.row_list()[r].begin(),
                                                           a.row_list()[r].end());
        if (sgn(b[r]) != 0) entries.emplace_back(tail, b[r]);
        aug.add_row(std::move(entries));
    }
    return solve_from_echelon(rref(aug), a.cols());
}

}  // namespace tancx
