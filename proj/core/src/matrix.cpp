#include "takeuchi/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace takeuchi {

Vec zero_vec(const Field& k, std::size_t n) { return Vec(n, k.zero()); }

Vec unit_vec(const Field& k, std::size_t n, std::size_t i) {
    Vec v = zero_vec(k, n);
    v.at(i) = k.one();
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vec& y, const Scalar& a, std::span<const Scalar> x) {
    if (a.is_zero()) return;
    if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec scaled(std::span<const Scalar> x, const Scalar& a) {
    Vec out(x.begin(), x.end());
    for (auto& s : out) s *= a;
    return out;
}

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
    Scalar acc;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) acc += x[i] * y[i];
    return acc;
}

Matrix::Matrix(Field k, std::size_t rows, std::size_t cols)
    : field_(k), rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(Field k, std::size_t n) {
    Matrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, k.one());
    return m;
}

Matrix Matrix::from_rows(Field k, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(k, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t c = 0; c < cols; ++c)
            if (!rows[r][c].is_zero()) m.data_[r].emplace_back(c, k.coerce(rows[r][c]));
    }
    return m;
}

Matrix Matrix::from_columns(Field k, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(k, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("from_columns: ragged input");
        for (std::size_t r = 0; r < rows; ++r)
            if (!cols[c][r].is_zero()) m.data_[r].emplace_back(c, k.coerce(cols[c][r]));
    }
    return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::at");
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return field_.zero();
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Matrix::set");
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    bool present = it != row.end() && it->first == c;
    if (v.is_zero()) {
        if (present) row.erase(it);
    } else if (present) {
        it->second = field_.coerce(v);
    } else {
        row.insert(it, Entry{c, field_.coerce(v)});
    }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.is_zero()) return;
    set(r, c, at(r, c) + v);
}

void Matrix::set_row(std::size_t r, SparseRow row) {
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::erase_if(row, [](const Entry& e) { return e.second.is_zero(); });
    for (auto& e : row) {
        if (e.first >= cols_) throw std::out_of_range("Matrix::set_row");
        e.second = field_.coerce(e.second);
    }
    data_.at(r) = std::move(row);
}

std::size_t Matrix::nonzeros() const noexcept {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

double Matrix::density() const noexcept {
    if (rows_ == 0 || cols_ == 0) return 0.0;
    return static_cast<double>(nonzeros()) / (static_cast<double>(rows_) * static_cast<double>(cols_));
}

Vec Matrix::row_vec(std::size_t r) const {
    Vec v = zero_vec(field_, cols_);
    for (const auto& [c, s] : data_.at(r)) v[c] = s;
    return v;
}

Vec Matrix::column(std::size_t c) const {
    Vec v = zero_vec(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, s] : data_[r]) t.data_[c].emplace_back(r, s);
    return t;
}

Vec Matrix::apply(std::span<const Scalar> x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
    Vec y = zero_vec(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, s] : data_[r])
            if (!x[c].is_zero()) y[r] += s * x[c];
    return y;
}

std::vector<Vec> Matrix::to_dense() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        Vec acc = zero_vec(a.field_, b.cols_);
        bool any = false;
        for (const auto& [k, s] : a.data_[r])
            for (const auto& [c, t] : b.data_[k]) {
                acc[c] += s * t;
                any = true;
            }
        if (!any) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
            if (!acc[c].is_zero()) out.data_[r].emplace_back(c, acc[c]);
    }
    return out;
}

namespace {

Matrix combine(const Matrix& a, const Matrix& b, bool subtract) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("Matrix sum: shape mismatch");
    Matrix out = a;
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (const auto& [c, s] : b.row(r)) out.add_to(r, c, subtract ? -s : s);
    return out;
}

// row <- row - f * pivot, sparse merge
void sparse_eliminate(Matrix::SparseRow& row, const Scalar& f, const Matrix::SparseRow& pivot) {
    Matrix::SparseRow out;
    out.reserve(row.size() + pivot.size());
    auto i = row.begin();
    auto j = pivot.begin();
    while (i != row.end() || j != pivot.end()) {
        if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == row.end() || j->first < i->first) {
            out.emplace_back(j->first, -(f * j->second));
            ++j;
        } else {
            Scalar v = i->second - f * j->second;
            if (!v.is_zero()) out.emplace_back(i->first, v);
            ++i;
            ++j;
        }
    }
    row = std::move(out);
}

const Scalar* sparse_find(const Matrix::SparseRow& row, std::size_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Matrix::Entry& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
}

RrefResult rref_sparse(const Matrix& m) {
    const Field& k = m.field();
    std::vector<Matrix::SparseRow> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    RrefResult res;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!rows[r].empty() && rows[r].front().first == c) {
                piv = r;
                break;
            }
        }
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        Scalar inv = rows[rank].front().second.inverse();
        for (auto& e : rows[rank]) e.second *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            const Scalar* e = sparse_find(rows[r], c);
            if (e) {
                Scalar f = *e;
                sparse_eliminate(rows[r], f, rows[rank]);
            }
        }
        res.pivots.push_back(c);
        ++rank;
    }
    res.rank = rank;
    res.reduced = Matrix(k, m.rows(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r) res.reduced.set_row(r, std::move(rows[r]));
    return res;
}

RrefResult rref_dense(const Matrix& m) {
    const Field& k = m.field();
    auto rows = m.to_dense();
    RrefResult res;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        Scalar inv = rows[rank][c].inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!rows[rank][j].is_zero()) rows[rank][j] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Scalar f = rows[r][c];
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!rows[rank][j].is_zero()) rows[r][j] -= f * rows[rank][j];
        }
        res.pivots.push_back(c);
        ++rank;
    }
    res.rank = rank;
    res.reduced = Matrix::from_rows(k, m.cols(), rows);
    return res;
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, false); }

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix out(a.field_, a.rows_, a.cols_);
    if (s.is_zero()) return out;
    for (std::size_t r = 0; r < a.rows_; ++r) {
        Matrix::SparseRow row = a.data_[r];
        for (auto& e : row) e.second = e.second * s;
        out.data_[r] = std::move(row);
    }
    return out;
}
Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, true); }

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t r = 0; r < a.rows_; ++r) {
        if (a.data_[r].size() != b.data_[r].size()) return false;
        for (std::size_t i = 0; i < a.data_[r].size(); ++i)
            if (a.data_[r][i].first != b.data_[r][i].first || a.data_[r][i].second != b.data_[r][i].second)
                return false;
    }
    return true;
}

RrefResult rref(const Matrix& m) { return m.density() > 0.3 ? rref_dense(m) : rref_sparse(m); }

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
    auto res = rref(m);
    const Field& k = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : res.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(k, m.cols());
        v[f] = k.one();
        for (std::size_t i = 0; i < res.rank; ++i) {
            Scalar e = res.reduced.at(i, f);
            if (!e.is_zero()) v[res.pivots[i]] = -e;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Matrix::SparseRow row = m.row(r);
        if (!rhs[r].is_zero()) row.emplace_back(m.cols(), rhs[r]);
        aug.set_row(r, std::move(row));
    }
    auto res = rref(aug);
    if (!res.pivots.empty() && res.pivots.back() == m.cols()) return std::nullopt;
    Vec x = zero_vec(m.field(), m.cols());
    for (std::size_t i = 0; i < res.rank; ++i) x[res.pivots[i]] = res.reduced.at(i, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        Matrix::SparseRow row = m.row(r);
        row.emplace_back(n + r, m.field().one());
        aug.set_row(r, std::move(row));
    }
    auto res = rref(aug);
    if (res.rank < n || (n > 0 && res.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
        Matrix::SparseRow row;
        for (const auto& [c, s] : res.reduced.row(r))
            if (c >= n) row.emplace_back(c - n, s);
        inv.set_row(r, std::move(row));
    }
    return inv;
}

LinearSolver::LinearSolver(const Matrix& m) : field_(m.field()), rows_(m.rows()), cols_(m.cols()) {
    Matrix aug(field_, rows_, cols_ + rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Matrix::SparseRow row = m.row(r);
        row.emplace_back(cols_ + r, field_.one());
        aug.set_row(r, std::move(row));
    }
    auto res = rref(aug);
    transform_ = Matrix(field_, rows_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Matrix::SparseRow row;
        for (const auto& [c, s] : res.reduced.row(r))
            if (c >= cols_) row.emplace_back(c - cols_, s);
        transform_.set_row(r, std::move(row));
    }
    for (auto p : res.pivots)
        if (p < cols_) pivots_.push_back(p);
}

std::optional<Vec> LinearSolver::solve(std::span<const Scalar> rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("LinearSolver: right-hand side has wrong length");
    Vec y = transform_.apply(rhs);
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (!y[i].is_zero()) return std::nullopt;
    Vec x = zero_vec(field_, cols_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
    return x;
}

bool LinearSolver::in_image(std::span<const Scalar> rhs) const { return solve(rhs).has_value(); }

Vec EchelonBasis::reduce(Vec v) const {
    if (v.size() != n_) throw std::invalid_argument("EchelonBasis: vector has wrong length");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar f = v[pivot_[i]];
        if (!f.is_zero()) axpy(v, -f, rows_[i]);
    }
    return v;
}

bool EchelonBasis::add(const Vec& v) {
    Vec r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == r.end()) return false;
    auto p = static_cast<std::size_t>(it - r.begin());
    Scalar inv = r[p].inverse();
    for (auto& s : r) s = field_.coerce(s * inv);
    rows_.push_back(std::move(r));
    pivot_.push_back(p);
    return true;
}

}  // namespace takeuchi
