#pragma once

#include "takeuchi/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace takeuchi {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& k, std::size_t n);
Vec unit_vec(const Field& k, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
/// y += a * x
void axpy(Vec& y, const Scalar& a, std::span<const Scalar> x);
Vec scaled(std::span<const Scalar> x, const Scalar& a);
Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y);

/// Sparse exact matrix. Rows are sorted (column, value) lists holding only
/// nonzero entries.
class Matrix {
public:
    using Entry = std::pair<std::size_t, Scalar>;
    using SparseRow = std::vector<Entry>;

    Matrix() = default;
    Matrix(Field k, std::size_t rows, std::size_t cols);

    static Matrix identity(Field k, std::size_t n);
    static Matrix from_rows(Field k, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_columns(Field k, std::size_t rows, const std::vector<Vec>& cols);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const Field& field() const noexcept { return field_; }

    [[nodiscard]] Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);
    void add_to(std::size_t r, std::size_t c, const Scalar& v);
    [[nodiscard]] const SparseRow& row(std::size_t r) const { return data_[r]; }
    void set_row(std::size_t r, SparseRow row);

    [[nodiscard]] std::size_t nonzeros() const noexcept;
    [[nodiscard]] double density() const noexcept;

    [[nodiscard]] Vec row_vec(std::size_t r) const;
    [[nodiscard]] Vec column(std::size_t c) const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Vec apply(std::span<const Scalar> x) const;
    [[nodiscard]] std::vector<Vec> to_dense() const;
    [[nodiscard]] bool is_zero() const noexcept { return nonzeros() == 0; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseRow> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form. Pivots are chosen at the smallest column, then
/// the smallest remaining row index. Matrices denser than 30% are reduced in
/// dense storage; both paths produce identical output.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space, one vector per free column.
std::vector<Vec> kernel_basis(const Matrix& m);
/// Some x with m x = rhs, or nullopt. Throws std::invalid_argument on size mismatch.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);
/// Throws std::invalid_argument for non-square input.
std::optional<Matrix> inverse(const Matrix& m);

/// Factorizes m once so that many right-hand sides can be solved cheaply.
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& m);
    [[nodiscard]] std::optional<Vec> solve(std::span<const Scalar> rhs) const;
    [[nodiscard]] bool in_image(std::span<const Scalar> rhs) const;
    [[nodiscard]] std::size_t rank() const noexcept { return pivots_.size(); }

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Matrix transform_;  // T with T*m = rref(m)
    std::vector<std::size_t> pivots_;
};

/// Incrementally maintained echelon basis of a subspace of k^n.
class EchelonBasis {
public:
    EchelonBasis(Field k, std::size_t n) : field_(std::move(k)), n_(n) {}

    /// Reduces v against the stored rows; the result is zero iff v is in the span.
    [[nodiscard]] Vec reduce(Vec v) const;
    [[nodiscard]] bool contains(const Vec& v) const { return takeuchi::is_zero(reduce(v)); }
    /// Adds v; returns false when v was already in the span.
    bool add(const Vec& v);
    [[nodiscard]] std::size_t dimension() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t ambient() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Vec>& rows() const noexcept { return rows_; }

private:
    Field field_;
    std::size_t n_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivot_;
};

}  // namespace takeuchi
