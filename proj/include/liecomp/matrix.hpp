#pragma once

#include "liecomp/number_field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace liecomp {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const NumberField& field, std::size_t n);
Vector unit_vector(const NumberField& field, std::size_t n, std::size_t i);
Vector rational_vector(const NumberField& field, std::span<const Rational> values);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const FieldElement& s, const Vector& v);
Vector operator*(const Rational& s, const Vector& v);
// Adds s * src into dst.
void axpy(Vector& dst, const FieldElement& s, const Vector& src);

std::string to_string(const Vector& v);

// Dense row-major matrix over a number field. Matrices act on column
// vectors: column j holds the image of the j-th basis vector.
class Matrix {
public:
    Matrix(NumberField field, std::size_t rows, std::size_t cols);

    static Matrix identity(const NumberField& field, std::size_t n);
    static Matrix from_rows(const NumberField& field, std::size_t cols, std::span<const Vector> rows);
    static Matrix from_columns(const NumberField& field, std::size_t rows, std::span<const Vector> cols);
    static Matrix from_rationals(const NumberField& field, const std::vector<std::vector<Rational>>& rows);

    const NumberField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    std::vector<Vector> row_vectors() const;
    void set_row(std::size_t i, const Vector& v);
    void swap_rows(std::size_t a, std::size_t b);

    Matrix transpose() const;
    Vector apply(const Vector& v) const;
    // Row block [this; other].
    Matrix stacked(const Matrix& other) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const FieldElement& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    NumberField field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

std::size_t rank(const Matrix& m);
// Exact inverse; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
// One exact solution of m x = rhs, or std::nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

// Restriction of scalars. Over E of degree d, coordinate v_i = sum_t c_t l^t
// becomes the rationals at positions i*d + t: the Q-basis is
// e_1, l e_1, ..., l^(d-1) e_1, e_2, ...
Vector restrict_vector(const Vector& v);
// Inverse of restrict_vector for a vector over Q of length n*d.
Vector extend_vector(const NumberField& field, const Vector& rational);
// The (rows*d) x (cols*d) rational matrix of the same Q-linear map.
Matrix restrict_scalars(const Matrix& m);
// d x d rational matrix of multiplication by a on the power basis.
Matrix multiplication_matrix(const FieldElement& a);

} // namespace liecomp
