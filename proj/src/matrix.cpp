#include "liecomp/matrix.hpp"

#include "liecomp/error.hpp"
#include "liecomp/kernels.hpp"

#include <utility>

namespace liecomp {

Vector zero_vector(const NumberField& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const NumberField& field, std::size_t n, std::size_t i) {
    Vector v = zero_vector(field, n);
    v[i] = field.one();
    return v;
}

Vector rational_vector(const NumberField& field, std::span<const Rational> values) {
    Vector v;
    v.reserve(values.size());
    for (const auto& x : values)
        v.push_back(field.from_rational(x));
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

namespace {
void require_same_length(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw AmbientMismatch();
}
} // namespace

Vector operator+(const Vector& a, const Vector& b) {
    require_same_length(a, b);
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    require_same_length(a, b);
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vector operator-(const Vector& a) {
    Vector r;
    r.reserve(a.size());
    for (const auto& x : a)
        r.push_back(-x);
    return r;
}

Vector operator*(const FieldElement& s, const Vector& v) {
    Vector r = v;
    for (auto& x : r)
        x *= s;
    return r;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector r = v;
    for (auto& x : r)
        x *= s;
    return r;
}

void axpy(Vector& dst, const FieldElement& s, const Vector& src) {
    require_same_length(dst, src);
    if (s.is_zero())
        return;
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (!src[i].is_zero())
            dst[i] += s * src[i];
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

Matrix::Matrix(NumberField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const NumberField& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(const NumberField& field, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        m.set_row(i, rows[i]);
    return m;
}

Matrix Matrix::from_columns(const NumberField& field, std::size_t rows, std::span<const Vector> cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw AmbientMismatch();
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::from_rationals(const NumberField& field, const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = field.from_rational(rows[i][j]);
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v.push_back((*this)(i, j));
    return v;
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
    if (v.size() != cols_)
        throw AmbientMismatch();
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!(v[j].field() == field_))
            throw FieldMismatch();
        (*this)(i, j) = v[j];
    }
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_)
        throw AmbientMismatch();
    Vector out = zero_vector(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero())
                out[i] += (*this)(i, j) * v[j];
    return out;
}

Matrix Matrix::stacked(const Matrix& other) const {
    if (other.cols_ != cols_)
        throw AmbientMismatch();
    if (!(other.field_ == field_))
        throw FieldMismatch();
    Matrix m(field_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + static_cast<long>(data_.size()));
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw AmbientMismatch();
    if (!(a.field_ == b.field_))
        throw FieldMismatch();
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const FieldElement& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += x * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw AmbientMismatch();
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] += b.data_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw AmbientMismatch();
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] -= b.data_[i];
    return c;
}

Matrix operator*(const FieldElement& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_)
        x *= s;
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw AmbientMismatch();
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = m.field().one();
    }
    const auto ech = rref(std::move(aug));
    if (ech.rank() < n || ech.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = ech.matrix(i, n + j);
    return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows())
        throw AmbientMismatch();
    const std::size_t cols = m.cols();
    Matrix aug(m.field(), m.rows(), cols + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            aug(i, j) = m(i, j);
        aug(i, cols) = rhs[i];
    }
    const auto ech = rref(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == cols)
        return std::nullopt;
    // Free variables set to zero.
    Vector x = zero_vector(m.field(), cols);
    for (std::size_t r = 0; r < ech.rank(); ++r)
        x[ech.pivots[r]] = ech.matrix(r, cols);
    return x;
}

Vector restrict_vector(const Vector& v) {
    if (v.empty())
        return {};
    const NumberField q = NumberField::rationals();
    const std::size_t d = v.front().field().degree();
    Vector out;
    out.reserve(v.size() * d);
    for (const auto& x : v)
        for (std::size_t t = 0; t < d; ++t)
            out.push_back(q.from_rational(x[t]));
    return out;
}

Vector extend_vector(const NumberField& field, const Vector& rational) {
    const std::size_t d = field.degree();
    if (rational.size() % d != 0)
        throw AmbientMismatch();
    Vector out;
    out.reserve(rational.size() / d);
    for (std::size_t i = 0; i < rational.size(); i += d) {
        std::vector<Rational> c(d);
        for (std::size_t t = 0; t < d; ++t) {
            if (!rational[i + t].is_rational())
                throw FieldMismatch();
            c[t] = rational[i + t][0];
        }
        out.push_back(field.element(std::move(c)));
    }
    return out;
}

Matrix multiplication_matrix(const FieldElement& a) {
    const NumberField& e = a.field();
    const std::size_t d = e.degree();
    const NumberField q = NumberField::rationals();
    Matrix m(q, d, d);
    FieldElement basis = e.one();
    for (std::size_t s = 0; s < d; ++s) {
        const FieldElement img = a * basis;
        for (std::size_t t = 0; t < d; ++t)
            m(t, s) = q.from_rational(img[t]);
        basis *= e.generator();
    }
    return m;
}

Matrix restrict_scalars(const Matrix& m) {
    const std::size_t d = m.field().degree();
    const NumberField q = NumberField::rationals();
    Matrix out(q, m.rows() * d, m.cols() * d);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero())
                continue;
            const Matrix block = multiplication_matrix(m(i, j));
            for (std::size_t t = 0; t < d; ++t)
                for (std::size_t s = 0; s < d; ++s)
                    out(i * d + t, j * d + s) = block(t, s);
        }
    return out;
}

} // namespace liecomp
