#pragma once

// Exact scalar types, a small dense matrix, and the error hierarchy shared
// by every k3fm module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3fm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Two objects were combined that live over different lattices, or a vector
/// has the wrong length for its lattice.
class LatticeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical identity or precondition failed. `identity()` names the
/// violated relation, e.g. "H^2=2".
class InvariantViolation : public std::domain_error {
public:
    InvariantViolation(std::string identity, const std::string& detail);
    const std::string& identity() const noexcept { return identity_; }

private:
    std::string identity_;
};

/// Malformed user input (files, flags, expressions).
class InputError : public std::invalid_argument {
public:
    InputError(std::string kind, const std::string& message);
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Canonical "p/q" form with q > 0 and gcd(p, q) = 1; integers print as "p/1".
std::string to_fraction_string(const Rational& q);
Rational parse_rational(const std::string& text);

bool is_integral(const Rational& q);
/// Throws InvariantViolation if q is not an integer.
Integer to_integer(const Rational& q, const char* what);
/// Converts to int64 when representable.
std::optional<long long> to_int64(const Integer& v);

/// Row-major dense matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw LatticeMismatch("matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (v.size() != cols_) throw LatticeMismatch("matrix-vector product: length mismatch");
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Determinant by Gaussian elimination over the rationals.
Rational determinant(RatMatrix m);
/// Inverse by Gauss-Jordan; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace k3fm
