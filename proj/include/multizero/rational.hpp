#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "multizero/errors.hpp"

namespace multizero {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive denominator).
using Rat = mpq_class;

/// Sign of a value as -1, 0 or 1.
using Sign = std::int8_t;

Sign sign_of(const Rat& value);
Sign sign_of(long value);

/// Parses `p`, `-p`, `+p` or `p/q`. Throws std::invalid_argument on anything else.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& value);

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw DimensionMismatch("ragged matrix literal");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix result(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            result(i, i) = T(1);
        }
        return result;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            out[i] = (*this)(i, j);
        }
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    /// Column j of the result is column `order[j]` of this matrix.
    Matrix select_columns(std::span<const std::size_t> order) const {
        Matrix out(rows_, order.size());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < order.size(); ++j) {
                out(i, j) = (*this)(i, order[j]);
            }
        }
        return out;
    }

    Matrix select_rows(std::span<const std::size_t> order) const {
        Matrix out(order.size(), cols_);
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(i, j) = (*this)(order[i], j);
            }
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& v : data_) {
            if (v != 0) {
                return false;
            }
        }
        return true;
    }

    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<long>;

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
std::vector<Rat> operator*(const RatMatrix& a, std::span<const Rat> x);

RatMatrix to_rational(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace multizero
