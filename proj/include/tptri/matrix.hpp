#pragma once

#include "tptri/errors.hpp"

#include <span>
#include <vector>

namespace tptri {

// Dense row-major matrix over an exact scalar type (Rational or QPoly).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(long rows, long cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw Error("matrix dimensions must be nonnegative");
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    T& operator()(long i, long j) { return data_[index(i, j)]; }
    const T& operator()(long i, long j) const { return data_[index(i, j)]; }

    // Submatrix picked out by strictly increasing row and column selections.
    Matrix submatrix(std::span<const long> row_ids, std::span<const long> col_ids) const {
        check_selection(row_ids, rows_, "row");
        check_selection(col_ids, cols_, "column");
        Matrix out(static_cast<long>(row_ids.size()), static_cast<long>(col_ids.size()));
        for (std::size_t i = 0; i < row_ids.size(); ++i) {
            for (std::size_t j = 0; j < col_ids.size(); ++j) {
                out(static_cast<long>(i), static_cast<long>(j)) =
                    (*this)(row_ids[i], col_ids[j]);
            }
        }
        return out;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw Error("matrix product dimension mismatch");
        Matrix out(rows_, rhs.cols_);
        for (long i = 0; i < rows_; ++i) {
            for (long k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T()) continue;
                for (long j = 0; j < rhs.cols_; ++j) {
                    out(i, j) += a * rhs(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
        return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
    }

private:
    std::size_t index(long i, long j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw IndexOutOfRangeError("matrix entry (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ") outside " +
                                       std::to_string(rows_) + "x" + std::to_string(cols_));
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }

    static void check_selection(std::span<const long> ids, long limit, const char* what) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] < 0 || ids[i] >= limit)
                throw IndexOutOfRangeError(std::string(what) + " index " +
                                           std::to_string(ids[i]) + " outside [0, " +
                                           std::to_string(limit) + ")");
            if (i > 0 && ids[i - 1] >= ids[i])
                throw IndexOutOfRangeError(std::string(what) +
                                           " selection must be strictly increasing");
        }
    }

    long rows_ = 0;
    long cols_ = 0;
    std::vector<T> data_;
};

}  // namespace tptri
