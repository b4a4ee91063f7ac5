#pragma once

#include "tptri/coefficient_spec.hpp"
#include "tptri/matrix.hpp"
#include "tptri/trimatrix.hpp"

#include <vector>

namespace tptri {

// An infinite lower triangle truncated at a finite order, addressed in label
// coordinates: row labels run index_origin..max_label and row n holds entries
// (n, index_origin)..(n, n).  Entries above the diagonal read as zero.
class LowerTriangle {
public:
    LowerTriangle(long index_origin, std::vector<std::vector<Rational>> rows);

    long index_origin() const { return origin_; }
    long dim() const { return static_cast<long>(rows_.size()); }
    long max_label() const { return origin_ + dim() - 1; }

    const std::vector<Rational>& row(long n) const;
    const Rational& at(long n, long k) const;

    Matrix<Rational> to_matrix() const;

    friend bool operator==(const LowerTriangle& a, const LowerTriangle& b) {
        return a.origin_ == b.origin_ && a.rows_ == b.rows_;
    }

private:
    long origin_;
    std::vector<std::vector<Rational>> rows_;
};

// Rows 0..order of the triangle the coefficient spec generates.
LowerTriangle build_recursive(const CoefficientSpec& spec, long order);

// Rows index_origin..order generated by a general recurrence (or its closed
// form, when that is primary), with registered cross-checks verified.
LowerTriangle build_general(const GeneralSpec& spec, long order);

// The tridiagonal coefficient matrix of order n: diagonal s_0..s_n,
// superdiagonal r_1..r_n, subdiagonal t_1..t_n.
TriMatrix coefficient_matrix(const CoefficientSpec& spec, long n);

// Column zero of the triangle: the sequence a_{0,0}, a_{1,0}, ..., a_{order,0}.
std::vector<Rational> catalan_like(const CoefficientSpec& spec, long order);

// Check the defining identity: rows 1..N of the triangle, columns 0..N-1,
// must equal the order-(N-1) triangle times the order-(N-1) coefficient
// matrix.  N >= 1.
bool verify_factorization(const CoefficientSpec& spec, long N);

}  // namespace tptri
