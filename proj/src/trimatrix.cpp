#include "tptri/trimatrix.hpp"

#include "tptri/errors.hpp"

#include <utility>

namespace tptri {

TriMatrix::TriMatrix(std::vector<Rational> diag, std::vector<Rational> super,
                     std::vector<Rational> sub)
    : diag_(std::move(diag)), super_(std::move(super)), sub_(std::move(sub)) {
    if (diag_.empty()) throw Error("tridiagonal matrix needs at least one diagonal entry");
    if (super_.size() + 1 != diag_.size() || sub_.size() + 1 != diag_.size())
        throw Error("tridiagonal bands must each be one entry shorter than the diagonal");
}

const Rational& TriMatrix::diag(long i) const {
    if (i < 0 || i > order())
        throw IndexOutOfRangeError("diagonal index " + std::to_string(i));
    return diag_[static_cast<std::size_t>(i)];
}

const Rational& TriMatrix::super(long k) const {
    if (k < 1 || k > order())
        throw IndexOutOfRangeError("superdiagonal index " + std::to_string(k));
    return super_[static_cast<std::size_t>(k) - 1];
}

const Rational& TriMatrix::sub(long k) const {
    if (k < 1 || k > order())
        throw IndexOutOfRangeError("subdiagonal index " + std::to_string(k));
    return sub_[static_cast<std::size_t>(k) - 1];
}

bool TriMatrix::bands_nonnegative() const {
    for (const Rational& v : diag_) {
        if (v < 0) return false;
    }
    for (const Rational& v : super_) {
        if (v < 0) return false;
    }
    for (const Rational& v : sub_) {
        if (v < 0) return false;
    }
    return true;
}

TriMatrix TriMatrix::block(long lo, long hi) const {
    if (lo < 0 || hi > order() || lo > hi)
        throw IndexOutOfRangeError("tridiagonal block [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
    std::vector<Rational> d(diag_.begin() + lo, diag_.begin() + hi + 1);
    std::vector<Rational> sup, sb;
    for (long k = lo + 1; k <= hi; ++k) {
        sup.push_back(super(k));
        sb.push_back(sub(k));
    }
    return TriMatrix(std::move(d), std::move(sup), std::move(sb));
}

Matrix<Rational> TriMatrix::to_matrix() const {
    Matrix<Rational> m(dim(), dim());
    for (long i = 0; i < dim(); ++i) {
        m(i, i) = diag(i);
        if (i >= 1) {
            m(i - 1, i) = super(i);
            m(i, i - 1) = sub(i);
        }
    }
    return m;
}

}  // namespace tptri
