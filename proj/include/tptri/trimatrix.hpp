#pragma once

#include "tptri/matrix.hpp"
#include "tptri/rational.hpp"

#include <vector>

namespace tptri {

// Symmetrically banded view of a tridiagonal matrix of order n (so dimension
// n+1): diagonal y_0..y_n, superdiagonal x_1..x_n, subdiagonal z_1..z_n.
class TriMatrix {
public:
    TriMatrix(std::vector<Rational> diag, std::vector<Rational> super,
              std::vector<Rational> sub);

    long order() const { return static_cast<long>(diag_.size()) - 1; }
    long dim() const { return static_cast<long>(diag_.size()); }

    const Rational& diag(long i) const;   // y_i, 0 <= i <= n
    const Rational& super(long k) const;  // x_k, 1 <= k <= n
    const Rational& sub(long k) const;    // z_k, 1 <= k <= n

    bool bands_nonnegative() const;

    // Contiguous principal block on indices lo..hi (inclusive).
    TriMatrix block(long lo, long hi) const;

    Matrix<Rational> to_matrix() const;

private:
    std::vector<Rational> diag_, super_, sub_;
};

}  // namespace tptri
