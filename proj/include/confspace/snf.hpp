// Exact Smith normal form over the integers.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "confspace/chain.hpp"

namespace confspace {

using DenseMatrix = std::vector<std::vector<mpz_class>>;

// U * A * V = D with U, V unimodular; Uinv, Vinv their exact inverses.
// diagonal holds d_1 | d_2 | ... | d_r > 0 followed by zeros, length min(rows, cols).
struct SmithDecomposition {
    int rows = 0;
    int cols = 0;
    int rank = 0;
    std::vector<mpz_class> diagonal;
    DenseMatrix U, Uinv, V, Vinv;

    DenseMatrix D() const;
};

SmithDecomposition smith_normal_form(const DenseMatrix& a);
SmithDecomposition smith_normal_form(const std::vector<std::vector<long long>>& a);

// Diagonal-only variant for large sparse boundary matrices: no transforms kept.
struct SmithDiagonal {
    int rank = 0;
    std::vector<mpz_class> diagonal;  // the rank nonzero invariant factors
};
SmithDiagonal smith_diagonal(const SparseMatrix& a);

DenseMatrix to_dense(const SparseMatrix& a);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
bool is_identity(const DenseMatrix& a);

}  // namespace confspace
