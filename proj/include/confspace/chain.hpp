// Integer chain complexes and the sparse boundary matrices backing them.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "confspace/cells.hpp"

namespace confspace {

// Column-major sparse integer matrix; each column sorted by row.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> col;

    static SparseMatrix zero(int rows, int cols) {
        SparseMatrix m;
        m.rows = rows;
        m.cols = cols;
        m.col.resize(cols);
        return m;
    }
    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : col) n += c.size();
        return n;
    }
};

struct ChainComplex {
    // rank[k] = number of k-cells; boundary[k] maps C_k -> C_{k-1}.
    // boundary[0] is the zero map to the trivial group (0 rows).
    std::vector<long long> rank;
    std::vector<SparseMatrix> boundary;

    int top_dim() const { return static_cast<int>(rank.size()) - 1; }
    long long cells(int k) const {
        return (k >= 0 && k <= top_dim()) ? rank[k] : 0;
    }
};

// Throws ChainIntegrityError unless boundary[k-1] * boundary[k] == 0 for all k.
void verify_chain_complex(const ChainComplex& cc);

// Works for any complex exposing top_dim/cell_count/incidences (CubicalComplex,
// SwiatkowskiComplex). Verifies ∂∂ = 0 before returning.
template <class Complex>
ChainComplex build_chain_complex(const Complex& x) {
    ChainComplex cc;
    int top = x.top_dim();
    if (top < 0) return cc;
    cc.rank.resize(top + 1);
    cc.boundary.resize(top + 1);
    for (int k = 0; k <= top; ++k) cc.rank[k] = static_cast<long long>(x.cell_count(k));
    cc.boundary[0] = SparseMatrix::zero(0, static_cast<int>(cc.rank[0]));
    for (int k = 1; k <= top; ++k) {
        auto& m = cc.boundary[k];
        m = SparseMatrix::zero(static_cast<int>(cc.rank[k - 1]), static_cast<int>(cc.rank[k]));
        for (int i = 0; i < m.cols; ++i) {
            Chain combined;
            for (const auto& inc : x.incidences(k, i)) combined[inc.face] += inc.coeff;
            for (const auto& [face, coeff] : combined)
                if (coeff != 0) m.col[i].emplace_back(face, coeff);
        }
    }
    verify_chain_complex(cc);
    return cc;
}

long long euler_characteristic(const ChainComplex& cc);

}  // namespace confspace
