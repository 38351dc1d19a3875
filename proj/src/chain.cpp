#include "confspace/chain.hpp"

#include <map>
#include <string>

namespace confspace {

void verify_chain_complex(const ChainComplex& cc) {
    int top = cc.top_dim();
    if (top < 0) return;
    if (static_cast<int>(cc.boundary.size()) != top + 1)
        throw ChainIntegrityError("boundary map count does not match dimensions");
    for (int k = 0; k <= top; ++k) {
        const auto& m = cc.boundary[k];
        long long expect_rows = k == 0 ? 0 : cc.rank[k - 1];
        if (m.rows != expect_rows || m.cols != cc.rank[k])
            throw ChainIntegrityError("boundary matrix shape mismatch in degree " +
                                      std::to_string(k));
        for (const auto& column : m.col)
            for (const auto& [row, coeff] : column)
                if (row < 0 || row >= m.rows || coeff == 0)
                    throw ChainIntegrityError("malformed boundary entry in degree " +
                                              std::to_string(k));
    }
    for (int k = 2; k <= top; ++k) {
        const auto& bk = cc.boundary[k];
        const auto& bk1 = cc.boundary[k - 1];
        for (int i = 0; i < bk.cols; ++i) {
            std::map<int, long long> acc;
            for (const auto& [mid, c1] : bk.col[i])
                for (const auto& [row, c0] : bk1.col[mid]) acc[row] += c1 * c0;
            for (const auto& [row, v] : acc)
                if (v != 0)
                    throw ChainIntegrityError("dd != 0 at degree " + std::to_string(k) +
                                              " column " + std::to_string(i));
        }
    }
}

long long euler_characteristic(const ChainComplex& cc) {
    long long chi = 0;
    for (int k = 0; k <= cc.top_dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * cc.rank[k];
    return chi;
}

}  // namespace confspace
