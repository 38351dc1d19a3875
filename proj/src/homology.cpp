#include "confspace/homology.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

#include "confspace/io.hpp"

namespace confspace {

std::vector<HomologyGroup> homology(const ChainComplex& cc) {
    int top = cc.top_dim();
    std::vector<HomologyGroup> out;
    if (top < 0) return out;

    std::vector<SmithDiagonal> snf(top + 2);
    int cap = thread_cap();
    if (cap <= 1 || top < 1) {
        for (int k = 1; k <= top; ++k) snf[k] = smith_diagonal(cc.boundary[k]);
    } else {
        int k = 1;
        while (k <= top) {
            std::vector<std::pair<int, std::future<SmithDiagonal>>> wave;
            for (; k <= top && static_cast<int>(wave.size()) < cap; ++k)
                wave.emplace_back(k, std::async(std::launch::async, [&cc, k] {
                                      return smith_diagonal(cc.boundary[k]);
                                  }));
            for (auto& [deg, fut] : wave) snf[deg] = fut.get();
        }
    }

    out.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        auto& h = out[k];
        h.degree = k;
        long long rank_in = k >= 1 ? snf[k].rank : 0;
        long long rank_out = k + 1 <= top ? snf[k + 1].rank : 0;
        h.betti = cc.rank[k] - rank_in - rank_out;
        if (k + 1 <= top)
            for (const auto& d : snf[k + 1].diagonal)
                if (d > 1) h.torsion.push_back(d);
    }
    return out;
}

std::string format_homology_group(const HomologyGroup& h) {
    std::ostringstream ss;
    ss << 'H' << h.degree << " = ";
    bool wrote = false;
    if (h.betti > 0) {
        ss << "Z^" << h.betti;
        wrote = true;
    }
    for (const auto& d : h.torsion) {
        if (wrote) ss << " + ";
        ss << "Z/" << d.get_str();
        wrote = true;
    }
    if (!wrote) ss << '0';
    return ss.str();
}

namespace {

// ∂_0 has no rows, so a dense matrix cannot carry its column count; build the
// trivial decomposition directly.
SmithDecomposition trivial_decomposition(int cols) {
    SmithDecomposition sa;
    sa.rows = 0;
    sa.cols = cols;
    sa.rank = 0;
    sa.V.assign(cols, std::vector<mpz_class>(cols, 0));
    sa.Vinv.assign(cols, std::vector<mpz_class>(cols, 0));
    for (int i = 0; i < cols; ++i) sa.V[i][i] = sa.Vinv[i][i] = 1;
    return sa;
}

std::vector<mpz_class> matvec(const DenseMatrix& m, const std::vector<mpz_class>& x) {
    std::vector<mpz_class> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != 0) out[i] += m[i][j] * x[j];
    return out;
}

}  // namespace

std::vector<mpz_class> HomologyBasis::Degree::free_generator(int j) const {
    if (j < 0 || j >= betti) throw std::out_of_range("free generator index");
    std::vector<mpz_class> coords(cycle_rank);
    for (int i = 0; i < cycle_rank; ++i) coords[i] = quotient.Uinv[i][image_rank + j];
    return matvec(kernel_basis, coords);
}

std::vector<mpz_class> HomologyBasis::Degree::torsion_generator(int j) const {
    if (j < 0 || j >= static_cast<int>(torsion.size()))
        throw std::out_of_range("torsion generator index");
    int ones = image_rank - static_cast<int>(torsion.size());
    std::vector<mpz_class> coords(cycle_rank);
    for (int i = 0; i < cycle_rank; ++i) coords[i] = quotient.Uinv[i][ones + j];
    return matvec(kernel_basis, coords);
}

void HomologyBasis::Degree::class_coordinates(const std::vector<mpz_class>& cycle,
                                              std::vector<mpz_class>& tor,
                                              std::vector<mpz_class>& free_part) const {
    int n = static_cast<int>(vinv.size());
    if (static_cast<int>(cycle.size()) != n)
        throw std::invalid_argument("cycle has wrong length");
    auto full = matvec(vinv, cycle);
    int a_rank = n - cycle_rank;
    for (int i = 0; i < a_rank; ++i)
        if (full[i] != 0) throw std::invalid_argument("chain is not a cycle");
    std::vector<mpz_class> w(full.begin() + a_rank, full.end());
    auto wp = matvec(quotient.U, w);
    int ones = image_rank - static_cast<int>(torsion.size());
    tor.assign(torsion.size(), 0);
    for (std::size_t j = 0; j < torsion.size(); ++j) {
        mpz_class m = wp[ones + j] % torsion[j];
        if (m < 0) m += torsion[j];
        tor[j] = m;
    }
    free_part.assign(betti, 0);
    for (long long j = 0; j < betti; ++j) free_part[j] = wp[image_rank + j];
}

std::vector<HomologyGroup> HomologyBasis::groups() const {
    std::vector<HomologyGroup> out;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        HomologyGroup h;
        h.degree = static_cast<int>(k);
        h.betti = degrees[k].betti;
        h.torsion = degrees[k].torsion;
        out.push_back(std::move(h));
    }
    return out;
}

HomologyBasis homology_basis(const ChainComplex& cc) {
    HomologyBasis out;
    int top = cc.top_dim();
    if (top < 0) return out;
    out.degrees.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        auto& deg = out.degrees[k];
        int nk = static_cast<int>(cc.rank[k]);
        auto sa = k == 0 ? trivial_decomposition(nk)
                         : smith_normal_form(to_dense(cc.boundary[k]));
        deg.cycle_rank = nk - sa.rank;
        deg.kernel_basis.assign(nk, std::vector<mpz_class>(deg.cycle_rank, 0));
        for (int i = 0; i < nk; ++i)
            for (int j = 0; j < deg.cycle_rank; ++j)
                deg.kernel_basis[i][j] = sa.V[i][sa.rank + j];
        deg.vinv = sa.Vinv;
        // Image of the next boundary in kernel coordinates.
        int ncols = k + 1 <= top ? static_cast<int>(cc.rank[k + 1]) : 0;
        DenseMatrix w(deg.cycle_rank, std::vector<mpz_class>(ncols, 0));
        if (ncols > 0) {
            auto full = matmul(sa.Vinv, to_dense(cc.boundary[k + 1]));
            for (int i = 0; i < deg.cycle_rank; ++i)
                for (int j = 0; j < ncols; ++j) w[i][j] = full[sa.rank + i][j];
        }
        deg.quotient = smith_normal_form(w);
        deg.image_rank = deg.quotient.rank;
        deg.betti = deg.cycle_rank - deg.image_rank;
        for (const auto& d : deg.quotient.diagonal)
            if (d > 1) deg.torsion.push_back(d);
    }
    return out;
}

}  // namespace confspace
