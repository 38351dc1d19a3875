// Integral homology of chain complexes, free-face collapses, induced maps.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "confspace/chain.hpp"
#include "confspace/snf.hpp"

namespace confspace {

struct HomologyGroup {
    int degree = 0;
    long long betti = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1, divisibility order
    bool operator==(const HomologyGroup&) const = default;
};

// One group per degree 0..top_dim; empty for the empty complex.
std::vector<HomologyGroup> homology(const ChainComplex& cc);

std::string format_homology_group(const HomologyGroup& h);

// Homology with explicit generators, for induced maps. Dense, exact.
struct HomologyBasis {
    struct Degree {
        long long betti = 0;
        std::vector<mpz_class> torsion;
        int cycle_rank = 0;               // z = dim ker ∂_k
        DenseMatrix kernel_basis;          // n_k x z, columns span ker ∂_k
        DenseMatrix vinv;                  // V^-1 from SNF of ∂_k, n_k x n_k
        int image_rank = 0;                // rank ∂_{k+1}
        SmithDecomposition quotient;       // SNF of ker-coordinates of ∂_{k+1}
        // Free generator j (0 <= j < betti) as a chain in C_k.
        std::vector<mpz_class> free_generator(int j) const;
        // Torsion generator j (order torsion[j]) as a chain in C_k.
        std::vector<mpz_class> torsion_generator(int j) const;
        // Coordinates of a cycle in this presentation: torsion coords
        // (reduced mod torsion[j]) and free coords.
        void class_coordinates(const std::vector<mpz_class>& cycle,
                               std::vector<mpz_class>& tor,
                               std::vector<mpz_class>& free_part) const;
    };
    std::vector<Degree> degrees;
    std::vector<HomologyGroup> groups() const;
};

HomologyBasis homology_basis(const ChainComplex& cc);

// Collapses free faces (cells with exactly one coface, counted with
// multiplicity) in deterministic (dim, index) order until none remain.
// Complex must expose top_dim, cell_count, incidences, restrict_to.
template <class Complex>
Complex collapse_free_faces(const Complex& x) {
    int top = x.top_dim();
    if (top < 1) return x;

    std::vector<std::vector<char>> alive(top + 1);
    std::vector<std::vector<int>> coface_count(top + 1);
    // coface_list[k][i]: indices of (k+1)-cells having cell (k,i) as a face,
    // one entry per incidence.
    std::vector<std::vector<std::vector<int>>> coface_list(top);
    for (int k = 0; k <= top; ++k) {
        alive[k].assign(x.cell_count(k), 1);
        coface_count[k].assign(x.cell_count(k), 0);
    }
    for (int k = 1; k <= top; ++k) {
        coface_list[k - 1].resize(x.cell_count(k - 1));
        for (std::size_t i = 0; i < x.cell_count(k); ++i)
            for (const auto& inc : x.incidences(k, static_cast<int>(i))) {
                ++coface_count[k - 1][inc.face];
                coface_list[k - 1][inc.face].push_back(static_cast<int>(i));
            }
    }

    std::set<std::pair<int, int>> frontier;
    for (int k = 0; k < top; ++k)
        for (std::size_t i = 0; i < x.cell_count(k); ++i)
            if (coface_count[k][i] == 1) frontier.insert({k, static_cast<int>(i)});

    auto drop = [&](int k, int i) {
        alive[k][i] = 0;
        frontier.erase({k, i});
        if (k == 0) return;
        for (const auto& inc : x.incidences(k, i)) {
            if (!alive[k - 1][inc.face]) continue;
            int c = --coface_count[k - 1][inc.face];
            if (c == 1)
                frontier.insert({k - 1, inc.face});
            else
                frontier.erase({k - 1, inc.face});
        }
    };

    while (!frontier.empty()) {
        auto [k, i] = *frontier.begin();
        frontier.erase(frontier.begin());
        if (!alive[k][i] || coface_count[k][i] != 1) continue;
        int ci = -1;
        for (int j : coface_list[k][i])
            if (alive[k + 1][j]) {
                ci = j;
                break;
            }
        if (ci < 0) throw ChainIntegrityError("free face lost its coface");
        drop(k + 1, ci);
        drop(k, i);
    }
    return x.restrict_to(alive);
}

}  // namespace confspace
