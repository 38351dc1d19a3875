// Elementary cubes over a graph: products of vertex points and edge segments.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "confspace/graph.hpp"

namespace confspace {

// ∂∂ != 0 or an interior inconsistency. Always a bug, never an input error.
struct ChainIntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ModelPreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One coordinate of a product cell. A Point factor sits at a vertex, a Segment
// factor spans an edge. `reversed` only matters for segments and flips the
// orientation of the unit interval; cells stored in a complex are never reversed.
struct Factor {
    bool is_segment = false;
    std::int32_t index = -1;
    bool reversed = false;
    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Cell {
    std::vector<Factor> factors;
    int dim() const {
        int d = 0;
        for (const auto& f : factors)
            if (f.is_segment) ++d;
        return d;
    }
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Order on factors and cells induced by the graph's declaration order.
int factor_order(const Graph& g, const Factor& f);
bool cell_less(const Graph& g, const Cell& a, const Cell& b);

// Integer chain in a fixed dimension: cell index -> coefficient.
using Chain = std::map<int, long long>;

// Sorts the factors of `c` by global order in place; returns the sign of the
// permutation restricted to Segment factors (+1 or -1).
int canonicalize(const Graph& g, Cell& c);

class CubicalComplex {
public:
    enum class Convention { labeled, sorted_quotient };

    CubicalComplex(std::shared_ptr<const Graph> g, int n, Convention conv);

    // Building: add_cell before finalize; finalize sorts cells, indexes them,
    // computes incidences and verifies the complex is closed under faces.
    void add_cell(const Cell& c);
    void finalize();

    const Graph& ambient() const { return *graph_; }
    std::shared_ptr<const Graph> ambient_ptr() const { return graph_; }
    int particles() const { return n_; }
    Convention convention() const { return conv_; }

    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t cell_count(int k) const {
        return (k >= 0 && k <= top_dim()) ? cells_[k].size() : 0;
    }
    std::size_t total_cells() const;
    const Cell& cell(int k, int i) const { return cells_.at(k).at(i); }
    std::optional<int> find(int k, const Cell& c) const;

    // One entry per face position, so a loop segment contributes two entries
    // for the same face (they cancel in the boundary but both count as cofaces).
    struct Incidence {
        int face;
        int coeff;
    };
    const std::vector<Incidence>& incidences(int k, int i) const {
        return incidences_.at(k).at(i);
    }

    // Signed boundary of the i-th k-cell, entries combined per face.
    Chain boundary(int k, int i) const;

    // New complex keeping exactly the flagged cells (which must be face-closed).
    CubicalComplex restrict_to(const std::vector<std::vector<char>>& keep) const;

    std::string describe_cell(int k, int i) const;

private:
    std::shared_ptr<const Graph> graph_;
    int n_;
    Convention conv_;
    bool finalized_ = false;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::map<std::vector<int>, int>> index_;  // factor-order keys -> index
    std::vector<std::vector<std::vector<Incidence>>> incidences_;

    std::vector<int> key_of(const Cell& c) const;
    void compute_incidences();
};

// Faces of a labeled cell in ambient g: for each segment factor, the tail and
// head faces, with the usual product-complex signs.
struct SignedFace {
    Cell cell;
    int coeff;
};
std::vector<SignedFace> cell_faces(const Graph& g, const Cell& c);

// Boundary of an arbitrary (possibly reversed-factor) cell as signed faces,
// canonicalized when `conv` is sorted_quotient.
std::vector<SignedFace> boundary_faces(const Graph& g, const Cell& c,
                                       CubicalComplex::Convention conv);

// Smallest face-closed complex containing `seed`. All seed cells must use the
// same number of factors.
CubicalComplex close_under_faces(std::shared_ptr<const Graph> g, int n,
                                 CubicalComplex::Convention conv,
                                 const std::vector<Cell>& seed);

long long euler_characteristic(const CubicalComplex& x);

}  // namespace confspace
