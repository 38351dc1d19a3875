// Świątkowski complex: n labeled points, branched vertices hold at most one.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "confspace/cells.hpp"
#include "confspace/graph.hpp"

namespace confspace {

// A state assigns each edge an ordered sequence of labels (tail to head), each
// branched vertex at most one label, and marks some labels as moving into an
// edge end whose vertex is branched. Moving labels vacate their vertex slot;
// their initial vertices are pairwise distinct. Labels run 1..n.
struct SwCell {
    struct Mover {
        int edge = -1;
        bool at_head = false;  // entering via the head end of the edge
        int label = 0;
        friend bool operator==(const Mover&, const Mover&) = default;
        friend auto operator<=>(const Mover&, const Mover&) = default;
    };
    std::vector<std::vector<int>> edge_labels;  // [edge] -> labels, tail to head
    std::vector<int> vertex_label;              // [vertex] -> label or 0
    std::vector<Mover> movers;                  // sorted by (edge, at_head)

    int dim() const { return static_cast<int>(movers.size()); }
    std::vector<int> key() const;  // canonical serialization for ordering
    friend bool operator==(const SwCell&, const SwCell&) = default;
};

class SwiatkowskiComplex {
public:
    SwiatkowskiComplex(std::shared_ptr<const Graph> g, int n,
                       std::vector<SwCell> cells);

    const Graph& ambient() const { return *graph_; }
    std::shared_ptr<const Graph> ambient_ptr() const { return graph_; }
    int particles() const { return n_; }

    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t cell_count(int k) const {
        return (k >= 0 && k <= top_dim()) ? cells_[k].size() : 0;
    }
    std::size_t total_cells() const;
    const SwCell& cell(int k, int i) const { return cells_.at(k).at(i); }
    std::optional<int> find(int k, const SwCell& c) const;

    struct Incidence {
        int face;
        int coeff;
    };
    const std::vector<Incidence>& incidences(int k, int i) const {
        return incidences_.at(k).at(i);
    }

    SwiatkowskiComplex restrict_to(const std::vector<std::vector<char>>& keep) const;

    std::string describe_cell(int k, int i) const;

private:
    std::shared_ptr<const Graph> graph_;
    int n_;
    std::vector<std::vector<SwCell>> cells_;
    std::vector<std::map<std::vector<int>, int>> index_;
    std::vector<std::vector<std::vector<Incidence>>> incidences_;

    void compute_incidences();
};

// Both end cells of a mover: retract to the vertex, or append to the edge.
struct SwSignedFace {
    SwCell cell;
    int coeff;
};
std::vector<SwSignedFace> sw_faces(const Graph& g, const SwCell& c);

// Full enumeration. Requires n >= 0; any graph.
SwiatkowskiComplex build_swiatkowski(std::shared_ptr<const Graph> g, int n);

long long euler_characteristic(const SwiatkowskiComplex& x);

}  // namespace confspace
