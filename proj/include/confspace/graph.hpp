// Finite undirected multigraphs with stable declaration order.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace confspace {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct Vertex {
    std::string id;
};

// Undirected, but tail/head order is remembered: it orients the unit interval
// that edge cells are modeled on.
struct Edge {
    std::string id;
    int tail = -1;
    int head = -1;
    bool is_loop() const { return tail == head; }
};

// A cell of the graph itself: either a vertex or an edge, identified by index.
struct GraphCell {
    bool is_edge = false;
    int index = -1;
    friend bool operator==(const GraphCell&, const GraphCell&) = default;
};

class Graph {
public:
    int add_vertex(const std::string& id);
    int add_edge(const std::string& id, int tail, int head);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Vertex& vertex(int i) const { return vertices_.at(i); }
    const Edge& edge(int i) const { return edges_.at(i); }

    std::optional<int> find_vertex(const std::string& id) const;
    std::optional<int> find_edge(const std::string& id) const;

    // Loops contribute 2 to the valence of their vertex.
    int valence(int v) const { return valence_.at(v); }
    bool is_essential(int v) const { return valence(v) != 2; }
    bool is_branched(int v) const { return valence(v) >= 3; }
    std::vector<int> essential_vertices() const;
    std::vector<int> branched_vertices() const;

    // Edges incident to v, in declaration order; loops appear once.
    const std::vector<int>& incident_edges(int v) const { return incident_.at(v); }

    // Position of a cell in the combined declaration order (v and e lines interleaved).
    int global_order(const GraphCell& c) const {
        return c.is_edge ? edge_order_.at(c.index) : vertex_order_.at(c.index);
    }
    int cell_count() const { return static_cast<int>(vertices_.size() + edges_.size()); }

    // Edge-count distance between vertices; nullopt if disconnected.
    std::optional<int> distance(int u, int v) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> valence_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> vertex_order_;
    std::vector<int> edge_order_;
    int decl_counter_ = 0;
    std::unordered_map<std::string, int> vertex_by_id_;
    std::unordered_map<std::string, int> edge_by_id_;
};

Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
std::string graph_to_string(const Graph& g);

struct SubdivisionReport {
    int segments = 1;
    // Per original edge, in declaration order.
    struct EdgeSplit {
        std::string edge_id;
        std::vector<std::string> replacement_edges;
        std::vector<std::string> interior_vertices;
    };
    std::vector<EdgeSplit> splits;
};

// Every edge is replaced by a path of `segments` edges. segments = 1 is the identity.
std::pair<Graph, SubdivisionReport> subdivide(const Graph& g, int segments);

// Shortest embedded cycle length: loop = 1, parallel pair = 2. nullopt for forests.
struct GirthWitness {
    int length = 0;
    std::vector<int> edges;  // edge indices forming the cycle
};
std::optional<GirthWitness> girth(const Graph& g);

}  // namespace confspace
