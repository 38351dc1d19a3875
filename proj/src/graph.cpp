#include "confspace/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace confspace {

int Graph::add_vertex(const std::string& id) {
    if (vertex_by_id_.count(id)) throw std::invalid_argument("duplicate vertex id: " + id);
    int idx = vertex_count();
    vertices_.push_back({id});
    valence_.push_back(0);
    incident_.emplace_back();
    vertex_order_.push_back(decl_counter_++);
    vertex_by_id_[id] = idx;
    return idx;
}

int Graph::add_edge(const std::string& id, int tail, int head) {
    if (edge_by_id_.count(id)) throw std::invalid_argument("duplicate edge id: " + id);
    if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    int idx = edge_count();
    edges_.push_back({id, tail, head});
    edge_order_.push_back(decl_counter_++);
    edge_by_id_[id] = idx;
    valence_[tail] += 1;
    valence_[head] += 1;
    incident_[tail].push_back(idx);
    if (head != tail) incident_[head].push_back(idx);
    return idx;
}

std::optional<int> Graph::find_vertex(const std::string& id) const {
    auto it = vertex_by_id_.find(id);
    if (it == vertex_by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Graph::find_edge(const std::string& id) const {
    auto it = edge_by_id_.find(id);
    if (it == edge_by_id_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Graph::essential_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_essential(v)) out.push_back(v);
    return out;
}

std::vector<int> Graph::branched_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_branched(v)) out.push_back(v);
    return out;
}

std::optional<int> Graph::distance(int u, int v) const {
    if (u == v) return 0;
    std::vector<int> dist(vertex_count(), -1);
    dist[u] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        for (int e : incident_[w]) {
            int other = edges_[e].tail == w ? edges_[e].head : edges_[e].tail;
            if (dist[other] >= 0) continue;
            dist[other] = dist[w] + 1;
            if (other == v) return dist[other];
            queue.push_back(other);
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    Graph g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "v") {
            if (toks.size() != 2) throw ParseError(lineno, "v takes exactly one id");
            if (g.find_vertex(toks[1])) throw ParseError(lineno, "duplicate vertex id: " + toks[1]);
            g.add_vertex(toks[1]);
        } else if (toks[0] == "e") {
            if (toks.size() != 4) throw ParseError(lineno, "e takes id, tail, head");
            if (g.find_edge(toks[1])) throw ParseError(lineno, "duplicate edge id: " + toks[1]);
            auto tail = g.find_vertex(toks[2]);
            if (!tail) throw ParseError(lineno, "unknown vertex: " + toks[2]);
            auto head = g.find_vertex(toks[3]);
            if (!head) throw ParseError(lineno, "unknown vertex: " + toks[3]);
            g.add_edge(toks[1], *tail, *head);
        } else {
            throw ParseError(lineno, "unknown directive: " + toks[0]);
        }
    }
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    // Reconstruct the interleaved declaration sequence.
    std::vector<GraphCell> decl(g.cell_count());
    for (int v = 0; v < g.vertex_count(); ++v) decl[g.global_order({false, v})] = {false, v};
    for (int e = 0; e < g.edge_count(); ++e) decl[g.global_order({true, e})] = {true, e};
    for (const auto& c : decl) {
        if (c.is_edge) {
            const Edge& e = g.edge(c.index);
            out << "e " << e.id << ' ' << g.vertex(e.tail).id << ' ' << g.vertex(e.head).id
                << '\n';
        } else {
            out << "v " << g.vertex(c.index).id << '\n';
        }
    }
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream ss;
    write_graph(g, ss);
    return ss.str();
}

namespace {

std::string fresh_vertex_id(const Graph& g, std::string base) {
    while (g.find_vertex(base)) base += "_";
    return base;
}

std::string fresh_edge_id(const Graph& g, std::string base) {
    while (g.find_edge(base)) base += "_";
    return base;
}

}  // namespace

std::pair<Graph, SubdivisionReport> subdivide(const Graph& g, int segments) {
    if (segments < 1) throw std::invalid_argument("segments must be >= 1");
    SubdivisionReport report;
    report.segments = segments;
    Graph out;
    for (int v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.vertex(v).id);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        SubdivisionReport::EdgeSplit split;
        split.edge_id = edge.id;
        if (segments == 1) {
            out.add_edge(edge.id, edge.tail, edge.head);
            split.replacement_edges.push_back(edge.id);
            report.splits.push_back(std::move(split));
            continue;
        }
        int prev = edge.tail;
        for (int k = 1; k < segments; ++k) {
            std::string vid = fresh_vertex_id(out, edge.id + ":" + std::to_string(k));
            int mid = out.add_vertex(vid);
            split.interior_vertices.push_back(vid);
            std::string eid = fresh_edge_id(out, edge.id + "." + std::to_string(k));
            out.add_edge(eid, prev, mid);
            split.replacement_edges.push_back(eid);
            prev = mid;
        }
        std::string eid = fresh_edge_id(out, edge.id + "." + std::to_string(segments));
        out.add_edge(eid, prev, edge.head);
        split.replacement_edges.push_back(eid);
        report.splits.push_back(std::move(split));
    }
    return {std::move(out), std::move(report)};
}

std::optional<GirthWitness> girth(const Graph& g) {
    std::optional<GirthWitness> best;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        // Shortest tail-head path avoiding this copy of the edge, then close up.
        std::vector<int> dist(g.vertex_count(), -1);
        std::vector<int> via(g.vertex_count(), -1);
        dist[edge.tail] = 0;
        std::deque<int> queue{edge.tail};
        while (!queue.empty() && dist[edge.head] < 0) {
            int w = queue.front();
            queue.pop_front();
            for (int f : g.incident_edges(w)) {
                if (f == e) continue;
                const Edge& fe = g.edge(f);
                int other = fe.tail == w ? fe.head : fe.tail;
                if (dist[other] >= 0) continue;
                dist[other] = dist[w] + 1;
                via[other] = f;
                queue.push_back(other);
            }
        }
        if (dist[edge.head] < 0) continue;
        int length = dist[edge.head] + 1;
        if (best && best->length <= length) continue;
        GirthWitness w;
        w.length = length;
        int at = edge.head;
        while (at != edge.tail) {
            int f = via[at];
            w.edges.push_back(f);
            at = g.edge(f).tail == at ? g.edge(f).head : g.edge(f).tail;
        }
        std::reverse(w.edges.begin(), w.edges.end());
        w.edges.push_back(e);
        best = std::move(w);
    }
    return best;
}

}  // namespace confspace
