#include "confspace/models.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace confspace {

AbramsCheckReport check_abrams(const Graph& g, int n) {
    AbramsCheckReport rep;
    rep.n = n;
    rep.enough_vertices = g.vertex_count() >= n;
    auto essential = g.essential_vertices();
    if (n >= 2) {
        for (std::size_t a = 0; a < essential.size(); ++a)
            for (std::size_t b = a + 1; b < essential.size(); ++b) {
                auto d = g.distance(essential[a], essential[b]);
                if (d && *d < n - 1)
                    rep.close_pairs.push_back({essential[a], essential[b], *d});
            }
    }
    // Shortest cycle through each edge; report each short cycle once.
    std::set<std::vector<int>> seen;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        std::vector<int> dist(g.vertex_count(), -1);
        std::vector<int> via(g.vertex_count(), -1);
        dist[edge.tail] = 0;
        std::vector<int> queue{edge.tail};
        for (std::size_t qi = 0; qi < queue.size() && dist[edge.head] < 0; ++qi) {
            int w = queue[qi];
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
        if (length >= n + 1) continue;
        std::vector<int> cycle{e};
        int at = edge.head;
        while (at != edge.tail) {
            int f = via[at];
            cycle.push_back(f);
            at = g.edge(f).tail == at ? g.edge(f).head : g.edge(f).tail;
        }
        std::sort(cycle.begin(), cycle.end());
        if (!seen.insert(cycle).second) continue;
        rep.short_cycles.push_back({length, cycle});
    }
    rep.passed = rep.close_pairs.empty() && rep.short_cycles.empty() && rep.enough_vertices;
    return rep;
}

std::string AbramsCheckReport::summary(const Graph& g) const {
    std::ostringstream ss;
    ss << "sufficiency check for n=" << n << ": " << (passed ? "passed" : "failed") << '\n';
    if (!enough_vertices)
        ss << "  graph has " << g.vertex_count() << " vertices, fewer than n\n";
    for (const auto& p : close_pairs)
        ss << "  essential vertices " << g.vertex(p.u).id << " and " << g.vertex(p.v).id
           << " are " << p.distance << " apart, need " << n - 1 << '\n';
    for (const auto& c : short_cycles) {
        ss << "  cycle of length " << c.length << " (need " << n + 1 << "):";
        for (int e : c.edges) ss << ' ' << g.edge(e).id;
        ss << '\n';
    }
    return ss.str();
}

std::string model_name(ModelKind m) {
    switch (m) {
        case ModelKind::abrams: return "abrams";
        case ModelKind::abrams_unlabeled: return "abrams-u";
        case ModelKind::swiatkowski: return "swiatkowski";
        case ModelKind::nonk: return "nonk";
    }
    return "?";
}

namespace {

// Vertices touched by the closure of a graph cell.
std::vector<int> closure_vertices(const Graph& g, const GraphCell& c) {
    if (!c.is_edge) return {c.index};
    const Edge& e = g.edge(c.index);
    if (e.is_loop()) return {e.tail};
    return {e.tail, e.head};
}

Factor to_factor(const GraphCell& c) { return {c.is_edge, c.index, false}; }

// Shared enumerator: n-tuples of graph cells where no vertex lies in k or more
// factor closures. k = 2 is exactly pairwise-disjoint closures.
CubicalComplex enumerate_tuples(std::shared_ptr<const Graph> g, int n, int k,
                                CubicalComplex::Convention conv) {
    CubicalComplex out(g, n, conv);
    const Graph& gr = *g;
    int m = gr.vertex_count() + gr.edge_count();
    auto cell_at = [&](int i) -> GraphCell {
        if (i < gr.vertex_count()) return {false, i};
        return {true, i - gr.vertex_count()};
    };
    std::vector<int> count(gr.vertex_count(), 0);
    std::vector<Factor> chosen;
    chosen.reserve(n);
    bool sorted = conv == CubicalComplex::Convention::sorted_quotient;
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == n) {
            out.add_cell(Cell{chosen});
            return;
        }
        for (int i = sorted ? from : 0; i < m; ++i) {
            GraphCell c = cell_at(i);
            auto verts = closure_vertices(gr, c);
            bool ok = true;
            for (int v : verts)
                if (count[v] >= k - 1) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int v : verts) ++count[v];
            chosen.push_back(to_factor(c));
            rec(pos + 1, i + 1);
            chosen.pop_back();
            for (int v : verts) --count[v];
        }
    };
    rec(0, 0);
    out.finalize();
    return out;
}

void require_sufficient(const Graph& g, int n, bool override_check) {
    if (override_check) return;
    auto rep = check_abrams(g, n);
    if (!rep.passed) throw ModelPreconditionError(rep.summary(g));
}

}  // namespace

CubicalComplex build_abrams(std::shared_ptr<const Graph> g, int n, bool override_check) {
    if (n > g->vertex_count()) {
        CubicalComplex out(g, n, CubicalComplex::Convention::labeled);
        out.finalize();
        return out;
    }
    require_sufficient(*g, n, override_check);
    return enumerate_tuples(std::move(g), n, 2, CubicalComplex::Convention::labeled);
}

CubicalComplex build_unlabeled_abrams(std::shared_ptr<const Graph> g, int n,
                                      bool override_check) {
    if (n > g->vertex_count()) {
        CubicalComplex out(g, n, CubicalComplex::Convention::sorted_quotient);
        out.finalize();
        return out;
    }
    require_sufficient(*g, n, override_check);
    return enumerate_tuples(std::move(g), n, 2, CubicalComplex::Convention::sorted_quotient);
}

CubicalComplex build_nonk(std::shared_ptr<const Graph> g, int n, int k) {
    if (k < 2 || k > n) throw std::invalid_argument("need 2 <= k <= n");
    return enumerate_tuples(std::move(g), n, k, CubicalComplex::Convention::labeled);
}

std::pair<Graph, SubdivisionReport> sufficient_subdivision(const Graph& g, int n,
                                                           ModelKind model) {
    int segments = 1;
    switch (model) {
        case ModelKind::abrams:
        case ModelKind::abrams_unlabeled:
            segments = n + 1;
            break;
        case ModelKind::nonk:
            segments = n;
            break;
        case ModelKind::swiatkowski:
            segments = 1;
            break;
    }
    return subdivide(g, std::max(1, segments));
}

}  // namespace confspace
