#include "confspace/swiatkowski.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace confspace {

std::vector<int> SwCell::key() const {
    std::vector<int> k;
    for (const auto& seq : edge_labels) {
        k.push_back(static_cast<int>(seq.size()));
        k.insert(k.end(), seq.begin(), seq.end());
    }
    k.insert(k.end(), vertex_label.begin(), vertex_label.end());
    for (const auto& m : movers) {
        k.push_back(m.edge);
        k.push_back(m.at_head ? 1 : 0);
        k.push_back(m.label);
    }
    return k;
}

namespace {

int initial_vertex(const Graph& g, const SwCell::Mover& m) {
    const Edge& e = g.edge(m.edge);
    return m.at_head ? e.head : e.tail;
}

void validate_cell(const Graph& g, int n, const SwCell& c) {
    if (static_cast<int>(c.edge_labels.size()) != g.edge_count() ||
        static_cast<int>(c.vertex_label.size()) != g.vertex_count())
        throw std::invalid_argument("state shape does not match graph");
    std::vector<char> used(n + 1, 0);
    auto take = [&](int label) {
        if (label < 1 || label > n || used[label])
            throw std::invalid_argument("labels must partition 1..n");
        used[label] = 1;
    };
    for (const auto& seq : c.edge_labels)
        for (int l : seq) take(l);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c.vertex_label[v] == 0) continue;
        if (!g.is_branched(v))
            throw std::invalid_argument("label at non-branched vertex " + g.vertex(v).id);
        take(c.vertex_label[v]);
    }
    std::vector<char> reserved(g.vertex_count(), 0);
    for (const auto& m : c.movers) {
        if (m.edge < 0 || m.edge >= g.edge_count())
            throw std::invalid_argument("mover edge out of range");
        int v = initial_vertex(g, m);
        if (!g.is_branched(v))
            throw std::invalid_argument("mover must start at a branched vertex");
        if (c.vertex_label[v] != 0)
            throw std::invalid_argument("mover's vertex must be vacant");
        if (reserved[v])
            throw std::invalid_argument("movers must start at distinct vertices");
        reserved[v] = 1;
        take(m.label);
    }
    for (int l = 1; l <= n; ++l)
        if (!used[l]) throw std::invalid_argument("labels must partition 1..n");
    if (!std::is_sorted(c.movers.begin(), c.movers.end()))
        throw std::invalid_argument("movers must be sorted by (edge, end)");
}

}  // namespace

std::vector<SwSignedFace> sw_faces(const Graph& g, const SwCell& c) {
    std::vector<SwSignedFace> out;
    for (std::size_t i = 0; i < c.movers.size(); ++i) {
        const auto& m = c.movers[i];
        int sign = (i % 2 == 0) ? 1 : -1;
        SwCell base = c;
        base.movers.erase(base.movers.begin() + i);
        SwCell edge_end = base;
        auto& seq = edge_end.edge_labels[m.edge];
        if (m.at_head)
            seq.push_back(m.label);
        else
            seq.insert(seq.begin(), m.label);
        SwCell vertex_end = base;
        vertex_end.vertex_label[initial_vertex(g, m)] = m.label;
        out.push_back({std::move(edge_end), sign});
        out.push_back({std::move(vertex_end), -sign});
    }
    return out;
}

SwiatkowskiComplex::SwiatkowskiComplex(std::shared_ptr<const Graph> g, int n,
                                       std::vector<SwCell> cells)
    : graph_(std::move(g)), n_(n) {
    for (auto& c : cells) {
        validate_cell(*graph_, n_, c);
        int d = c.dim();
        if (d >= static_cast<int>(cells_.size())) cells_.resize(d + 1);
        cells_[d].push_back(std::move(c));
    }
    while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();
    index_.resize(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        auto& dim_cells = cells_[k];
        std::sort(dim_cells.begin(), dim_cells.end(),
                  [](const SwCell& a, const SwCell& b) { return a.key() < b.key(); });
        dim_cells.erase(std::unique(dim_cells.begin(), dim_cells.end()), dim_cells.end());
        for (std::size_t i = 0; i < dim_cells.size(); ++i)
            index_[k][dim_cells[i].key()] = static_cast<int>(i);
    }
    compute_incidences();
}

std::size_t SwiatkowskiComplex::total_cells() const {
    std::size_t total = 0;
    for (const auto& dim_cells : cells_) total += dim_cells.size();
    return total;
}

std::optional<int> SwiatkowskiComplex::find(int k, const SwCell& c) const {
    if (k < 0 || k > top_dim()) return std::nullopt;
    auto it = index_[k].find(c.key());
    if (it == index_[k].end()) return std::nullopt;
    return it->second;
}

void SwiatkowskiComplex::compute_incidences() {
    incidences_.assign(cells_.size(), {});
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        incidences_[k].resize(cells_[k].size());
        if (k == 0) continue;
        for (std::size_t i = 0; i < cells_[k].size(); ++i) {
            auto faces = sw_faces(*graph_, cells_[k][i]);
            auto& out = incidences_[k][i];
            for (const auto& sf : faces) {
                auto it = index_[k - 1].find(sf.cell.key());
                if (it == index_[k - 1].end())
                    throw ChainIntegrityError("state complex not closed under faces at " +
                                              describe_cell(static_cast<int>(k),
                                                            static_cast<int>(i)));
                out.push_back({it->second, sf.coeff});
            }
        }
    }
}

SwiatkowskiComplex SwiatkowskiComplex::restrict_to(
    const std::vector<std::vector<char>>& keep) const {
    std::vector<SwCell> kept;
    for (std::size_t k = 0; k < cells_.size() && k < keep.size(); ++k)
        for (std::size_t i = 0; i < cells_[k].size(); ++i)
            if (keep[k][i]) kept.push_back(cells_[k][i]);
    return SwiatkowskiComplex(graph_, n_, std::move(kept));
}

std::string SwiatkowskiComplex::describe_cell(int k, int i) const {
    const SwCell& c = cells_.at(k).at(i);
    std::ostringstream ss;
    for (int e = 0; e < graph_->edge_count(); ++e) {
        ss << "f(" << graph_->edge(e).id << ")=";
        const auto& seq = c.edge_labels[e];
        for (std::size_t j = 0; j < seq.size(); ++j) ss << (j ? "," : "") << seq[j];
        ss << ' ';
    }
    for (int v = 0; v < graph_->vertex_count(); ++v)
        if (c.vertex_label[v] != 0)
            ss << "f(" << graph_->vertex(v).id << ")=" << c.vertex_label[v] << ' ';
    ss << "S=";
    for (std::size_t j = 0; j < c.movers.size(); ++j) {
        const auto& m = c.movers[j];
        ss << (j ? "," : "") << graph_->edge(m.edge).id << ':'
           << (m.at_head ? 'h' : 't') << ':' << m.label;
    }
    return ss.str();
}

SwiatkowskiComplex build_swiatkowski(std::shared_ptr<const Graph> g, int n) {
    if (n < 0) throw std::invalid_argument("particle count must be >= 0");
    const Graph& gr = *g;
    std::vector<SwCell> cells;
    SwCell state;
    state.edge_labels.resize(gr.edge_count());
    state.vertex_label.assign(gr.vertex_count(), 0);
    std::vector<char> reserved(gr.vertex_count(), 0);

    // Labels placed in increasing order; edge insertions at any position
    // reconstruct every ordering exactly once.
    std::function<void(int)> rec = [&](int label) {
        if (label > n) {
            SwCell done = state;
            std::sort(done.movers.begin(), done.movers.end());
            cells.push_back(std::move(done));
            return;
        }
        for (int v = 0; v < gr.vertex_count(); ++v) {
            if (!gr.is_branched(v) || state.vertex_label[v] != 0 || reserved[v]) continue;
            state.vertex_label[v] = label;
            rec(label + 1);
            state.vertex_label[v] = 0;
        }
        for (int e = 0; e < gr.edge_count(); ++e) {
            auto& seq = state.edge_labels[e];
            for (std::size_t pos = 0; pos <= seq.size(); ++pos) {
                seq.insert(seq.begin() + pos, label);
                rec(label + 1);
                seq.erase(seq.begin() + pos);
            }
        }
        for (int e = 0; e < gr.edge_count(); ++e) {
            const Edge& edge = gr.edge(e);
            for (bool at_head : {false, true}) {
                int v = at_head ? edge.head : edge.tail;
                if (!gr.is_branched(v) || state.vertex_label[v] != 0 || reserved[v])
                    continue;
                reserved[v] = 1;
                state.movers.push_back({e, at_head, label});
                rec(label + 1);
                state.movers.pop_back();
                reserved[v] = 0;
            }
        }
    };
    rec(1);
    return SwiatkowskiComplex(std::move(g), n, std::move(cells));
}

long long euler_characteristic(const SwiatkowskiComplex& x) {
    long long chi = 0;
    for (int k = 0; k <= x.top_dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(x.cell_count(k));
    return chi;
}

}  // namespace confspace
