#include "confspace/cells.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace confspace {

int factor_order(const Graph& g, const Factor& f) {
    return g.global_order({f.is_segment, f.index});
}

bool cell_less(const Graph& g, const Cell& a, const Cell& b) {
    auto key = [&](const Cell& c) {
        std::vector<int> k;
        k.reserve(c.factors.size());
        for (const auto& f : c.factors) k.push_back(factor_order(g, f));
        return k;
    };
    return key(a) < key(b);
}

int canonicalize(const Graph& g, Cell& c) {
    const int n = static_cast<int>(c.factors.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return factor_order(g, c.factors[a]) < factor_order(g, c.factors[b]);
    });
    // Parity of the permutation restricted to segment factors: list segment
    // positions in old order, then their ranks in the new order.
    std::vector<int> seg_old;
    for (int i = 0; i < n; ++i)
        if (c.factors[i].is_segment) seg_old.push_back(i);
    std::vector<int> ranks;
    for (int i = 0; i < n; ++i)
        if (c.factors[perm[i]].is_segment) {
            auto it = std::find(seg_old.begin(), seg_old.end(), perm[i]);
            ranks.push_back(static_cast<int>(it - seg_old.begin()));
        }
    int sign = 1;
    for (std::size_t i = 0; i < ranks.size(); ++i)
        for (std::size_t j = i + 1; j < ranks.size(); ++j)
            if (ranks[i] > ranks[j]) sign = -sign;
    std::vector<Factor> sorted;
    sorted.reserve(n);
    for (int i = 0; i < n; ++i) sorted.push_back(c.factors[perm[i]]);
    c.factors = std::move(sorted);
    return sign;
}

std::vector<SignedFace> cell_faces(const Graph& g, const Cell& c) {
    std::vector<SignedFace> out;
    int seg_seen = 0;
    for (std::size_t p = 0; p < c.factors.size(); ++p) {
        const Factor& f = c.factors[p];
        if (!f.is_segment) continue;
        int sign = (seg_seen % 2 == 0) ? 1 : -1;
        ++seg_seen;
        const Edge& e = g.edge(f.index);
        int tail = f.reversed ? e.head : e.tail;
        int head = f.reversed ? e.tail : e.head;
        Cell tail_face = c;
        tail_face.factors[p] = {false, tail, false};
        Cell head_face = c;
        head_face.factors[p] = {false, head, false};
        out.push_back({std::move(head_face), sign});
        out.push_back({std::move(tail_face), -sign});
    }
    return out;
}

std::vector<SignedFace> boundary_faces(const Graph& g, const Cell& c,
                                       CubicalComplex::Convention conv) {
    auto faces = cell_faces(g, c);
    if (conv == CubicalComplex::Convention::sorted_quotient)
        for (auto& sf : faces) sf.coeff *= canonicalize(g, sf.cell);
    return faces;
}

CubicalComplex::CubicalComplex(std::shared_ptr<const Graph> g, int n, Convention conv)
    : graph_(std::move(g)), n_(n), conv_(conv) {
    if (n < 0) throw std::invalid_argument("particle count must be >= 0");
}

std::vector<int> CubicalComplex::key_of(const Cell& c) const {
    std::vector<int> k;
    k.reserve(c.factors.size());
    for (const auto& f : c.factors) k.push_back(factor_order(*graph_, f));
    return k;
}

void CubicalComplex::add_cell(const Cell& c) {
    if (finalized_) throw std::logic_error("add_cell after finalize");
    if (static_cast<int>(c.factors.size()) != n_)
        throw std::invalid_argument("cell has wrong number of factors");
    Cell cell = c;
    for (auto& f : cell.factors) {
        if (f.is_segment) {
            if (f.index < 0 || f.index >= graph_->edge_count())
                throw std::invalid_argument("segment factor out of range");
            if (f.reversed) throw std::invalid_argument("stored cells must be forward");
        } else if (f.index < 0 || f.index >= graph_->vertex_count()) {
            throw std::invalid_argument("point factor out of range");
        }
    }
    if (conv_ == Convention::sorted_quotient) canonicalize(*graph_, cell);
    int d = cell.dim();
    if (d >= static_cast<int>(cells_.size())) cells_.resize(d + 1);
    cells_[d].push_back(std::move(cell));
}

void CubicalComplex::finalize() {
    if (finalized_) return;
    while (!cells_.empty() && cells_.back().empty()) cells_.pop_back();
    index_.resize(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        auto& dim_cells = cells_[k];
        std::sort(dim_cells.begin(), dim_cells.end(),
                  [&](const Cell& a, const Cell& b) { return cell_less(*graph_, a, b); });
        dim_cells.erase(std::unique(dim_cells.begin(), dim_cells.end()), dim_cells.end());
        for (std::size_t i = 0; i < dim_cells.size(); ++i)
            index_[k][key_of(dim_cells[i])] = static_cast<int>(i);
    }
    compute_incidences();
    finalized_ = true;
}

std::size_t CubicalComplex::total_cells() const {
    std::size_t total = 0;
    for (const auto& dim_cells : cells_) total += dim_cells.size();
    return total;
}

std::optional<int> CubicalComplex::find(int k, const Cell& c) const {
    if (k < 0 || k > top_dim()) return std::nullopt;
    auto it = index_[k].find(key_of(c));
    if (it == index_[k].end()) return std::nullopt;
    return it->second;
}

void CubicalComplex::compute_incidences() {
    incidences_.assign(cells_.size(), {});
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        incidences_[k].resize(cells_[k].size());
        if (k == 0) continue;
        for (std::size_t i = 0; i < cells_[k].size(); ++i) {
            auto faces = boundary_faces(*graph_, cells_[k][i], conv_);
            auto& out = incidences_[k][i];
            out.reserve(faces.size());
            for (const auto& sf : faces) {
                auto it = index_[k - 1].find(key_of(sf.cell));
                if (it == index_[k - 1].end())
                    throw ChainIntegrityError("complex not closed under faces at " +
                                              describe_cell(static_cast<int>(k),
                                                            static_cast<int>(i)));
                out.push_back({it->second, sf.coeff});
            }
        }
    }
}

Chain CubicalComplex::boundary(int k, int i) const {
    Chain out;
    for (const auto& inc : incidences(k, i)) out[inc.face] += inc.coeff;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

CubicalComplex CubicalComplex::restrict_to(const std::vector<std::vector<char>>& keep) const {
    CubicalComplex out(graph_, n_, conv_);
    for (std::size_t k = 0; k < cells_.size() && k < keep.size(); ++k)
        for (std::size_t i = 0; i < cells_[k].size(); ++i)
            if (keep[k][i]) out.add_cell(cells_[k][i]);
    out.finalize();
    return out;
}

std::string CubicalComplex::describe_cell(int k, int i) const {
    const Cell& c = cells_.at(k).at(i);
    std::ostringstream ss;
    for (std::size_t p = 0; p < c.factors.size(); ++p) {
        if (p) ss << '|';
        const Factor& f = c.factors[p];
        if (f.is_segment)
            ss << "s:" << graph_->edge(f.index).id;
        else
            ss << "p:" << graph_->vertex(f.index).id;
    }
    return ss.str();
}

CubicalComplex close_under_faces(std::shared_ptr<const Graph> g, int n,
                                 CubicalComplex::Convention conv,
                                 const std::vector<Cell>& seed) {
    CubicalComplex out(g, n, conv);
    std::vector<Cell> queue = seed;
    std::vector<std::map<std::vector<int>, char>> seen;
    auto key = [&](const Cell& c) {
        std::vector<int> k;
        for (const auto& f : c.factors) k.push_back(factor_order(*g, f));
        return k;
    };
    while (!queue.empty()) {
        Cell c = std::move(queue.back());
        queue.pop_back();
        if (static_cast<int>(c.factors.size()) != n)
            throw std::invalid_argument("seed cells must all have the same arity");
        if (conv == CubicalComplex::Convention::sorted_quotient) canonicalize(*g, c);
        int d = c.dim();
        if (d >= static_cast<int>(seen.size())) seen.resize(d + 1);
        auto [it, inserted] = seen[d].try_emplace(key(c), 1);
        if (!inserted) continue;
        for (auto& sf : boundary_faces(*g, c, conv)) queue.push_back(std::move(sf.cell));
        out.add_cell(c);
    }
    out.finalize();
    return out;
}

long long euler_characteristic(const CubicalComplex& x) {
    long long chi = 0;
    for (int k = 0; k <= x.top_dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(x.cell_count(k));
    return chi;
}

}  // namespace confspace
