#include "confspace/morphism.hpp"

#include <istream>
#include <map>
#include <sstream>

namespace confspace {

void validate_embedding(const GraphEmbedding& e, const Graph& src, const Graph& dst) {
    if (static_cast<int>(e.vertex_image.size()) != src.vertex_count() ||
        static_cast<int>(e.edge_image.size()) != src.edge_count())
        throw ModelPreconditionError("embedding must map every vertex and edge");
    std::vector<char> vertex_hit(dst.vertex_count(), 0);
    for (int v = 0; v < src.vertex_count(); ++v) {
        int w = e.vertex_image[v];
        if (w < 0 || w >= dst.vertex_count())
            throw ModelPreconditionError("vertex image out of range");
        if (vertex_hit[w])
            throw ModelPreconditionError("embedding not injective on vertices (" +
                                         dst.vertex(w).id + " hit twice)");
        vertex_hit[w] = 1;
    }
    std::vector<char> edge_hit(dst.edge_count(), 0);
    for (int s = 0; s < src.edge_count(); ++s) {
        auto [d, rev] = e.edge_image[s];
        if (d < 0 || d >= dst.edge_count())
            throw ModelPreconditionError("edge image out of range");
        if (edge_hit[d])
            throw ModelPreconditionError("embedding not injective on edges (" +
                                         dst.edge(d).id + " hit twice)");
        edge_hit[d] = 1;
        const Edge& se = src.edge(s);
        const Edge& de = dst.edge(d);
        int want_tail = rev ? de.head : de.tail;
        int want_head = rev ? de.tail : de.head;
        if (e.vertex_image[se.tail] != want_tail || e.vertex_image[se.head] != want_head)
            throw ModelPreconditionError("edge " + se.id +
                                         " does not map compatibly with its endpoints");
    }
}

GraphEmbedding parse_embedding(std::istream& in, const Graph& src, const Graph& dst) {
    GraphEmbedding e;
    e.vertex_image.assign(src.vertex_count(), -1);
    e.edge_image.assign(src.edge_count(), {-1, false});
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] != "gm" || toks.size() < 4)
            throw ParseError(lineno, "expected gm v|e <src> <dst> [rev]");
        if (toks[1] == "v") {
            if (toks.size() != 4) throw ParseError(lineno, "gm v takes src and dst");
            auto s = src.find_vertex(toks[2]);
            auto d = dst.find_vertex(toks[3]);
            if (!s) throw ParseError(lineno, "unknown source vertex: " + toks[2]);
            if (!d) throw ParseError(lineno, "unknown target vertex: " + toks[3]);
            if (e.vertex_image[*s] != -1)
                throw ParseError(lineno, "vertex mapped twice: " + toks[2]);
            e.vertex_image[*s] = *d;
        } else if (toks[1] == "e") {
            if (toks.size() == 5 && toks[4] != "rev")
                throw ParseError(lineno, "trailing token must be rev");
            if (toks.size() > 5) throw ParseError(lineno, "too many tokens");
            auto s = src.find_edge(toks[2]);
            auto d = dst.find_edge(toks[3]);
            if (!s) throw ParseError(lineno, "unknown source edge: " + toks[2]);
            if (!d) throw ParseError(lineno, "unknown target edge: " + toks[3]);
            if (e.edge_image[*s].first != -1)
                throw ParseError(lineno, "edge mapped twice: " + toks[2]);
            e.edge_image[*s] = {*d, toks.size() == 5};
        } else {
            throw ParseError(lineno, "expected v or e after gm");
        }
    }
    validate_embedding(e, src, dst);
    return e;
}

GraphEmbedding parse_embedding(const std::string& text, const Graph& src,
                               const Graph& dst) {
    std::istringstream ss(text);
    return parse_embedding(ss, src, dst);
}

InducedCellMap induced_cell_map(const GraphEmbedding& e, const CubicalComplex& src,
                                const CubicalComplex& dst) {
    if (src.particles() != dst.particles())
        throw std::invalid_argument("complexes have different particle counts");
    if (src.convention() != dst.convention())
        throw std::invalid_argument("complexes have different conventions");
    validate_embedding(e, src.ambient(), dst.ambient());

    InducedCellMap out;
    out.entries.resize(src.top_dim() + 1);
    for (int k = 0; k <= src.top_dim(); ++k) {
        out.entries[k].resize(src.cell_count(k));
        for (std::size_t i = 0; i < src.cell_count(k); ++i) {
            const Cell& c = src.cell(k, static_cast<int>(i));
            Cell image;
            image.factors.reserve(c.factors.size());
            int sign = 1;
            for (const auto& f : c.factors) {
                if (f.is_segment) {
                    auto [d, rev] = e.edge_image[f.index];
                    if (rev) sign = -sign;
                    image.factors.push_back({true, d, false});
                } else {
                    image.factors.push_back({false, e.vertex_image[f.index], false});
                }
            }
            if (dst.convention() == CubicalComplex::Convention::sorted_quotient)
                sign *= canonicalize(dst.ambient(), image);
            auto idx = dst.find(k, image);
            if (!idx)
                throw ModelPreconditionError(
                    "image cell missing from target complex (different subdivisions?)");
            out.entries[k][i] = {*idx, sign};
        }
    }

    // Chain-map identity: ∂ ∘ F = F ∘ ∂ in every positive degree.
    for (int k = 1; k <= src.top_dim(); ++k) {
        for (std::size_t i = 0; i < src.cell_count(k); ++i) {
            Chain lhs;
            auto [fi, fs] = out.entries[k][i];
            for (const auto& inc : dst.incidences(k, fi)) lhs[inc.face] += fs * inc.coeff;
            Chain rhs;
            for (const auto& inc : src.incidences(k, static_cast<int>(i))) {
                auto [gi, gs] = out.entries[k - 1][inc.face];
                rhs[gi] += inc.coeff * gs;
            }
            std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
            if (lhs != rhs)
                throw ChainIntegrityError("induced map does not commute with boundary");
        }
    }
    return out;
}

InducedHomologyMap induced_homology_map(const InducedCellMap& f,
                                        const ChainComplex& src_cc,
                                        const HomologyBasis& src_basis,
                                        const ChainComplex& dst_cc,
                                        const HomologyBasis& dst_basis) {
    (void)src_cc;
    InducedHomologyMap out;
    out.degrees.resize(src_basis.degrees.size());
    for (std::size_t k = 0; k < src_basis.degrees.size(); ++k) {
        const auto& sdeg = src_basis.degrees[k];
        bool have_dst = k < dst_basis.degrees.size();
        long long dst_betti = have_dst ? dst_basis.degrees[k].betti : 0;
        std::size_t dst_tor = have_dst ? dst_basis.degrees[k].torsion.size() : 0;
        auto& deg = out.degrees[k];
        deg.free_map.assign(dst_betti, std::vector<mpz_class>(sdeg.betti, 0));
        deg.torsion_map.assign(dst_tor, std::vector<mpz_class>(sdeg.torsion.size(), 0));
        if (!have_dst) continue;

        auto push = [&](const std::vector<mpz_class>& chain) {
            std::vector<mpz_class> image(dst_cc.rank[k], 0);
            for (std::size_t i = 0; i < chain.size(); ++i) {
                if (chain[i] == 0) continue;
                auto [di, ds] = f.entries[k][i];
                image[di] += ds * chain[i];
            }
            return image;
        };

        for (long long j = 0; j < sdeg.betti; ++j) {
            auto image = push(sdeg.free_generator(static_cast<int>(j)));
            std::vector<mpz_class> tor, fre;
            dst_basis.degrees[k].class_coordinates(image, tor, fre);
            for (long long i = 0; i < dst_betti; ++i) deg.free_map[i][j] = fre[i];
        }
        for (std::size_t j = 0; j < sdeg.torsion.size(); ++j) {
            auto image = push(sdeg.torsion_generator(static_cast<int>(j)));
            std::vector<mpz_class> tor, fre;
            dst_basis.degrees[k].class_coordinates(image, tor, fre);
            for (const auto& x : fre)
                if (x != 0)
                    throw ChainIntegrityError(
                        "torsion class mapped to an infinite-order class");
            for (std::size_t i = 0; i < dst_tor; ++i) deg.torsion_map[i][j] = tor[i];
        }
    }
    return out;
}

}  // namespace confspace
