// Graph embeddings and the maps they induce on complexes and homology.
#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "confspace/cells.hpp"
#include "confspace/homology.hpp"

namespace confspace {

// Injective cellular map: vertices to vertices, edges to edges, optionally
// reversing an edge's orientation.
struct GraphEmbedding {
    std::vector<int> vertex_image;                 // [src vertex] -> dst vertex
    std::vector<std::pair<int, bool>> edge_image;  // [src edge] -> (dst edge, reversed)
};

// Validates incidence-preservation and injectivity; throws ParseError /
// ModelPreconditionError on bad input.
GraphEmbedding parse_embedding(std::istream& in, const Graph& src, const Graph& dst);
GraphEmbedding parse_embedding(const std::string& text, const Graph& src, const Graph& dst);
void validate_embedding(const GraphEmbedding& e, const Graph& src, const Graph& dst);

// Chain map between complexes of the same convention and particle count.
// entries[k][i] = (dst cell index, sign). Every src cell must land on a dst
// cell; the chain-map identity is verified at construction.
struct InducedCellMap {
    std::vector<std::vector<std::pair<int, int>>> entries;
};

InducedCellMap induced_cell_map(const GraphEmbedding& e, const CubicalComplex& src,
                                const CubicalComplex& dst);

// Matrices of the induced map on homology, degree by degree, in the bases of
// homology_basis(). free_map is betti_dst x betti_src over Z; torsion_map maps
// torsion generators to torsion coordinates of the target (entry j reduced mod
// the target's torsion[j]).
struct InducedHomologyMap {
    struct Degree {
        DenseMatrix free_map;
        DenseMatrix torsion_map;
    };
    std::vector<Degree> degrees;
};

InducedHomologyMap induced_homology_map(const InducedCellMap& f,
                                        const ChainComplex& src_cc,
                                        const HomologyBasis& src_basis,
                                        const ChainComplex& dst_cc,
                                        const HomologyBasis& dst_basis);

}  // namespace confspace
