// Discretized configuration space models over a graph.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "confspace/cells.hpp"
#include "confspace/graph.hpp"

namespace confspace {

// Sufficiency check for the discretized model of n points:
//  (1) essential vertices at least n-1 edges apart,
//  (2) every embedded cycle has at least n+1 edges,
// plus enough vertices to place n points.
struct AbramsCheckReport {
    bool passed = false;
    int n = 0;
    struct PairViolation {
        int u = 0, v = 0;       // essential vertex indices
        int distance = 0;
    };
    struct CycleViolation {
        int length = 0;
        std::vector<int> edges;
    };
    std::vector<PairViolation> close_pairs;
    std::vector<CycleViolation> short_cycles;
    bool enough_vertices = true;
    std::string summary(const Graph& g) const;
};

AbramsCheckReport check_abrams(const Graph& g, int n);

enum class ModelKind { abrams, abrams_unlabeled, swiatkowski, nonk };

std::string model_name(ModelKind m);

// Labeled discretized configuration space: n-tuples of graph cells with
// pairwise disjoint closures. n > |V| gives the empty complex. Unless
// override_check is set, a failed sufficiency check throws
// ModelPreconditionError (the complex is still a complex, just not known to
// have the right homotopy type).
CubicalComplex build_abrams(std::shared_ptr<const Graph> g, int n,
                            bool override_check = false);

// Quotient by the particle-permutation action: cells are sorted tuples.
CubicalComplex build_unlabeled_abrams(std::shared_ptr<const Graph> g, int n,
                                      bool override_check = false);

// No k of the n points may share a vertex closure: cells are n-tuples in which
// every vertex lies in at most k-1 factor closures. k = 2 is build_abrams.
CubicalComplex build_nonk(std::shared_ptr<const Graph> g, int n, int k);

// Subdivision making the model applicable: n+1 segments per edge for the
// Abrams models, n for non-k.
std::pair<Graph, SubdivisionReport> sufficient_subdivision(const Graph& g, int n,
                                                           ModelKind model);

}  // namespace confspace
