// Text formats for complexes and embeddings, digests, run manifests.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "confspace/cells.hpp"
#include "confspace/chain.hpp"
#include "confspace/models.hpp"
#include "confspace/swiatkowski.hpp"

namespace confspace {

// complex n=<n> graph=<name>
// cell <dim> p:<vid>|s:<eid>...          (cubical, factors | separated)
// sw f(<id>)=<labels> ... S=<e>:<t|h>:<l> (Świątkowski state lines)
// bnd <k> <row> <col> <coeff>
struct ComplexFile {
    int n = 0;
    std::string graph_name;
    std::vector<long long> cell_counts;           // per dimension
    std::vector<SparseMatrix> boundaries;         // index k >= 1; [0] zero map
    std::vector<std::vector<std::string>> cell_lines;  // raw payloads per dim
    bool swiatkowski = false;

    ChainComplex chain() const;  // verifies ∂∂ = 0
};

void write_complex(const CubicalComplex& x, const std::string& graph_name,
                   std::ostream& out);
void write_complex(const SwiatkowskiComplex& x, const std::string& graph_name,
                   std::ostream& out);
ComplexFile parse_complex_file(std::istream& in);
ComplexFile parse_complex_file(const std::string& text);

// Rebuild typed complexes from a parsed file plus the ambient graph. The
// recomputed boundary must match the file's bnd lines.
CubicalComplex rebuild_cubical(const ComplexFile& f, std::shared_ptr<const Graph> g,
                               CubicalComplex::Convention conv);
SwiatkowskiComplex rebuild_swiatkowski(const ComplexFile& f,
                                       std::shared_ptr<const Graph> g);

// gm v <src> <dst> / gm e <src> <dst> [rev]
std::string read_file(const std::string& path);

// FNV-1a, 16 hex digits.
std::uint64_t fnv1a64(const std::string& data);
std::string digest_hex(const std::string& data);

int thread_cap();  // CONFSPACE_THREADS, default 1

}  // namespace confspace
