#include "confspace/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace confspace {

namespace {

void write_bnd_lines(const ChainComplex& cc, std::ostream& out) {
    for (int k = 1; k <= cc.top_dim(); ++k) {
        const auto& m = cc.boundary[k];
        for (int j = 0; j < m.cols; ++j)
            for (const auto& [row, coeff] : m.col[j])
                out << "bnd " << k << ' ' << row << ' ' << j << ' ' << coeff << '\n';
    }
}

}  // namespace

void write_complex(const CubicalComplex& x, const std::string& graph_name,
                   std::ostream& out) {
    out << "complex n=" << x.particles() << " graph=" << graph_name << '\n';
    for (int k = 0; k <= x.top_dim(); ++k)
        for (std::size_t i = 0; i < x.cell_count(k); ++i)
            out << "cell " << k << ' ' << x.describe_cell(k, static_cast<int>(i)) << '\n';
    write_bnd_lines(build_chain_complex(x), out);
}

void write_complex(const SwiatkowskiComplex& x, const std::string& graph_name,
                   std::ostream& out) {
    out << "complex n=" << x.particles() << " graph=" << graph_name << '\n';
    for (int k = 0; k <= x.top_dim(); ++k)
        for (std::size_t i = 0; i < x.cell_count(k); ++i)
            out << "sw " << x.describe_cell(k, static_cast<int>(i)) << '\n';
    write_bnd_lines(build_chain_complex(x), out);
}

ComplexFile parse_complex_file(std::istream& in) {
    ComplexFile f;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    struct BndEntry {
        int k, row, col;
        long long coeff;
    };
    std::vector<BndEntry> bnd;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "complex") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (toks.size() != 3 || toks[1].rfind("n=", 0) != 0 ||
                toks[2].rfind("graph=", 0) != 0)
                throw ParseError(lineno, "header must be: complex n=<n> graph=<name>");
            try {
                f.n = std::stoi(toks[1].substr(2));
            } catch (...) {
                throw ParseError(lineno, "bad particle count");
            }
            f.graph_name = toks[2].substr(6);
            have_header = true;
        } else if (toks[0] == "cell") {
            if (!have_header) throw ParseError(lineno, "cell before header");
            if (toks.size() != 3) throw ParseError(lineno, "cell takes dim and factors");
            int dim = 0;
            try {
                dim = std::stoi(toks[1]);
            } catch (...) {
                throw ParseError(lineno, "bad cell dimension");
            }
            if (dim < 0) throw ParseError(lineno, "bad cell dimension");
            if (dim >= static_cast<int>(f.cell_counts.size())) {
                f.cell_counts.resize(dim + 1, 0);
                f.cell_lines.resize(dim + 1);
            }
            ++f.cell_counts[dim];
            f.cell_lines[dim].push_back(toks[2]);
        } else if (toks[0] == "sw") {
            if (!have_header) throw ParseError(lineno, "sw before header");
            f.swiatkowski = true;
            // Dimension = number of movers in the S= token.
            std::string movers;
            bool found = false;
            for (std::size_t i = 1; i < toks.size(); ++i)
                if (toks[i].rfind("S=", 0) == 0) {
                    movers = toks[i].substr(2);
                    found = true;
                }
            if (!found) throw ParseError(lineno, "sw line without S=");
            int dim = movers.empty()
                          ? 0
                          : 1 + static_cast<int>(std::count(movers.begin(),
                                                            movers.end(), ','));
            if (dim >= static_cast<int>(f.cell_counts.size())) {
                f.cell_counts.resize(dim + 1, 0);
                f.cell_lines.resize(dim + 1);
            }
            ++f.cell_counts[dim];
            std::string payload;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (i > 1) payload += ' ';
                payload += toks[i];
            }
            f.cell_lines[dim].push_back(payload);
        } else if (toks[0] == "bnd") {
            if (toks.size() != 5) throw ParseError(lineno, "bnd takes k row col coeff");
            try {
                bnd.push_back({std::stoi(toks[1]), std::stoi(toks[2]), std::stoi(toks[3]),
                               std::stoll(toks[4])});
            } catch (...) {
                throw ParseError(lineno, "bad bnd entry");
            }
        } else {
            throw ParseError(lineno, "unknown directive: " + toks[0]);
        }
    }
    if (!have_header && (!f.cell_counts.empty() || !bnd.empty()))
        throw ParseError(lineno, "missing header");

    int top = static_cast<int>(f.cell_counts.size()) - 1;
    f.boundaries.resize(std::max(0, top + 1));
    if (top >= 0) f.boundaries[0] = SparseMatrix::zero(0, static_cast<int>(f.cell_counts[0]));
    for (int k = 1; k <= top; ++k)
        f.boundaries[k] = SparseMatrix::zero(static_cast<int>(f.cell_counts[k - 1]),
                                             static_cast<int>(f.cell_counts[k]));
    for (const auto& e : bnd) {
        if (e.k < 1 || e.k > top) throw ParseError(0, "bnd degree out of range");
        auto& m = f.boundaries[e.k];
        if (e.row < 0 || e.row >= m.rows || e.col < 0 || e.col >= m.cols)
            throw ParseError(0, "bnd index out of range");
        m.col[e.col].emplace_back(e.row, e.coeff);
    }
    for (auto& m : f.boundaries)
        for (auto& column : m.col) std::sort(column.begin(), column.end());
    return f;
}

ComplexFile parse_complex_file(const std::string& text) {
    std::istringstream ss(text);
    return parse_complex_file(ss);
}

ChainComplex ComplexFile::chain() const {
    ChainComplex cc;
    cc.rank = cell_counts;
    cc.boundary = boundaries;
    verify_chain_complex(cc);
    return cc;
}

namespace {

void check_against_file(const ChainComplex& rebuilt, const ComplexFile& f) {
    auto filed = f.chain();
    if (rebuilt.rank != filed.rank)
        throw ModelPreconditionError("cell counts disagree with the rebuilt complex");
    for (int k = 1; k <= rebuilt.top_dim(); ++k) {
        const auto& a = rebuilt.boundary[k];
        const auto& b = filed.boundary[k];
        for (int j = 0; j < a.cols; ++j)
            if (a.col[j] != b.col[j])
                throw ModelPreconditionError(
                    "bnd lines disagree with the recomputed boundary (wrong graph or "
                    "kind?)");
    }
}

}  // namespace

CubicalComplex rebuild_cubical(const ComplexFile& f, std::shared_ptr<const Graph> g,
                               CubicalComplex::Convention conv) {
    if (f.swiatkowski)
        throw ModelPreconditionError("file holds state cells, not cubical cells");
    CubicalComplex out(g, f.n, conv);
    for (const auto& dim_lines : f.cell_lines)
        for (const auto& payload : dim_lines) {
            Cell c;
            std::istringstream ss(payload);
            std::string part;
            while (std::getline(ss, part, '|')) {
                if (part.rfind("p:", 0) == 0) {
                    auto v = g->find_vertex(part.substr(2));
                    if (!v) throw ParseError(0, "unknown vertex in cell: " + part);
                    c.factors.push_back({false, *v, false});
                } else if (part.rfind("s:", 0) == 0) {
                    auto e = g->find_edge(part.substr(2));
                    if (!e) throw ParseError(0, "unknown edge in cell: " + part);
                    c.factors.push_back({true, *e, false});
                } else {
                    throw ParseError(0, "bad factor: " + part);
                }
            }
            out.add_cell(c);
        }
    out.finalize();
    check_against_file(build_chain_complex(out), f);
    return out;
}

namespace {

std::vector<int> parse_label_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
    return out;
}

}  // namespace

SwiatkowskiComplex rebuild_swiatkowski(const ComplexFile& f,
                                       std::shared_ptr<const Graph> g) {
    if (!f.swiatkowski && !f.cell_counts.empty())
        throw ModelPreconditionError("file holds cubical cells, not state cells");
    std::vector<SwCell> cells;
    for (const auto& dim_lines : f.cell_lines)
        for (const auto& payload : dim_lines) {
            SwCell c;
            c.edge_labels.resize(g->edge_count());
            c.vertex_label.assign(g->vertex_count(), 0);
            std::vector<char> edge_seen(g->edge_count(), 0);
            std::istringstream ss(payload);
            std::string tok;
            while (ss >> tok) {
                if (tok.rfind("f(", 0) == 0) {
                    auto close = tok.find(")=");
                    if (close == std::string::npos)
                        throw ParseError(0, "bad state token: " + tok);
                    std::string id = tok.substr(2, close - 2);
                    std::string val = tok.substr(close + 2);
                    auto e = g->find_edge(id);
                    if (e && !edge_seen[*e]) {
                        edge_seen[*e] = 1;
                        c.edge_labels[*e] = parse_label_list(val);
                    } else {
                        auto v = g->find_vertex(id);
                        if (!v) throw ParseError(0, "unknown cell id: " + id);
                        c.vertex_label[*v] = std::stoi(val);
                    }
                } else if (tok.rfind("S=", 0) == 0) {
                    std::string body = tok.substr(2);
                    if (body.empty()) continue;
                    std::istringstream ms(body);
                    std::string mv;
                    while (std::getline(ms, mv, ',')) {
                        auto p2 = mv.rfind(':');
                        auto p1 = mv.rfind(':', p2 == std::string::npos ? p2 : p2 - 1);
                        if (p1 == std::string::npos || p2 == std::string::npos)
                            throw ParseError(0, "bad mover: " + mv);
                        std::string id = mv.substr(0, p1);
                        std::string end = mv.substr(p1 + 1, p2 - p1 - 1);
                        int label = std::stoi(mv.substr(p2 + 1));
                        auto e = g->find_edge(id);
                        if (!e) throw ParseError(0, "unknown mover edge: " + id);
                        if (end != "t" && end != "h")
                            throw ParseError(0, "mover end must be t or h");
                        c.movers.push_back({*e, end == "h", label});
                    }
                } else {
                    throw ParseError(0, "bad state token: " + tok);
                }
            }
            std::sort(c.movers.begin(), c.movers.end());
            cells.push_back(std::move(c));
        }
    SwiatkowskiComplex out(std::move(g), f.n, std::move(cells));
    check_against_file(build_chain_complex(out), f);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(const std::string& data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

int thread_cap() {
    const char* env = std::getenv("CONFSPACE_THREADS");
    if (!env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 1) return 1;
    return static_cast<int>(std::min(v, 64L));
}

}  // namespace confspace
