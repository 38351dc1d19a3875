// confspace: configuration spaces of graphs from the command line.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "confspace/braid.hpp"
#include "confspace/homology.hpp"
#include "confspace/io.hpp"
#include "confspace/models.hpp"
#include "confspace/morphism.hpp"
#include "confspace/plane.hpp"
#include "confspace/swiatkowski.hpp"

using namespace confspace;
using nlohmann::json;

namespace {

struct CheckFailed {};

std::string slurp_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

std::string load_input(const std::string& path) {
    return path.empty() || path == "-" ? slurp_stdin() : read_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write: " + out_path);
        out << text;
    }
}

bool looks_like_complex(const std::string& text) {
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        return tok == "complex";
    }
    return false;
}

json homology_json(const std::vector<HomologyGroup>& hs) {
    json out = json::array();
    for (const auto& h : hs) {
        json tors = json::array();
        for (const auto& d : h.torsion) tors.push_back(d.get_str());
        out.push_back({{"degree", h.degree}, {"betti", h.betti}, {"torsion", tors}});
    }
    return out;
}

void write_manifest(const std::string& path, json manifest) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest: " + path);
    out << manifest.dump(2) << '\n';
}

std::vector<long long> betti_list(const std::vector<HomologyGroup>& hs) {
    std::vector<long long> out;
    for (const auto& h : hs) out.push_back(h.betti);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

template <class Complex>
std::vector<HomologyGroup> homology_via_collapse(const Complex& x) {
    auto collapsed = collapse_free_faces(x);
    auto hs = homology(build_chain_complex(collapsed));
    // Collapse can lower the top dimension; report the original range.
    for (int k = static_cast<int>(hs.size()); k <= x.top_dim(); ++k)
        hs.push_back({k, 0, {}});
    return hs;
}

long long projected_cells(const Graph& g, int n) {
    double proj = std::pow(static_cast<double>(g.cell_count()), n);
    return proj > 9e18 ? 9000000000000000000LL : static_cast<long long>(proj);
}

struct BuildResult {
    std::string complex_text;
    std::vector<long long> cell_counts;
    int segments = 1;
    std::optional<std::vector<HomologyGroup>> escalation_homology;
};

BuildResult run_build(const Graph& base, const std::string& graph_name,
                      const std::string& model, int n, int k, bool override_check,
                      bool auto_subdivide, bool escalate, bool force) {
    BuildResult res;
    auto guard = [&](const Graph& g) {
        if (!force && projected_cells(g, n) > 10000000LL)
            throw ModelPreconditionError(
                "projected cell count above 10^7; re-run with --force");
    };
    auto counts_of = [](const auto& x) {
        std::vector<long long> out;
        for (int d = 0; d <= x.top_dim(); ++d)
            out.push_back(static_cast<long long>(x.cell_count(d)));
        return out;
    };
    auto finish = [&](const auto& x, const Graph& g, int segments) {
        std::ostringstream ss;
        write_complex(x, graph_name, ss);
        res.complex_text = ss.str();
        res.cell_counts = counts_of(x);
        res.segments = segments;
        (void)g;
    };

    if (model == "swiatkowski") {
        guard(base);
        auto g = std::make_shared<Graph>(base);
        finish(build_swiatkowski(g, n), base, 1);
        return res;
    }
    if (model == "abrams" || model == "abrams-u") {
        bool unlabeled = model == "abrams-u";
        Graph work = base;
        int segments = 1;
        if (auto_subdivide && !check_abrams(work, n).passed) {
            auto [sub, rep] = sufficient_subdivision(work, n, ModelKind::abrams);
            work = std::move(sub);
            segments = rep.segments;
        }
        guard(work);
        auto g = std::make_shared<Graph>(std::move(work));
        if (unlabeled)
            finish(build_unlabeled_abrams(g, n, override_check), *g, segments);
        else
            finish(build_abrams(g, n, override_check), *g, segments);
        return res;
    }
    if (model == "nonk") {
        if (escalate) {
            int segments = n;
            std::optional<std::vector<long long>> prev_betti;
            std::string prev_text;
            std::vector<long long> prev_counts;
            int prev_segments = segments;
            for (int round = 0; round < 8; ++round, segments *= 2) {
                auto [sub, rep] = subdivide(base, segments);
                guard(sub);
                auto g = std::make_shared<Graph>(std::move(sub));
                auto x = build_nonk(g, n, k);
                auto hs = homology_via_collapse(x);
                auto betti = betti_list(hs);
                if (prev_betti && betti == *prev_betti) {
                    res.complex_text = prev_text;
                    res.cell_counts = prev_counts;
                    res.segments = prev_segments;
                    res.escalation_homology = hs;
                    return res;
                }
                std::ostringstream ss;
                write_complex(x, graph_name, ss);
                prev_text = ss.str();
                prev_counts.clear();
                for (int d = 0; d <= x.top_dim(); ++d)
                    prev_counts.push_back(static_cast<long long>(x.cell_count(d)));
                prev_segments = segments;
                prev_betti = betti;
            }
            throw ModelPreconditionError("Betti numbers did not stabilize");
        }
        Graph work = base;
        int segments = 1;
        if (auto_subdivide) {
            auto [sub, rep] = sufficient_subdivision(base, n, ModelKind::nonk);
            work = std::move(sub);
            segments = rep.segments;
        }
        guard(work);
        auto g = std::make_shared<Graph>(std::move(work));
        finish(build_nonk(g, n, k), *g, segments);
        return res;
    }
    throw std::invalid_argument("unknown model: " + model);
}

int dispatch(int argc, char** argv) {
    CLI::App app{"discrete configuration spaces of graphs"};
    app.require_subcommand(1);
    std::string joined;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) joined += ' ';
        joined += argv[i];
    }

    // graph validate / graph subdivide
    auto* graph_cmd = app.add_subcommand("graph", "graph file utilities");
    graph_cmd->require_subcommand(1);
    std::string gv_file;
    auto* gv = graph_cmd->add_subcommand("validate", "parse and summarize a graph file");
    gv->add_option("file", gv_file, "graph file")->required();
    std::string gs_file, gs_out;
    int gs_m = 1;
    auto* gs = graph_cmd->add_subcommand("subdivide", "subdivide every edge");
    gs->add_option("file", gs_file, "graph file")->required();
    gs->add_option("-m,--segments", gs_m, "segments per edge")->required();
    gs->add_option("-o,--output", gs_out, "output file (default stdout)");

    std::string ck_file;
    int ck_n = 2;
    bool ck_auto = false;
    auto* ck = app.add_subcommand("check", "sufficiency check for the discretized model");
    ck->add_option("file", ck_file, "graph file")->required();
    ck->add_option("-n", ck_n, "number of points")->required();
    ck->add_flag("--auto-subdivide", ck_auto, "subdivide until the check passes");

    std::string b_file, b_model, b_out, b_manifest;
    int b_n = 2, b_k = 2;
    bool b_override = false, b_auto = false, b_escalate = false, b_force = false,
         b_timing = false;
    auto* bd = app.add_subcommand("build", "build a configuration space complex");
    bd->add_option("graph-file", b_file, "graph file")->required();
    bd->add_option("--model", b_model, "abrams|abrams-u|swiatkowski|nonk")->required();
    bd->add_option("-n", b_n, "number of points")->required();
    bd->add_option("-k", b_k, "coincidence bound (nonk)");
    bd->add_flag("--override-check", b_override, "build even if the check fails");
    bd->add_flag("--auto-subdivide", b_auto, "apply the sufficient subdivision first");
    bd->add_flag("--escalate", b_escalate,
                 "nonk: double subdivision until Betti numbers stabilize");
    bd->add_flag("--force", b_force, "ignore the projected-size guard");
    bd->add_option("-o,--output", b_out, "output file (default stdout)");
    bd->add_option("--manifest", b_manifest, "write a run manifest (JSON)");
    bd->add_flag("--timing", b_timing, "record wall time in the manifest");

    std::string h_file, h_manifest;
    bool h_machine = false, h_timing = false;
    auto* hm = app.add_subcommand("homology", "integral homology of a complex file");
    hm->add_option("file", h_file, "complex or graph file (default stdin)");
    hm->add_flag("--machine", h_machine, "one line per degree: k betti d1 d2 ...");
    hm->add_option("--manifest", h_manifest, "write a run manifest (JSON)");
    hm->add_flag("--timing", h_timing, "record wall time in the manifest");

    std::string eu_file;
    auto* eu = app.add_subcommand("euler", "Euler characteristic of a complex file");
    eu->add_option("file", eu_file, "complex or graph file (default stdin)");

    std::string cl_file, cl_graph, cl_kind = "abrams", cl_out;
    auto* cl = app.add_subcommand("collapse", "collapse free faces of a complex file");
    cl->add_option("file", cl_file, "complex file")->required();
    cl->add_option("--graph", cl_graph, "ambient graph file")->required();
    cl->add_option("--kind", cl_kind, "abrams|abrams-u|nonk|swiatkowski");
    cl->add_option("-o,--output", cl_out, "output file (default stdout)");

    std::string in_embed, in_model = "abrams", in_src, in_dst;
    int in_n = 2, in_k = 2;
    auto* ind = app.add_subcommand("induced", "homology map induced by a graph embedding");
    ind->add_option("src-graph", in_src, "source graph file")->required();
    ind->add_option("dst-graph", in_dst, "target graph file")->required();
    ind->add_option("--embedding", in_embed, "embedding file")->required();
    ind->add_option("--model", in_model, "abrams|abrams-u|nonk");
    ind->add_option("-n", in_n, "number of points")->required();
    ind->add_option("-k", in_k, "coincidence bound (nonk)");

    auto* br = app.add_subcommand("braid", "braid word utilities");
    br->require_subcommand(1);
    int br_n = 0;
    br->add_option("-n,--strands", br_n, "strand count (default: inferred)");
    std::vector<std::string> br_word;
    int mv_pos = 0;
    std::string mv_kind;
    auto* br_reduce = br->add_subcommand("reduce", "free reduction");
    br_reduce->add_option("letters", br_word, "word letters");
    auto* br_perm = br->add_subcommand("perm", "permutation image");
    br_perm->add_option("letters", br_word, "word letters");
    auto* br_pure = br->add_subcommand("pure", "is the word a pure braid?");
    br_pure->add_option("letters", br_word, "word letters");
    auto* br_sum = br->add_subcommand("sum", "exponent sum");
    br_sum->add_option("letters", br_word, "word letters");
    auto* br_move = br->add_subcommand("move", "apply a defining relation");
    br_move->add_option("letters", br_word, "word letters");
    br_move->add_option("--pos", mv_pos, "position of the matched subword")->required();
    br_move->add_option("--kind", mv_kind, "commute|braid|braid-inverse")->required();

    auto* pl = app.add_subcommand("plane", "two points in the plane <-> R^3 x S^1");
    pl->require_subcommand(1);
    std::vector<double> pl_args;
    auto* pl_fwd = pl->add_subcommand("fwd", "pair (x, y) to (a, t, u)");
    pl_fwd->add_option("coords", pl_args, "x1 x2 y1 y2")->expected(4);
    auto* pl_inv = pl->add_subcommand("inv", "(a, t, u) back to the pair");
    pl_inv->add_option("coords", pl_args, "a1 a2 t u1 u2")->expected(5);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto wall_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    if (gv->parsed()) {
        Graph g = parse_graph(read_file(gv_file));
        std::cout << "ok: " << g.vertex_count() << " vertices, " << g.edge_count()
                  << " edges, " << g.essential_vertices().size() << " essential\n";
        return 0;
    }
    if (gs->parsed()) {
        Graph g = parse_graph(read_file(gs_file));
        auto [sub, rep] = subdivide(g, gs_m);
        emit(graph_to_string(sub), gs_out);
        for (const auto& split : rep.splits) {
            std::cerr << split.edge_id << " ->";
            for (const auto& e : split.replacement_edges) std::cerr << ' ' << e;
            std::cerr << '\n';
        }
        return 0;
    }
    if (ck->parsed()) {
        Graph g = parse_graph(read_file(ck_file));
        auto rep = check_abrams(g, ck_n);
        if (!rep.passed && ck_auto) {
            auto [sub, srep] = sufficient_subdivision(g, ck_n, ModelKind::abrams);
            std::cout << "subdivision applied: " << srep.segments << " segments per edge\n";
            g = std::move(sub);
            rep = check_abrams(g, ck_n);
        }
        std::cout << rep.summary(g);
        return rep.passed ? 0 : 4;
    }
    if (bd->parsed()) {
        std::string text = read_file(b_file);
        Graph g = parse_graph(text);
        auto res = run_build(g, b_file, b_model, b_n, b_k, b_override, b_auto,
                             b_escalate, b_force);
        emit(res.complex_text, b_out);
        if (!b_manifest.empty()) {
            json m;
            m["command"] = joined;
            m["inputs"] = {{b_file, digest_hex(text)}};
            m["model"] = {{"name", b_model}, {"n", b_n}};
            if (b_model == "nonk") m["model"]["k"] = b_k;
            m["subdivision"] = {{"segments", res.segments}};
            m["cells"] = res.cell_counts;
            m["homology"] = res.escalation_homology
                                ? homology_json(*res.escalation_homology)
                                : json();
            if (b_timing) m["wall_time_ms"] = wall_ms();
            write_manifest(b_manifest, m);
        }
        return 0;
    }
    if (hm->parsed() || eu->parsed()) {
        bool is_euler = eu->parsed();
        std::string text = load_input(is_euler ? eu_file : h_file);
        ChainComplex cc;
        std::vector<long long> counts;
        if (looks_like_complex(text)) {
            auto f = parse_complex_file(text);
            cc = f.chain();
        } else {
            // A graph is its own one-particle complex.
            auto g = std::make_shared<Graph>(parse_graph(text));
            cc = build_chain_complex(build_abrams(g, 1, true));
        }
        counts = cc.rank;
        if (is_euler) {
            std::cout << euler_characteristic(cc) << '\n';
            return 0;
        }
        auto hs = homology(cc);
        std::ostringstream out;
        for (const auto& h : hs) {
            if (h_machine) {
                out << h.degree << ' ' << h.betti;
                for (const auto& d : h.torsion) out << ' ' << d.get_str();
                out << '\n';
            } else {
                out << format_homology_group(h) << '\n';
            }
        }
        std::cout << out.str();
        if (!h_manifest.empty()) {
            json m;
            m["command"] = joined;
            m["inputs"] = json::object();
            if (!h_file.empty() && h_file != "-")
                m["inputs"] = {{h_file, digest_hex(text)}};
            m["model"] = json();
            m["subdivision"] = json();
            m["cells"] = counts;
            m["homology"] = homology_json(hs);
            if (h_timing) m["wall_time_ms"] = wall_ms();
            write_manifest(h_manifest, m);
        }
        return 0;
    }
    if (cl->parsed()) {
        auto f = parse_complex_file(read_file(cl_file));
        auto g = std::make_shared<Graph>(parse_graph(read_file(cl_graph)));
        std::ostringstream ss;
        if (cl_kind == "swiatkowski") {
            auto x = rebuild_swiatkowski(f, g);
            write_complex(collapse_free_faces(x), f.graph_name, ss);
        } else if (cl_kind == "abrams" || cl_kind == "nonk" || cl_kind == "abrams-u") {
            auto conv = cl_kind == "abrams-u" ? CubicalComplex::Convention::sorted_quotient
                                             : CubicalComplex::Convention::labeled;
            auto x = rebuild_cubical(f, g, conv);
            write_complex(collapse_free_faces(x), f.graph_name, ss);
        } else {
            throw std::invalid_argument("unknown kind: " + cl_kind);
        }
        emit(ss.str(), cl_out);
        return 0;
    }
    if (ind->parsed()) {
        auto src = std::make_shared<Graph>(parse_graph(read_file(in_src)));
        auto dst = std::make_shared<Graph>(parse_graph(read_file(in_dst)));
        auto embed = parse_embedding(read_file(in_embed), *src, *dst);
        CubicalComplex sx = [&] {
            if (in_model == "abrams") return build_abrams(src, in_n, true);
            if (in_model == "abrams-u") return build_unlabeled_abrams(src, in_n, true);
            if (in_model == "nonk") return build_nonk(src, in_n, in_k);
            throw std::invalid_argument("unknown model: " + in_model);
        }();
        CubicalComplex dx = [&] {
            if (in_model == "abrams") return build_abrams(dst, in_n, true);
            if (in_model == "abrams-u") return build_unlabeled_abrams(dst, in_n, true);
            return build_nonk(dst, in_n, in_k);
        }();
        auto f = induced_cell_map(embed, sx, dx);
        auto scc = build_chain_complex(sx);
        auto dcc = build_chain_complex(dx);
        auto sb = homology_basis(scc);
        auto db = homology_basis(dcc);
        auto hmap = induced_homology_map(f, scc, sb, dcc, db);
        for (std::size_t k = 0; k < hmap.degrees.size(); ++k) {
            const auto& deg = hmap.degrees[k];
            const auto& sdeg = sb.degrees[k];
            long long db_betti = k < db.degrees.size() ? db.degrees[k].betti : 0;
            std::cout << "degree " << k << ": Z^" << sdeg.betti << " -> Z^" << db_betti
                      << '\n';
            for (const auto& row : deg.free_map) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    std::cout << (j ? " " : "") << row[j].get_str();
                std::cout << '\n';
            }
            if (!deg.torsion_map.empty()) {
                std::cout << "torsion:\n";
                for (const auto& row : deg.torsion_map) {
                    for (std::size_t j = 0; j < row.size(); ++j)
                        std::cout << (j ? " " : "") << row[j].get_str();
                    std::cout << '\n';
                }
            }
        }
        return 0;
    }
    if (br->parsed()) {
        std::string wtext;
        for (std::size_t i = 0; i < br_word.size(); ++i) {
            if (i) wtext += ' ';
            wtext += br_word[i];
        }
        int strands = br_n;
        if (strands <= 0) {
            int top = 1;
            std::istringstream ss(wtext);
            std::string tok;
            while (ss >> tok)
                if (tok.size() >= 2) top = std::max(top, std::atoi(tok.c_str() + 1) + 1);
            strands = top;
        }
        BraidWord w = parse_braid_word(strands, wtext);
        if (br_reduce->parsed()) {
            std::cout << braid_word_to_string(free_reduce(w)) << '\n';
        } else if (br_perm->parsed()) {
            auto p = permutation_image(w);
            for (std::size_t i = 0; i < p.image.size(); ++i)
                std::cout << (i ? " " : "") << p.image[i] + 1;
            std::cout << '\n';
        } else if (br_pure->parsed()) {
            std::cout << (is_pure(w) ? "true" : "false") << '\n';
        } else if (br_sum->parsed()) {
            std::cout << exponent_sum(w) << '\n';
        } else if (br_move->parsed()) {
            BraidRelation rel;
            if (mv_kind == "commute")
                rel = BraidRelation::commute;
            else if (mv_kind == "braid")
                rel = BraidRelation::braid;
            else if (mv_kind == "braid-inverse")
                rel = BraidRelation::braid_inverse;
            else
                throw std::invalid_argument("unknown relation: " + mv_kind);
            auto moved = apply_relation(w, mv_pos, rel);
            if (!moved)
                throw ModelPreconditionError("relation does not apply at position " +
                                             std::to_string(mv_pos));
            std::cout << braid_word_to_string(*moved) << '\n';
        }
        return 0;
    }
    if (pl->parsed()) {
        char buf[512];
        if (pl_fwd->parsed()) {
            auto q = pair_to_product({{pl_args[0], pl_args[1]}, {pl_args[2], pl_args[3]}});
            std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %.17g\n", q.a[0],
                          q.a[1], q.t, q.u[0], q.u[1]);
        } else {
            auto p = product_to_pair({{pl_args[0], pl_args[1]}, pl_args[2],
                                      {pl_args[3], pl_args[4]}});
            std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g\n", p.x[0], p.x[1],
                          p.y[0], p.y[1]);
        }
        std::cout << buf;
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ChainIntegrityError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const ModelPreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DegeneratePairError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
