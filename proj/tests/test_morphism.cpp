#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <sstream>

#include "confspace/models.hpp"
#include "confspace/morphism.hpp"

using namespace confspace;

namespace {

std::shared_ptr<Graph> load(const char* text) {
    return std::make_shared<Graph>(parse_graph(text));
}

const char* kY = "v c\nv a\nv b\nv d\ne ea c a\ne eb c b\ne ed c d\n";
const char* kX = "v c\nv a\nv b\nv d\nv f\ne ea c a\ne eb c b\ne ed c d\ne ef c f\n";

// The three arms of Y land on three of the four arms of X.
std::string arm_embedding(const char* arm_for_d) {
    std::ostringstream ss;
    ss << "gm v c c\ngm v a a\ngm v b b\ngm v d " << arm_for_d << "\n"
       << "gm e ea ea\ngm e eb eb\ngm e ed e" << arm_for_d << "\n";
    return ss.str();
}

}  // namespace

TEST_CASE("parse and validate an embedding") {
    auto y = load(kY);
    auto x = load(kX);
    auto e = parse_embedding(arm_embedding("f"), *y, *x);
    CHECK(e.vertex_image == std::vector<int>{0, 1, 2, 4});
    CHECK(e.edge_image[2] == std::pair<int, bool>{3, false});
}

TEST_CASE("embedding parse errors") {
    auto y = load(kY);
    auto x = load(kX);
    CHECK_THROWS_AS(parse_embedding("gm v c c\ngm v c a\n", *y, *x), ParseError);
    CHECK_THROWS_AS(parse_embedding("gm v zz c\n", *y, *x), ParseError);
    CHECK_THROWS_AS(parse_embedding("gm q c c\n", *y, *x), ParseError);
    // Incomplete: edges unmapped.
    CHECK_THROWS_AS(parse_embedding("gm v c c\ngm v a a\ngm v b b\ngm v d d\n",
                                    *y, *x),
                    ModelPreconditionError);
}

TEST_CASE("embedding must preserve incidence") {
    auto y = load(kY);
    auto x = load(kX);
    // ed maps to ef but its endpoint d maps to d, not f.
    std::string text =
        "gm v c c\ngm v a a\ngm v b b\ngm v d d\n"
        "gm e ea ea\ngm e eb eb\ngm e ed ef\n";
    CHECK_THROWS_AS(parse_embedding(text, *y, *x), ModelPreconditionError);
    // Two vertices landing on one is not injective.
    std::string text2 =
        "gm v c c\ngm v a a\ngm v b a\ngm v d d\n"
        "gm e ea ea\ngm e eb ea\ngm e ed ed\n";
    CHECK_THROWS_AS(parse_embedding(text2, *y, *x), ModelPreconditionError);
}

TEST_CASE("induced map on homology is injective for each arm choice") {
    auto y = load(kY);
    auto x = load(kX);
    auto src = build_abrams(y, 2);
    auto dst = build_abrams(x, 2);
    auto scc = build_chain_complex(src);
    auto dcc = build_chain_complex(dst);
    auto sb = homology_basis(scc);
    auto db = homology_basis(dcc);
    for (const char* arm : {"d", "f"}) {
        auto e = parse_embedding(arm_embedding(arm), *y, *x);
        auto f = induced_cell_map(e, src, dst);  // verifies the chain map
        auto h = induced_homology_map(f, scc, sb, dcc, db);
        REQUIRE(h.degrees.size() == 2);
        // H1: Z -> Z^5 sends the generator to a nonzero vector.
        bool nonzero = false;
        for (const auto& row : h.degrees[1].free_map)
            for (const auto& v : row)
                if (v != 0) nonzero = true;
        CHECK(nonzero);
        // H0: Z -> Z must carry the component class to a component class.
        CHECK(h.degrees[0].free_map.size() == 1);
        CHECK((h.degrees[0].free_map[0][0] == 1 || h.degrees[0].free_map[0][0] == -1));
    }
}

TEST_CASE("identity embedding induces the identity") {
    auto y = load(kY);
    std::string ident =
        "gm v c c\ngm v a a\ngm v b b\ngm v d d\n"
        "gm e ea ea\ngm e eb eb\ngm e ed ed\n";
    auto e = parse_embedding(ident, *y, *y);
    auto src = build_abrams(y, 2);
    auto f = induced_cell_map(e, src, src);
    for (std::size_t k = 0; k < f.entries.size(); ++k)
        for (std::size_t i = 0; i < f.entries[k].size(); ++i) {
            CHECK(f.entries[k][i].first == static_cast<int>(i));
            CHECK(f.entries[k][i].second == 1);
        }
}

TEST_CASE("reversing a cycle negates its fundamental class") {
    auto tri = load("v a\nv b\nv c\ne x a b\ne y b c\ne z c a\n");
    // The flip fixing a and swapping b with c.
    std::string flip =
        "gm v a a\ngm v b c\ngm v c b\n"
        "gm e x z rev\ngm e y y rev\ngm e z x rev\n";
    auto e = parse_embedding(flip, *tri, *tri);
    auto src = build_abrams(tri, 1);
    auto cc = build_chain_complex(src);
    auto basis = homology_basis(cc);
    auto f = induced_cell_map(e, src, src);
    auto h = induced_homology_map(f, cc, basis, cc, basis);
    REQUIRE(h.degrees[1].free_map.size() == 1);
    CHECK(h.degrees[1].free_map[0][0] == -1);
}

TEST_CASE("unlabeled complexes transport along embeddings too") {
    auto y = load(kY);
    auto x = load(kX);
    auto e = parse_embedding(arm_embedding("f"), *y, *x);
    auto src = build_unlabeled_abrams(y, 2);
    auto dst = build_unlabeled_abrams(x, 2);
    auto f = induced_cell_map(e, src, dst);
    auto scc = build_chain_complex(src);
    auto dcc = build_chain_complex(dst);
    auto h = induced_homology_map(f, scc, homology_basis(scc), dcc,
                                  homology_basis(dcc));
    bool nonzero = false;
    for (const auto& row : h.degrees[1].free_map)
        for (const auto& v : row)
            if (v != 0) nonzero = true;
    CHECK(nonzero);
}

TEST_CASE("maps between different conventions are rejected") {
    auto y = load(kY);
    auto x = load(kX);
    auto e = parse_embedding(arm_embedding("f"), *y, *x);
    auto src = build_abrams(y, 2);
    auto dst = build_unlabeled_abrams(x, 2);
    CHECK_THROWS_AS(induced_cell_map(e, src, dst), std::invalid_argument);
}

TEST_CASE("missing image cells are reported") {
    // Embed the interval into the Y graph but build the target with too few
    // cells: restrict the target to its 0-skeleton first.
    auto seg = load("v a\nv b\ne e1 a b\n");
    auto y = load(kY);
    std::string text = "gm v a c\ngm v b a\ngm e e1 ea\n";
    auto e = parse_embedding(text, *seg, *y);
    auto src = build_abrams(seg, 1);
    auto dst_full = build_abrams(y, 1);
    std::vector<std::vector<char>> keep(2);
    keep[0].assign(dst_full.cell_count(0), 1);
    keep[1].assign(dst_full.cell_count(1), 0);
    auto dst = dst_full.restrict_to(keep);
    CHECK_THROWS_AS(induced_cell_map(e, src, dst), ModelPreconditionError);
}
