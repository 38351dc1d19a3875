#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "confspace/homology.hpp"
#include "confspace/models.hpp"
#include "oracles.hpp"

using namespace confspace;

namespace {

std::shared_ptr<Graph> load(const char* text) {
    return std::make_shared<Graph>(parse_graph(text));
}

const char* kY = "v c\nv a\nv b\nv d\ne ea c a\ne eb c b\ne ed c d\n";
const char* kX = "v c\nv a\nv b\nv d\nv f\ne ea c a\ne eb c b\ne ed c d\ne ef c f\n";
const char* kLollipop = "v a\nv b\ne loop a a\ne stem a b\n";

std::vector<long long> bettis(const CubicalComplex& x) {
    std::vector<long long> out;
    for (const auto& h : homology(build_chain_complex(x))) out.push_back(h.betti);
    return out;
}

}  // namespace

TEST_CASE("two points on the Y graph") {
    auto x = build_abrams(load(kY), 2);
    CHECK(x.cell_count(0) == 12);
    CHECK(x.cell_count(1) == 12);
    CHECK(x.top_dim() == 1);
    CHECK(bettis(x) == std::vector<long long>{1, 1});  // a circle
}

TEST_CASE("two points on the X graph") {
    auto x = build_abrams(load(kX), 2);
    CHECK(x.cell_count(0) == 20);
    CHECK(x.cell_count(1) == 24);
    CHECK(bettis(x) == std::vector<long long>{1, 5});
    CHECK(euler_characteristic(x) == -4);
}

TEST_CASE("sufficiency check") {
    auto y = load(kY);
    CHECK(check_abrams(*y, 2).passed);
    // Leaves are distance 2 apart through the center; n = 4 needs 3.
    auto rep = check_abrams(*y, 4);
    CHECK(!rep.passed);
    CHECK(!rep.close_pairs.empty());

    auto lolli = load(kLollipop);
    auto rep2 = check_abrams(*lolli, 2);
    CHECK(!rep2.passed);
    REQUIRE(!rep2.short_cycles.empty());
    CHECK(rep2.short_cycles[0].length == 1);
    // The summary mentions the offending cycle.
    CHECK(rep2.summary(*lolli).find("loop") != std::string::npos);

    // Too few vertices to place the points.
    auto tiny = load("v a\nv b\ne e1 a b\n");
    auto rep3 = check_abrams(*tiny, 3);
    CHECK(!rep3.passed);
    CHECK(!rep3.enough_vertices);
}

TEST_CASE("build refuses unchecked graphs unless overridden") {
    auto lolli = load(kLollipop);
    CHECK_THROWS_AS(build_abrams(lolli, 2), ModelPreconditionError);
    auto x = build_abrams(lolli, 2, true);
    CHECK(x.cell_count(0) == 2);
    CHECK(x.cell_count(1) == 2);
}

TEST_CASE("lollipop splits into two components") {
    auto x = build_abrams(load(kLollipop), 2, true);
    CHECK(bettis(x)[0] == 2);
    CHECK(oracle::component_count(x) == 2);
}

TEST_CASE("more points than vertices gives the empty complex") {
    auto x = build_abrams(load(kY), 5);
    CHECK(x.top_dim() == -1);
    CHECK(x.total_cells() == 0);
}

TEST_CASE("unlabeled model quotients cell counts by n!") {
    auto y = load(kY);
    auto labeled = build_abrams(y, 2);
    auto unlabeled = build_unlabeled_abrams(y, 2);
    CHECK(unlabeled.cell_count(0) == 6);
    CHECK(unlabeled.cell_count(1) == 6);
    for (int k = 0; k <= labeled.top_dim(); ++k)
        CHECK(labeled.cell_count(k) == 2 * unlabeled.cell_count(k));
    CHECK(bettis(unlabeled) == std::vector<long long>{1, 1});
}

TEST_CASE("n! ratio holds for three points") {
    auto g = load("v a\nv b\nv c\nv d\nv e\ne e1 a b\ne e2 b c\ne e3 c d\ne e4 d e\n");
    auto labeled = build_abrams(g, 3, true);
    auto unlabeled = build_unlabeled_abrams(g, 3, true);
    REQUIRE(labeled.top_dim() == unlabeled.top_dim());
    for (int k = 0; k <= labeled.top_dim(); ++k)
        CHECK(labeled.cell_count(k) == 6 * unlabeled.cell_count(k));
}

TEST_CASE("non-k-equal cell counts on the subdivided Y") {
    auto y = load(kY);
    auto [sub, rep] = subdivide(*y, 3);
    auto g = std::make_shared<Graph>(std::move(sub));
    auto x = build_nonk(g, 3, 3);
    CHECK(x.cell_count(0) == 990);
    CHECK(x.cell_count(1) == 2646);
    CHECK(x.cell_count(2) == 2322);
    CHECK(x.cell_count(3) == 660);
    CHECK(euler_characteristic(x) == 6);
}

TEST_CASE("non-2-equal coincides with the disjointness model") {
    auto g = load("v a\nv b\nv c\ne e1 a b\ne e2 b c\n");
    auto nonk = build_nonk(g, 2, 2);
    auto abrams = build_abrams(g, 2, true);
    REQUIRE(nonk.top_dim() == abrams.top_dim());
    for (int k = 0; k <= nonk.top_dim(); ++k)
        CHECK(nonk.cell_count(k) == abrams.cell_count(k));
}

TEST_CASE("non-k-equal validates k") {
    auto g = load(kY);
    CHECK_THROWS_AS(build_nonk(g, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_nonk(g, 3, 4), std::invalid_argument);
    build_nonk(g, 3, 2);  // valid boundary cases
    build_nonk(g, 3, 3);
}

TEST_CASE("sufficient subdivision makes the check pass") {
    auto lolli = load(kLollipop);
    for (int n = 2; n <= 3; ++n) {
        auto [sub, rep] = sufficient_subdivision(*lolli, n, ModelKind::abrams);
        CHECK(rep.segments == n + 1);
        CHECK(check_abrams(sub, n).passed);
    }
    auto [sub, rep] = sufficient_subdivision(*lolli, 3, ModelKind::nonk);
    CHECK(rep.segments == 3);
}

TEST_CASE("model names") {
    CHECK(model_name(ModelKind::abrams) == "abrams");
    CHECK(model_name(ModelKind::abrams_unlabeled) == "abrams-u");
    CHECK(model_name(ModelKind::swiatkowski) == "swiatkowski");
    CHECK(model_name(ModelKind::nonk) == "nonk");
}
