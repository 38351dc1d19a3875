#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "confspace/homology.hpp"
#include "confspace/models.hpp"
#include "confspace/swiatkowski.hpp"

using namespace confspace;

namespace {

std::shared_ptr<Graph> load(const char* text) {
    return std::make_shared<Graph>(parse_graph(text));
}

const char* kY = "v c\nv a\nv b\nv d\ne ea c a\ne eb c b\ne ed c d\n";
const char* kX = "v c\nv a\nv b\nv d\nv f\ne ea c a\ne eb c b\ne ed c d\ne ef c f\n";

template <class Complex>
std::vector<long long> bettis(const Complex& x) {
    std::vector<long long> out;
    for (const auto& h : homology(build_chain_complex(x))) out.push_back(h.betti);
    return out;
}

// For cross-model comparisons: top dimensions differ, homology does not.
template <class Complex>
std::vector<long long> reduced_bettis(const Complex& x) {
    auto out = bettis(x);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

TEST_CASE("two points on the Y graph") {
    auto x = build_swiatkowski(load(kY), 2);
    CHECK(x.cell_count(0) == 18);
    CHECK(x.cell_count(1) == 18);
    CHECK(x.top_dim() == 1);
    CHECK(euler_characteristic(x) == 0);
    CHECK(bettis(x) == std::vector<long long>{1, 1});
}

TEST_CASE("two points on the X graph") {
    auto x = build_swiatkowski(load(kX), 2);
    CHECK(x.cell_count(0) == 28);
    CHECK(x.cell_count(1) == 32);
    CHECK(euler_characteristic(x) == -4);
    CHECK(bettis(x) == std::vector<long long>{1, 5});
}

TEST_CASE("one point is the graph up to homotopy") {
    auto x = build_swiatkowski(load(kY), 1);
    // 1 vertex slot + 3 edge slots; movers give 3 one-cells.
    CHECK(x.cell_count(0) == 4);
    CHECK(x.cell_count(1) == 3);
    CHECK(reduced_bettis(x) == std::vector<long long>{1});  // contractible, like Y
}

TEST_CASE("zero points gives a single empty state") {
    auto x = build_swiatkowski(load(kY), 0);
    CHECK(x.cell_count(0) == 1);
    CHECK(x.top_dim() == 0);
}

TEST_CASE("no branched vertices means no cubes above dimension 0") {
    // A bare path has no branched vertices, so no movers exist.
    auto g = load("v a\nv b\nv c\ne e1 a b\ne e2 b c\n");
    auto x = build_swiatkowski(g, 2);
    CHECK(x.top_dim() == 0);
    // Distributions of 2 labeled points over 2 edges: per edge orderings count.
    // ea:2 ways ordered on one edge... enumerate: both on e1 (2 orders), both
    // on e2 (2), one on each (2 assignments) = 6 states.
    CHECK(x.cell_count(0) == 6);
    CHECK(bettis(x) == std::vector<long long>{6});
}

TEST_CASE("agrees with the disjointness model on a subdivided lollipop") {
    auto lolli = load("v a\nv b\ne loop a a\ne stem a b\n");
    auto k = build_swiatkowski(lolli, 2);
    auto [sub, rep] = sufficient_subdivision(*lolli, 2, ModelKind::abrams);
    auto d = build_abrams(std::make_shared<Graph>(std::move(sub)), 2);
    CHECK(reduced_bettis(k) == reduced_bettis(d));
}

TEST_CASE("three points on the Y graph stay consistent") {
    auto y = load(kY);
    auto k = build_swiatkowski(y, 3);
    auto [sub, rep] = sufficient_subdivision(*y, 3, ModelKind::abrams);
    auto d = build_abrams(std::make_shared<Graph>(std::move(sub)), 3);
    CHECK(reduced_bettis(k) == reduced_bettis(d));
    CHECK(euler_characteristic(k) == euler_characteristic(d));
}

TEST_CASE("cell validation") {
    auto y = load(kY);
    SwCell bad;
    bad.edge_labels.assign(3, {});
    bad.vertex_label.assign(4, 0);
    bad.edge_labels[0] = {1, 1};  // label used twice
    CHECK_THROWS_AS(SwiatkowskiComplex(y, 2, {bad}), std::invalid_argument);

    SwCell leaf_holder;
    leaf_holder.edge_labels.assign(3, {});
    leaf_holder.vertex_label.assign(4, 0);
    leaf_holder.vertex_label[1] = 1;  // leaves are not branched: no label allowed
    leaf_holder.edge_labels[0] = {2};
    CHECK_THROWS_AS(SwiatkowskiComplex(y, 2, {leaf_holder}), std::invalid_argument);

    SwCell mover_blocked;
    mover_blocked.edge_labels.assign(3, {});
    mover_blocked.vertex_label.assign(4, 0);
    mover_blocked.vertex_label[0] = 2;  // center occupied
    mover_blocked.movers.push_back({0, false, 1});  // needs the center vacant
    CHECK_THROWS_AS(SwiatkowskiComplex(y, 2, {mover_blocked}), std::invalid_argument);
}

TEST_CASE("mover faces have opposite signs at their two ends") {
    auto y = load(kY);
    SwCell c;
    c.edge_labels.assign(3, {});
    c.vertex_label.assign(4, 0);
    c.movers.push_back({0, false, 1});  // label 1 moving into edge ea at its tail c
    auto faces = sw_faces(*y, c);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].coeff * faces[1].coeff == -1);
    bool vertex_end = false, edge_end = false;
    for (const auto& f : faces) {
        if (f.cell.vertex_label[0] == 1) vertex_end = true;
        if (!f.cell.edge_labels[0].empty() && f.cell.edge_labels[0].front() == 1)
            edge_end = true;
        CHECK(f.cell.movers.empty());
    }
    CHECK(vertex_end);
    CHECK(edge_end);
}

TEST_CASE("loops contribute two independent movers") {
    auto lolli = load("v a\nv b\ne loop a a\ne stem a b\n");
    auto x = build_swiatkowski(lolli, 1);
    // Vertex a is branched (loop twice + stem): movers exist for stem-at-a,
    // loop-at-tail, loop-at-head.
    CHECK(x.cell_count(1) == 3);
    // No 2-cells: every mover needs a vacant at a distinct branched vertex, and
    // there is only one branched vertex.
    CHECK(x.top_dim() == 1);
}
