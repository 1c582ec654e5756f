#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qte/generator.hpp"
#include "qte/init_edit.hpp"
#include "qte/qtm.hpp"
#include "qte/recognition.hpp"
#include "qte/triangles.hpp"
#include "test_util.hpp"

using namespace qte;

namespace {

std::vector<count> component_sizes(const SkeletonForest& f) {
    // component = root plus all descendants
    std::vector<count> size(f.size(), 0);
    std::vector<node> order(f.size());
    for (node u = 0; u < f.size(); ++u) order[u] = u;
    std::sort(order.begin(), order.end(),
              [&](node a, node b) { return f.depth[a] > f.depth[b]; });
    for (node u : order) {
        ++size[u];
        if (f.parent[u] != none) size[f.parent[u]] += size[u];
    }
    std::vector<count> sizes;
    for (node u = 0; u < f.size(); ++u) {
        if (f.parent[u] == none) sizes.push_back(size[u]);
    }
    return sizes;
}

} // namespace

TEST_CASE("generated graphs are quasi-threshold and deterministic") {
    GenSpec spec;
    spec.n = 500;
    spec.seed = 7;
    auto [g1, f1] = generate_qt(spec);
    auto [g2, f2] = generate_qt(spec);
    CHECK(test::edge_set(g1) == test::edge_set(g2));
    CHECK(f1.parent == f2.parent);
    CHECK(is_quasi_threshold(g1));
    CHECK(count_edits(g1, f1) == 0);
}

TEST_CASE("component sizes stay within the configured bounds") {
    GenSpec spec;
    spec.n = 1000;
    spec.seed = 3;
    auto [g, f] = generate_qt(spec);
    auto sizes = component_sizes(f);
    count total = 0;
    const count size_max = static_cast<count>(spec.size_max_fraction * spec.n);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        total += sizes[i];
        CHECK(sizes[i] <= size_max);
        if (i + 1 < sizes.size()) {
            CHECK(sizes[i] >= spec.size_min);  // only the last component may be truncated
        }
    }
    CHECK(total == spec.n);
    CHECK(sizes.size() >= 2);
}

TEST_CASE("n below the minimum size is rejected") {
    GenSpec spec;
    spec.n = 5;
    CHECK_THROWS_AS(generate_qt(spec), std::domain_error);
}

TEST_CASE("plant_edits with k = 0 changes nothing") {
    GenSpec spec;
    spec.n = 100;
    spec.seed = 1;
    auto [g, f] = generate_qt(spec);
    auto [edited, edits] = plant_edits(g, 0, 5);
    CHECK(edits.empty());
    CHECK(test::edge_set(edited) == test::edge_set(g));
}

TEST_CASE("planted edits hit the exact distance and the 80/20 split") {
    GenSpec spec;
    spec.n = 200;
    spec.seed = 2;
    auto [g, f] = generate_qt(spec);
    for (count k : {1, 7, 40}) {
        auto [edited, edits] = plant_edits(g, k, 11);
        CHECK(edits.size() == k);
        count ins = 0, dels = 0;
        for (const Edit& e : edits) (e.kind == EditKind::insert ? ins : dels)++;
        CHECK(ins == static_cast<count>(0.8 * static_cast<double>(k)));
        CHECK(ins + dels == k);
        CHECK(test::symmetric_difference_size(g, edited) == k);
    }
}

TEST_CASE("infeasible planted splits are rejected") {
    GenSpec spec;
    spec.n = 12;
    spec.size_min = 12;
    spec.seed = 4;
    auto [g, f] = generate_qt(spec);
    CHECK_THROWS_AS(plant_edits(g, 100000, 0), std::domain_error);
}

TEST_CASE("qtm recovers planted edit distance on small instances") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        GenSpec spec;
        spec.n = 100;
        spec.seed = seed;
        auto [g, f] = generate_qt(spec);
        auto [edited, edits] = plant_edits(g, 20, seed + 50);
        QtmResult res = run_qtm(edited, initial_skeleton(edited, count_triangles(edited)),
                                4, seed);
        CHECK(res.edits <= 20 + 4);  // close to the planted distance
        CHECK(count_edits(edited, res.forest) == res.edits);
    }
}
