#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qte/generator.hpp"
#include "qte/ng_baseline.hpp"
#include "qte/recognition.hpp"
#include "test_util.hpp"

using namespace qte;

TEST_CASE("global counts of the small named graphs") {
    SubgraphCounts p4 = count_p4_c4(test::path_graph(4));
    CHECK(p4.p4 == 1);
    CHECK(p4.c4 == 0);

    SubgraphCounts c4 = count_p4_c4(test::cycle_graph(4));
    CHECK(c4.p4 == 0);
    CHECK(c4.c4 == 1);

    // brute force over 4-subsets: C5 contains five induced P4s and no C4
    auto [bp, bc] = test::brute_p4_c4(test::cycle_graph(5));
    CHECK(bp == 5);
    CHECK(bc == 0);
    SubgraphCounts c5 = count_p4_c4(test::cycle_graph(5));
    CHECK(c5.p4 == 5);
    CHECK(c5.c4 == 0);
}

TEST_CASE("global counts match brute force on all 6-node graphs") {
    for (std::uint32_t mask = 0; mask < (1u << 15); mask += 7) {
        Graph g = test::graph_from_mask(6, mask);
        auto [bp, bc] = test::brute_p4_c4(g);
        SubgraphCounts c = count_p4_c4(g);
        CHECK(c.p4 == bp);
        CHECK(c.c4 == bc);
    }
}

TEST_CASE("global counts match brute force on random graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = test::random_graph(20, 0.25, seed);
        auto [bp, bc] = test::brute_p4_c4(g);
        SubgraphCounts c = count_p4_c4(g);
        CHECK(c.p4 == bp);
        CHECK(c.c4 == bc);
    }
}

TEST_CASE("deltas of the named edits") {
    // deleting the central edge of a P4 leaves a 2K2
    CountDelta d1 = delta_p4_c4(test::path_graph(4), {EditKind::remove, 1, 2});
    CHECK(d1.p4 == -1);
    CHECK(d1.c4 == 0);

    // inserting a diagonal turns the C4 into a diamond
    CountDelta d2 = delta_p4_c4(test::cycle_graph(4), {EditKind::insert, 0, 2});
    CHECK(d2.p4 == 0);
    CHECK(d2.c4 == -1);

    // completing the diamond to K4 changes nothing
    Graph diamond = test::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CountDelta d3 = delta_p4_c4(diamond, {EditKind::insert, 0, 3});
    CHECK(d3.p4 == 0);
    CHECK(d3.c4 == 0);

    CHECK_THROWS_AS(delta_p4_c4(diamond, {EditKind::insert, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(delta_p4_c4(diamond, {EditKind::remove, 0, 3}), std::domain_error);
}

TEST_CASE("delta matches a full recount on random edits") {
    count checked = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = test::random_graph(18, 0.3, seed);
        SubgraphCounts before = count_p4_c4(g);
        Rng rng(seed);
        for (int i = 0; i < 5; ++i) {
            node u = static_cast<node>(rng.below(g.node_count()));
            node v = static_cast<node>(rng.below(g.node_count()));
            if (u == v) continue;
            Edit e{g.has_edge(u, v) ? EditKind::remove : EditKind::insert, u, v};
            CountDelta d = delta_p4_c4(g, e);
            SubgraphCounts after = count_p4_c4(apply_edits(g, {e}));
            CHECK(static_cast<std::int64_t>(before.p4) + d.p4 ==
                  static_cast<std::int64_t>(after.p4));
            CHECK(static_cast<std::int64_t>(before.c4) + d.c4 ==
                  static_cast<std::int64_t>(after.c4));
            ++checked;
        }
    }
    CHECK(checked > 150);
}

TEST_CASE("greedy zeroes the counters and the result is quasi-threshold") {
    Graph p4 = test::path_graph(4);
    NgOptions opts;
    opts.use_bst = false;
    EditSet e = ng_greedy(p4, opts);
    CHECK(e.size() == 1);
    CHECK(is_quasi_threshold(apply_edits(p4, e)));

    // quasi-threshold input: nothing to do
    Graph k5 = test::complete_graph(5);
    CHECK(ng_greedy(k5, opts).empty());
}

TEST_CASE("greedy strictly decreases the counter and stays within the candidate budget") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = test::random_graph(14, 0.3, seed);
        NgOptions opts;
        opts.use_bst = false;
        NgStats stats;
        EditSet edits = ng_greedy(g, opts, &stats);
        CHECK(is_quasi_threshold(apply_edits(g, edits)));
        const count n = g.node_count();
        SubgraphCounts base = count_p4_c4(g);
        count prev_total = base.p4 + base.c4;
        REQUIRE(stats.counts_trace.size() == edits.size());
        for (const SubgraphCounts& c : stats.counts_trace) {
            CHECK(c.p4 + c.c4 < prev_total);
            prev_total = c.p4 + c.c4;
        }
        for (count evals : stats.evaluations_per_step) {
            CHECK(evals <= n * (n - 1) / 2);
        }
    }
}

TEST_CASE("bst refinement never worsens the greedy result") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = test::random_graph(12, 0.3, seed + 19);
        NgOptions plain;
        plain.use_bst = false;
        NgOptions refined;
        refined.use_bst = true;
        refined.revert_depth = 5;
        EditSet a = ng_greedy(g, plain);
        EditSet b = ng_greedy(g, refined);
        CHECK(b.size() <= a.size());
        CHECK(is_quasi_threshold(apply_edits(g, b)));
    }
}

TEST_CASE("freeze flag prevents re-editing pairs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = test::random_graph(12, 0.3, seed + 3);
        NgOptions opts;
        opts.use_bst = false;
        opts.freeze_edited = true;
        EditSet edits = ng_greedy(g, opts);
        std::set<std::uint64_t> seen;
        for (const Edit& e : edits) {
            CHECK(seen.insert(pair_key(e.u, e.v)).second);
        }
        CHECK(is_quasi_threshold(apply_edits(g, edits)));
    }
}
