#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qte/generator.hpp"
#include "qte/recognition.hpp"
#include "test_util.hpp"

using namespace qte;

TEST_CASE("single node accepts as one root") {
    Graph g(1, {});
    auto res = recognize(g);
    REQUIRE(std::holds_alternative<SkeletonForest>(res));
    const auto& f = std::get<SkeletonForest>(res);
    CHECK(f.parent[0] == none);
    CHECK(f.depth[0] == 0);
}

TEST_CASE("path on four nodes is rejected with a P4 certificate in path order") {
    Graph g = test::path_graph(4);
    auto res = recognize(g);
    REQUIRE(std::holds_alternative<Certificate>(res));
    const auto& cert = std::get<Certificate>(res);
    CHECK(cert.kind == CertificateKind::p4);
    CHECK(verify_certificate(g, cert));
    CHECK(test::induced_pattern(g, cert.nodes[0], cert.nodes[1], cert.nodes[2],
                                cert.nodes[3]) == 1);
}

TEST_CASE("closure of fixed forests") {
    SkeletonForest all_roots = make_all_roots(5);
    CHECK(closure_of_forest(all_roots).edge_count() == 0);

    SkeletonForest star = make_all_roots(5);
    for (node u = 1; u < 5; ++u) star.parent[u] = 0;
    Graph sg = closure_of_forest(star);
    CHECK(sg.edge_count() == 4);
    for (node u = 1; u < 5; ++u) CHECK(sg.has_edge(0, u));

    SkeletonForest chain = make_all_roots(3);
    chain.parent[1] = 0;
    chain.parent[2] = 1;
    Graph cg = closure_of_forest(chain);
    CHECK(test::edge_set(cg) == test::edge_set(test::complete_graph(3)));

    SkeletonForest cyclic = make_all_roots(2);
    cyclic.parent[0] = 1;
    cyclic.parent[1] = 0;
    CHECK_THROWS_AS(closure_of_forest(cyclic), std::domain_error);
}

TEST_CASE("closure of a chain skeleton is recognized back as a chain") {
    SkeletonForest chain = make_all_roots(3);
    chain.parent[1] = 0;
    chain.parent[2] = 1;
    Graph k3 = closure_of_forest(chain);
    auto res = recognize(k3);
    REQUIRE(std::holds_alternative<SkeletonForest>(res));
    const auto& f = std::get<SkeletonForest>(res);
    // a 3-chain again: depths 0, 1, 2 in some order
    std::multiset<count> depths(f.depth.begin(), f.depth.end());
    CHECK(depths == std::multiset<count>{0, 1, 2});
    CHECK(test::edge_set(closure_of_forest(f)) == test::edge_set(k3));
}

TEST_CASE("verify_certificate checks the exact pattern") {
    Graph p4 = test::path_graph(4);
    CHECK(verify_certificate(p4, {CertificateKind::p4, {0, 1, 2, 3}}));
    CHECK_FALSE(verify_certificate(p4, {CertificateKind::c4, {0, 1, 2, 3}}));
    CHECK_FALSE(verify_certificate(p4, {CertificateKind::p4, {0, 1, 2, 2}}));

    Graph k4 = test::complete_graph(4);
    CHECK_FALSE(verify_certificate(k4, {CertificateKind::c4, {0, 1, 2, 3}}));
    CHECK_FALSE(verify_certificate(k4, {CertificateKind::p4, {0, 1, 2, 3}}));
}

TEST_CASE("recognition matches brute force on all graphs with up to 5 nodes") {
    for (node n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph g = test::graph_from_mask(n, mask);
            auto res = recognize(g);
            const bool accepted = std::holds_alternative<SkeletonForest>(res);
            CHECK(accepted == test::brute_is_quasi_threshold(g));
            if (accepted) {
                const auto& f = std::get<SkeletonForest>(res);
                CHECK(test::edge_set(closure_of_forest(f)) == test::edge_set(g));
                // degree monotonicity along the skeleton
                for (node u = 0; u < n; ++u) {
                    if (f.parent[u] != none) {
                        CHECK(g.degree(u) <= g.degree(f.parent[u]));
                    }
                }
            } else {
                CHECK(verify_certificate(g, std::get<Certificate>(res)));
            }
        }
    }
}

TEST_CASE("certificates of random rejected graphs verify") {
    count rejected = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Graph g = test::random_graph(12, 0.3, seed);
        auto res = recognize(g);
        if (std::holds_alternative<Certificate>(res)) {
            ++rejected;
            CHECK(verify_certificate(g, std::get<Certificate>(res)));
        }
    }
    CHECK(rejected > 250);  // nearly all such graphs are rejected
}

TEST_CASE("generated quasi-threshold graphs are accepted with matching closure") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenSpec spec;
        spec.n = 60;
        spec.seed = seed;
        auto [g, true_forest] = generate_qt(spec);
        auto res = recognize(g);
        REQUIRE(std::holds_alternative<SkeletonForest>(res));
        CHECK(test::edge_set(closure_of_forest(std::get<SkeletonForest>(res))) ==
              test::edge_set(g));
    }
}

TEST_CASE("skeleton text round-trip") {
    SkeletonForest f = make_all_roots(4);
    f.parent[1] = 0;
    f.parent[2] = 1;
    recompute_depths(f);
    std::ostringstream out;
    write_skeleton(f, out);
    CHECK(out.str() == "0 -1 0\n1 0 1\n2 1 2\n3 -1 0\n");
    std::istringstream in(out.str());
    SkeletonForest g = read_skeleton(in);
    CHECK(g.parent == f.parent);
    CHECK(g.depth == f.depth);
}
