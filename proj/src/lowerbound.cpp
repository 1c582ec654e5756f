#include "qte/lowerbound.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "qte/triangles.hpp"

namespace qte {

namespace {

/// Deletable adjacency with maintained per-edge triangle counters.
struct Workspace {
    std::vector<std::vector<node>> adj;
    std::vector<bool> alive;
    std::unordered_map<std::uint64_t, std::uint32_t> tri;
    count removals = 0;

    explicit Workspace(const Graph& g)
        : adj(g.adjacency()), alive(g.node_count(), true) {
        TriangleCounts t = count_triangles(g);
        tri.reserve(g.edge_count() * 2);
        for (node u = 0; u < g.node_count(); ++u) {
            for (node v : adj[u]) {
                if (u < v) tri.emplace(pair_key(u, v), t.at(u, v));
            }
        }
    }

    node degree(node u) const { return static_cast<node>(adj[u].size()); }

    std::uint32_t triangles(node u, node v) const {
        auto it = tri.find(pair_key(u, v));
        assert(it != tri.end());
        return it->second;
    }

    count pc(node u, node v) const {
        const count t = triangles(u, v);
        return (degree(u) - 1 - t) * (degree(v) - 1 - t);
    }

    // trivial update rule: removing {u, v} enumerates its triangles and
    // decrements the two partner edges
    void remove_edge(node u, node v) {
        const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
        const node other = adj[u].size() <= adj[v].size() ? v : u;
        for (node w : a) {
            if (w == other) continue;
            if (std::binary_search(adj[other].begin(), adj[other].end(), w)) {
                --tri[pair_key(u, w)];
                --tri[pair_key(v, w)];
            }
        }
        tri.erase(pair_key(u, v));
        adj[u].erase(std::lower_bound(adj[u].begin(), adj[u].end(), v));
        adj[v].erase(std::lower_bound(adj[v].begin(), adj[v].end(), u));
    }

    void remove_node(node u) {
        while (!adj[u].empty()) {
            remove_edge(u, adj[u].back());
        }
        alive[u] = false;
        ++removals;
        if (removals % 1000 == 0) spot_check();
    }

    // recompute triangle counts of residual edges by neighborhood
    // intersection and compare with the maintained counters; strided to
    // roughly 1000 edges per check
    void spot_check() const {
        count stride = std::max<count>(1, tri.size() / 1000);
        count index = 0;
        for (node u = 0; u < adj.size(); ++u) {
            for (node v : adj[u]) {
                if (u >= v || index++ % stride != 0) continue;
                count fresh = 0;
                const auto& smaller = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
                const auto& larger = adj[u].size() <= adj[v].size() ? adj[v] : adj[u];
                for (node w : smaller) {
                    if (std::binary_search(larger.begin(), larger.end(), w)) ++fresh;
                }
                if (fresh != triangles(u, v)) {
                    throw std::logic_error("maintained triangle counters diverged");
                }
            }
        }
    }
};

} // namespace

BoundResult lower_bound(const Graph& g, std::uint64_t seed, bool resort) {
    const node n = g.node_count();

    // ascending initial degree; ties broken by a seeded shuffle
    std::vector<node> order(n);
    for (node u = 0; u < n; ++u) order[u] = u;
    Rng rng(seed);
    rng.shuffle(order);
    std::stable_sort(order.begin(), order.end(), [&](node a, node b) {
        return g.degree(a) < g.degree(b);
    });

    Workspace ws(g);
    BoundResult result;

    auto visit = [&](node u) {
        if (!ws.alive[u] || ws.adj[u].empty()) return;
        node best = none;
        for (node v : ws.adj[u]) {
            if (ws.pc(u, v) == 0) continue;
            if (best == none || ws.degree(v) < ws.degree(best)) best = v;
        }
        if (best == none) return;
        result.removed_pairs.emplace_back(u, best);
        ++result.bound;
        ws.remove_node(u);
        ws.remove_node(best);
    };

    if (!resort) {
        for (node u : order) visit(u);
        return result;
    }

    // alternative order: always take a live node of minimal current degree.
    // Lazy min-heap keyed by (degree, seeded tie rank); stale entries are
    // revalidated on pop and re-pushed with their current degree.
    std::vector<count> tie_rank(n);
    for (node i = 0; i < n; ++i) tie_rank[order[i]] = i;
    using Entry = std::tuple<node, count, node>;  // (degree, tie rank, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (node u = 0; u < n; ++u) heap.emplace(ws.degree(u), tie_rank[u], u);
    while (!heap.empty()) {
        auto [d, r, u] = heap.top();
        heap.pop();
        if (!ws.alive[u]) continue;
        if (ws.degree(u) != d) {
            heap.emplace(ws.degree(u), r, u);
            continue;
        }
        visit(u);
    }
    return result;
}

} // namespace qte
