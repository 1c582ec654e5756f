#include "qte/init_edit.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qte {

SkeletonForest initial_skeleton(const Graph& g, const TriangleCounts& t) {
    const node n = g.node_count();

    // descending degree, ties by ascending id (bucket sort)
    const node max_deg = g.max_degree();
    std::vector<std::vector<node>> buckets(max_deg + 1);
    for (node u = 0; u < n; ++u) buckets[g.degree(u)].push_back(u);
    std::vector<node> order;
    order.reserve(n);
    for (node d = max_deg + 1; d-- > 0;) {
        for (node u : buckets[d]) order.push_back(u);
    }

    std::vector<node> parent(n, none);
    std::vector<count> pass_depth(n, 0);  // adoption counter used by the keep predicate
    std::vector<bool> processed(n, false);
    std::unordered_set<std::uint64_t> pinned;  // pairs whose pseudo-counter is pinned to infinity

    auto pc = [&](node a, node b) -> count {
        if (a == none || b == none) return pc_infinity;
        if (!pinned.empty() && pinned.count(pair_key(a, b))) return pc_infinity;
        return pseudo_counter(g, t, a, b);
    };

    std::vector<node> prelim;
    std::unordered_map<node, count> votes;  // parent value -> frequency, none keyed as none

    for (node u : order) {
        processed[u] = true;

        // preliminary children: non-strict comparisons
        prelim.clear();
        for (node v : g.neighbors(u)) {
            if (processed[v]) continue;
            if (parent[u] == parent[v] ||
                (pc(u, v) <= pc(v, parent[v]) && pass_depth[v] <= t.at(u, v) + 1)) {
                prelim.push_back(v);
            }
        }

        // majority election of u's new parent; prefer the current parent on
        // ties, then the smallest id, with the forest root ordered last
        if (!prelim.empty()) {
            votes.clear();
            for (node v : prelim) ++votes[parent[v]];
            const node cur = parent[u];
            node elected = none;
            count best_votes = 0;
            bool first = true;
            for (auto [cand, c] : votes) {
                bool take;
                if (first) {
                    take = true;
                } else if (c != best_votes) {
                    take = c > best_votes;
                } else if (cand == cur || elected == cur) {
                    take = cand == cur;
                } else if (cand == none || elected == none) {
                    take = elected == none;
                } else {
                    take = cand < elected;
                }
                if (take) {
                    elected = cand;
                    best_votes = c;
                    first = false;
                }
            }
            if (elected != parent[u]) {
                parent[u] = elected;
                pass_depth[u] = 0;
                if (elected != none) pinned.insert(pair_key(u, elected));
            }
        }

        // final children: strict comparisons so u does not grab too many
        for (node v : g.neighbors(u)) {
            if (processed[v]) continue;
            if (parent[u] == parent[v] ||
                (pc(u, v) < pc(v, parent[v]) && pass_depth[v] < t.at(u, v) + 1)) {
                parent[v] = u;
                ++pass_depth[v];
            }
        }
    }

    SkeletonForest f;
    f.parent = std::move(parent);
    recompute_depths(f);
    return f;
}

count count_edits(const Graph& g, const SkeletonForest& f) {
    if (f.size() != g.node_count()) {
        throw std::domain_error("count_edits: forest size does not match graph");
    }
    SkeletonForest checked = f;
    recompute_depths(checked);  // validates parents and acyclicity

    count closure_size = 0;
    for (node u = 0; u < f.size(); ++u) closure_size += checked.depth[u];

    // edges of g whose endpoints are in ancestor relation: walk the deeper
    // endpoint upward
    count ancestor_edges = 0;
    for (node u = 0; u < g.node_count(); ++u) {
        for (node v : g.neighbors(u)) {
            if (v <= u) continue;
            node a = u, b = v;
            if (checked.depth[a] < checked.depth[b]) std::swap(a, b);
            while (checked.depth[a] > checked.depth[b]) a = checked.parent[a];
            if (a == b) ++ancestor_edges;
        }
    }

    const count inserts = closure_size - ancestor_edges;
    const count deletes = g.edge_count() - ancestor_edges;
    return inserts + deletes;
}

} // namespace qte
