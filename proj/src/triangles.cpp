#include "qte/triangles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qte {

count TriangleCounts::edge_id(node u, node v) const {
    if (u > v) std::swap(u, v);
    const auto& nbrs = g_->neighbors(u);
    auto first = nbrs.begin() + up_begin_[u];
    auto it = std::lower_bound(first, nbrs.end(), v);
    if (it == nbrs.end() || *it != v) {
        throw std::domain_error("triangle count queried for a non-edge");
    }
    return up_offset_[u] + static_cast<count>(it - first);
}

count TriangleCounts::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), count{0});
}

TriangleCounts count_triangles(const Graph& g) {
    const node n = g.node_count();

    TriangleCounts t;
    t.g_ = &g;
    t.up_begin_.resize(n);
    t.up_offset_.resize(n + 1);
    count id = 0;
    for (node u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
        t.up_begin_[u] = static_cast<node>(it - nbrs.begin());
        t.up_offset_[u] = id;
        id += static_cast<count>(nbrs.end() - it);
    }
    t.up_offset_[n] = id;
    t.counts_.assign(id, 0);

    // rank nodes by (degree, id); each edge is explored from its lower-ranked
    // endpoint so every triangle is found exactly once and the intersected
    // lists stay short
    std::vector<node> rank(n);
    {
        std::vector<node> order(n);
        for (node u = 0; u < n; ++u) order[u] = u;
        std::sort(order.begin(), order.end(), [&](node a, node b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
            return a < b;
        });
        for (node i = 0; i < n; ++i) rank[order[i]] = i;
    }

    std::vector<std::vector<node>> forward(n);
    for (node u = 0; u < n; ++u) {
        for (node v : g.neighbors(u)) {
            if (rank[u] < rank[v]) forward[u].push_back(v);
        }
        std::sort(forward[u].begin(), forward[u].end(),
                  [&](node a, node b) { return rank[a] < rank[b]; });
    }

    for (node u = 0; u < n; ++u) {
        for (node v : forward[u]) {
            auto iu = forward[u].begin();
            auto iv = forward[v].begin();
            while (iu != forward[u].end() && iv != forward[v].end()) {
                if (rank[*iu] < rank[*iv]) {
                    ++iu;
                } else if (rank[*iv] < rank[*iu]) {
                    ++iv;
                } else {
                    node w = *iu;
                    ++t.counts_[t.edge_id(u, v)];
                    ++t.counts_[t.edge_id(u, w)];
                    ++t.counts_[t.edge_id(v, w)];
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    return t;
}

count pseudo_counter(const Graph& g, const TriangleCounts& t, node x, node y) {
    if (!g.has_edge(x, y)) {
        throw std::domain_error("pseudo_counter: {x, y} is not an edge");
    }
    const count tc = t.at(x, y);
    const count a = g.degree(x) - 1 - tc;
    const count b = g.degree(y) - 1 - tc;
    return a * b;
}

} // namespace qte
