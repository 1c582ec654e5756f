#include "qte/recognition.hpp"

#include <algorithm>
#include <cassert>

namespace qte {

namespace {

constexpr count not_processed = std::numeric_limits<count>::max();

bool adj_has_edge(const std::vector<std::vector<node>>& adj, node u, node v) {
    const auto& nbrs = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    node target = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

} // namespace

template <bool BuildResult>
bool Recognizer::run_impl(node n, const std::vector<std::vector<node>>& adj,
                          SkeletonForest* forest_out, Certificate* cert_out) {
    // bucket sort by decreasing degree; within a bucket ids stay ascending
    node max_deg = 0;
    for (node u = 0; u < n; ++u) {
        max_deg = std::max<node>(max_deg, static_cast<node>(adj[u].size()));
    }
    bucket_start_.assign(max_deg + 2, 0);
    for (node u = 0; u < n; ++u) {
        ++bucket_start_[max_deg - adj[u].size()];
    }
    node acc = 0;
    for (auto& b : bucket_start_) {
        node c = b;
        b = acc;
        acc += c;
    }
    order_.resize(n);
    for (node u = 0; u < n; ++u) {
        order_[bucket_start_[max_deg - adj[u].size()]++] = u;
    }

    parent_.assign(n, none);
    rank_.assign(n, not_processed);

    auto rank_of = [&](node p) -> std::int64_t {
        // the virtual root counts as processed before everything
        return p == none ? -1 : static_cast<std::int64_t>(rank_[p]);
    };

    for (count step = 0; step < n; ++step) {
        const node u = order_[step];
        rank_[u] = step;
        for (node v : adj[u]) {
            if (rank_[v] != not_processed) continue;
            if (parent_[u] == parent_[v]) {
                parent_[v] = u;
                continue;
            }
            if (!BuildResult) return false;

            // p(u) != p(v): extract the induced P4/C4. Let c be whichever of
            // the two parents was fixed first and b its child in {u, v}; then
            // (a, b, c) is a chain with a !~ c, and some x in N(c) \ N(b)
            // closes it to a P4 or C4.
            node a, b, c;
            if (rank_of(parent_[v]) < rank_of(parent_[u])) {
                a = v;
                b = u;
                c = parent_[u];
            } else {
                a = u;
                b = v;
                c = parent_[v];
            }
            assert(c != none);

            mark_.assign(n, 0);
            mark_[b] = 1;
            for (node w : adj[b]) mark_[w] = 1;
            node x = none;
            for (node w : adj[c]) {
                if (!mark_[w]) {
                    x = w;
                    break;
                }
            }
            assert(x != none);

            cert_out->kind = adj_has_edge(adj, a, x) ? CertificateKind::c4 : CertificateKind::p4;
            cert_out->nodes = {a, b, c, x};
            return false;
        }
    }

    if (BuildResult) {
        forest_out->parent = parent_;
        forest_out->depth.assign(n, 0);
        for (node u : order_) {
            if (parent_[u] != none) {
                forest_out->depth[u] = forest_out->depth[parent_[u]] + 1;
            }
        }
    }
    return true;
}

RecognitionResult Recognizer::run(node n, const std::vector<std::vector<node>>& adj) {
    SkeletonForest forest;
    Certificate cert;
    if (run_impl<true>(n, adj, &forest, &cert)) {
        return forest;
    }
    return cert;
}

RecognitionResult Recognizer::run(const Graph& g) {
    return run(g.node_count(), g.adjacency());
}

bool Recognizer::accepts(node n, const std::vector<std::vector<node>>& adj) {
    return run_impl<false>(n, adj, nullptr, nullptr);
}

RecognitionResult recognize(const Graph& g) {
    Recognizer r;
    return r.run(g);
}

bool is_quasi_threshold(const Graph& g) {
    Recognizer r;
    return r.accepts(g.node_count(), g.adjacency());
}

bool verify_certificate(const Graph& g, const Certificate& c) {
    const auto& q = c.nodes;
    for (int i = 0; i < 4; ++i) {
        if (q[i] >= g.node_count()) return false;
        for (int j = i + 1; j < 4; ++j) {
            if (q[i] == q[j]) return false;
        }
    }
    const bool ab = g.has_edge(q[0], q[1]);
    const bool bc = g.has_edge(q[1], q[2]);
    const bool cd = g.has_edge(q[2], q[3]);
    const bool ac = g.has_edge(q[0], q[2]);
    const bool bd = g.has_edge(q[1], q[3]);
    const bool ad = g.has_edge(q[0], q[3]);
    if (c.kind == CertificateKind::p4) {
        return ab && bc && cd && !ac && !bd && !ad;
    }
    return ab && bc && cd && ad && !ac && !bd;
}

} // namespace qte
