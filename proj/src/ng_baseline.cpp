#include "qte/ng_baseline.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "qte/exact.hpp"
#include "qte/recognition.hpp"

namespace qte {

namespace {

// neighborhood marks relative to an edited pair {u, v}
enum : unsigned char { m_none = 0, m_u = 1, m_v = 2, m_common = 3 };

struct PatternFlags {
    std::int8_t p4 = 0;
    std::int8_t c4 = 0;
};

/// Induced type of the 4-node graph {u, v, x, y} where x has mark a, y has
/// mark b, and the xy / uv edges are given.
PatternFlags classify(unsigned a, unsigned b, bool xy, bool uv) {
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    auto add = [&](int s, int t) {
        ++deg[s];
        ++deg[t];
        ++edges;
    };
    if (uv) add(0, 1);
    if (a & m_u) add(0, 2);
    if (a & m_v) add(1, 2);
    if (b & m_u) add(0, 3);
    if (b & m_v) add(1, 3);
    if (xy) add(2, 3);

    PatternFlags f;
    if (edges == 3) {
        int d1 = 0, d2 = 0;
        for (int d : deg) {
            if (d == 1) ++d1;
            if (d == 2) ++d2;
        }
        if (d1 == 2 && d2 == 2) f.p4 = 1;  // 3 edges with degrees {1,1,2,2} is a path
    } else if (edges == 4) {
        if (deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2) f.c4 = 1;
    }
    return f;
}

struct DeltaTables {
    // [mark x][mark y][xy edge] -> count change caused by inserting {u, v}
    std::int8_t p4[4][4][2];
    std::int8_t c4[4][4][2];

    DeltaTables() {
        for (unsigned a = 0; a < 4; ++a) {
            for (unsigned b = 0; b < 4; ++b) {
                for (int xy = 0; xy < 2; ++xy) {
                    PatternFlags before = classify(a, b, xy, false);
                    PatternFlags after = classify(a, b, xy, true);
                    p4[a][b][xy] = static_cast<std::int8_t>(after.p4 - before.p4);
                    c4[a][b][xy] = static_cast<std::int8_t>(after.c4 - before.c4);
                }
            }
        }
    }
};

const DeltaTables& tables() {
    static const DeltaTables t;
    return t;
}

using Adjacency = std::vector<std::vector<node>>;

bool adj_has(const Adjacency& adj, node u, node v) {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

/// Reusable scratch for the counting passes.
struct CountScratch {
    std::vector<unsigned char> mark;
    std::vector<node> marked;

    explicit CountScratch(node n) : mark(n, m_none) {}

    void set_marks(const Adjacency& adj, node u, node v) {
        marked.clear();
        for (node w : adj[u]) {
            if (w == v) continue;
            mark[w] = m_u;
            marked.push_back(w);
        }
        for (node w : adj[v]) {
            if (w == u) continue;
            if (mark[w] == m_u) {
                mark[w] = m_common;
            } else {
                mark[w] = m_v;
                marked.push_back(w);
            }
        }
    }

    void clear_marks() {
        for (node w : marked) mark[w] = m_none;
        marked.clear();
    }
};

SubgraphCounts count_impl(const Adjacency& adj, CountScratch& scratch) {
    SubgraphCounts totals;
    count c4_sum = 0;
    const node n = static_cast<node>(adj.size());
    for (node u = 0; u < n; ++u) {
        for (node v : adj[u]) {
            if (v <= u) continue;
            scratch.set_marks(adj, u, v);
            count exu = 0, exv = 0;
            for (node w : scratch.marked) {
                if (scratch.mark[w] == m_u) ++exu;
                if (scratch.mark[w] == m_v) ++exv;
            }
            count c4_edge = 0;
            for (node x : scratch.marked) {
                if (scratch.mark[x] != m_u) continue;
                for (node y : adj[x]) {
                    if (y != u && y != v && scratch.mark[y] == m_v) ++c4_edge;
                }
            }
            totals.p4 += exu * exv - c4_edge;
            c4_sum += c4_edge;
            scratch.clear_marks();
        }
    }
    totals.c4 = c4_sum / 4;
    return totals;
}

CountDelta delta_impl(const Adjacency& adj, node u, node v, bool inserting,
                      CountScratch& scratch) {
    const DeltaTables& t = tables();
    scratch.set_marks(adj, u, v);

    count cnt[4] = {0, 0, 0, 0};
    for (node w : scratch.marked) ++cnt[scratch.mark[w]];

    // ordered (mark(x), mark(y)) tallies over edges incident to marked nodes
    count ord[4][4] = {};
    for (node x : scratch.marked) {
        const unsigned a = scratch.mark[x];
        for (node y : adj[x]) {
            if (y == u || y == v) continue;
            ++ord[a][scratch.mark[y]];
        }
    }
    scratch.clear_marks();

    std::int64_t dp4 = 0, dc4 = 0;
    for (unsigned a = 1; a < 4; ++a) {
        // pairs of one marked and one outside node: only edges matter
        dp4 += static_cast<std::int64_t>(ord[a][m_none]) * t.p4[a][m_none][1];
        dc4 += static_cast<std::int64_t>(ord[a][m_none]) * t.c4[a][m_none][1];
        for (unsigned b = a; b < 4; ++b) {
            const count edge_pairs = a == b ? ord[a][a] / 2 : ord[a][b];
            const count all_pairs = a == b ? cnt[a] * (cnt[a] - 1) / 2 : cnt[a] * cnt[b];
            const count nonedge_pairs = all_pairs - edge_pairs;
            dp4 += static_cast<std::int64_t>(edge_pairs) * t.p4[a][b][1];
            dc4 += static_cast<std::int64_t>(edge_pairs) * t.c4[a][b][1];
            dp4 += static_cast<std::int64_t>(nonedge_pairs) * t.p4[a][b][0];
            dc4 += static_cast<std::int64_t>(nonedge_pairs) * t.c4[a][b][0];
        }
    }
    if (!inserting) {
        dp4 = -dp4;
        dc4 = -dc4;
    }
    return {dp4, dc4};
}

void toggle(Adjacency& adj, const Edit& e) {
    auto& au = adj[e.u];
    auto& av = adj[e.v];
    if (e.kind == EditKind::insert) {
        au.insert(std::upper_bound(au.begin(), au.end(), e.v), e.v);
        av.insert(std::upper_bound(av.begin(), av.end(), e.u), e.u);
    } else {
        au.erase(std::lower_bound(au.begin(), au.end(), e.v));
        av.erase(std::lower_bound(av.begin(), av.end(), e.u));
    }
}

Graph to_graph(const Adjacency& adj) {
    std::vector<std::pair<node, node>> edges;
    for (node u = 0; u < adj.size(); ++u) {
        for (node v : adj[u]) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return Graph(static_cast<node>(adj.size()), edges);
}

} // namespace

SubgraphCounts count_p4_c4(const Graph& g) {
    CountScratch scratch(g.node_count());
    return count_impl(g.adjacency(), scratch);
}

CountDelta delta_p4_c4(const Graph& g, const Edit& e) {
    if (e.u >= g.node_count() || e.v >= g.node_count() || e.u == e.v) {
        throw std::domain_error("delta_p4_c4: invalid edit endpoints");
    }
    const bool inserting = e.kind == EditKind::insert;
    if (inserting == g.has_edge(e.u, e.v)) {
        throw std::domain_error("delta_p4_c4: edit not applicable");
    }
    CountScratch scratch(g.node_count());
    return delta_impl(g.adjacency(), e.u, e.v, inserting, scratch);
}

EditSet ng_greedy(const Graph& g, const NgOptions& opts, NgStats* stats) {
    const node n = g.node_count();
    Adjacency adj = g.adjacency();
    CountScratch scratch(n);
    SubgraphCounts counts = count_impl(adj, scratch);

    EditSet edits;
    std::unordered_set<std::uint64_t> edited;
    const count edit_cap = 2 * static_cast<count>(n) * n + 16;

    while (counts.p4 + counts.c4 > 0) {
        bool have_best = false;
        Edit best{};
        CountDelta best_delta{};
        std::int64_t best_total = 0;
        count evaluations = 0;

        for (node u = 0; u < n; ++u) {
            for (node v = u + 1; v < n; ++v) {
                if (opts.freeze_edited && edited.count(pair_key(u, v))) continue;
                const bool inserting = !adj_has(adj, u, v);
                CountDelta d = delta_impl(adj, u, v, inserting, scratch);
                ++evaluations;
                const std::int64_t total = d.p4 + d.c4;
                const Edit e{inserting ? EditKind::insert : EditKind::remove, u, v};
                const bool take =
                    !have_best || total < best_total ||
                    (total == best_total && e.kind == EditKind::remove &&
                     best.kind == EditKind::insert);
                if (take) {
                    have_best = true;
                    best = e;
                    best_delta = d;
                    best_total = total;
                }
            }
        }
        if (stats) stats->evaluations_per_step.push_back(evaluations);

        if (!have_best || best_total >= 0) {
            // No single edit strictly improves the counter. Destroy one
            // concrete witness and keep going; the cap guards against cycling.
            Recognizer recognizer;
            RecognitionResult res = recognizer.run(n, adj);
            const Certificate cert = std::get<Certificate>(res);
            bool applied = false;
            for (const Edit& e : branch_edits(cert)) {
                if (opts.freeze_edited && edited.count(pair_key(e.u, e.v))) continue;
                best = e;
                best_delta = delta_impl(adj, e.u, e.v, e.kind == EditKind::insert, scratch);
                applied = true;
                break;
            }
            if (!applied) {
                throw std::runtime_error("ng_greedy: all witness edits frozen");
            }
        }

        toggle(adj, best);
        edited.insert(pair_key(best.u, best.v));
        edits.push_back(best);
        counts.p4 = static_cast<count>(static_cast<std::int64_t>(counts.p4) + best_delta.p4);
        counts.c4 = static_cast<count>(static_cast<std::int64_t>(counts.c4) + best_delta.c4);
        if (stats) stats->counts_trace.push_back(counts);
        if (edits.size() > edit_cap) {
            throw std::runtime_error("ng_greedy: edit cap exceeded");
        }
    }

    if (opts.use_bst) {
        while (true) {
            const count tail = std::min<count>(opts.revert_depth, edits.size());
            if (tail == 0) break;
            for (count i = 0; i < tail; ++i) {
                const Edit& e = edits[edits.size() - 1 - i];
                toggle(adj, {e.kind == EditKind::insert ? EditKind::remove : EditKind::insert,
                             e.u, e.v});
            }
            auto refined = bst_solve(to_graph(adj), tail - 1);
            if (refined) {
                edits.resize(edits.size() - tail);
                for (const Edit& e : *refined) {
                    toggle(adj, e);
                    edits.push_back(e);
                }
            } else {
                // no strictly better completion: re-apply and stop
                for (count i = tail; i > 0; --i) {
                    toggle(adj, edits[edits.size() - i]);
                }
                break;
            }
        }
    }
    return edits;
}

} // namespace qte
