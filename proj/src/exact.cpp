#include "qte/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace qte {

std::array<Edit, 6> branch_edits(const Certificate& c) {
    const node a = c.nodes[0], b = c.nodes[1], x = c.nodes[2], d = c.nodes[3];
    if (c.kind == CertificateKind::p4) {
        return {{{EditKind::remove, a, b},
                 {EditKind::remove, b, x},
                 {EditKind::remove, x, d},
                 {EditKind::insert, a, x},
                 {EditKind::insert, b, d},
                 {EditKind::insert, a, d}}};
    }
    return {{{EditKind::remove, a, b},
             {EditKind::remove, b, x},
             {EditKind::remove, x, d},
             {EditKind::remove, d, a},
             {EditKind::insert, a, x},
             {EditKind::insert, b, d}}};
}

namespace {

struct BstSearch {
    node n;
    std::vector<std::vector<node>> adj;
    Recognizer recognizer;
    std::unordered_set<std::uint64_t> blocked;
    EditSet current;
    EditSet solution;

    explicit BstSearch(const Graph& g) : n(g.node_count()), adj(g.adjacency()) {}

    void toggle(const Edit& e) {
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

    static Edit inverse(const Edit& e) {
        return {e.kind == EditKind::insert ? EditKind::remove : EditKind::insert, e.u, e.v};
    }

    bool dfs(count budget) {
        RecognitionResult res = recognizer.run(n, adj);
        if (std::holds_alternative<SkeletonForest>(res)) {
            solution = current;
            return true;
        }
        if (budget == 0) return false;

        const Certificate cert = std::get<Certificate>(res);
        for (const Edit& e : branch_edits(cert)) {
            const std::uint64_t key = pair_key(e.u, e.v);
            if (blocked.count(key)) continue;
            blocked.insert(key);
            toggle(e);
            current.push_back(e);
            if (dfs(budget - 1)) return true;
            current.pop_back();
            toggle(inverse(e));
            blocked.erase(key);
        }
        return false;
    }
};

} // namespace

std::optional<EditSet> bst_solve(const Graph& g, count k_max) {
    BstSearch search(g);
    for (count k = 0; k <= k_max; ++k) {
        if (search.dfs(k)) return search.solution;
    }
    return std::nullopt;
}

namespace {

/// All edge masks on `n` labeled nodes accepted by recognition, computed once
/// per n and cached.
const std::vector<bool>& accepted_masks(int n) {
    static std::vector<std::vector<bool>> cache(7);
    auto& accepted = cache[n];
    if (!accepted.empty()) return accepted;

    const int pairs = n * (n - 1) / 2;
    accepted.resize(std::size_t{1} << pairs);
    Recognizer recognizer;
    std::vector<std::vector<node>> adj(n);
    for (std::uint32_t mask = 0; mask < accepted.size(); ++mask) {
        for (auto& list : adj) list.clear();
        int bit = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++bit) {
                if (mask & (1u << bit)) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
            }
        }
        accepted[mask] = recognizer.accepts(n, adj);
    }
    return accepted;
}

} // namespace

count brute_force_optimum(const Graph& g) {
    const node n = g.node_count();
    if (n > 6) {
        throw std::domain_error("brute_force_optimum is limited to 6 nodes");
    }
    std::uint32_t g_mask = 0;
    int bit = 0;
    for (node i = 0; i < n; ++i) {
        for (node j = i + 1; j < n; ++j, ++bit) {
            if (g.has_edge(i, j)) g_mask |= 1u << bit;
        }
    }
    const auto& accepted = accepted_masks(static_cast<int>(n));
    count best = std::numeric_limits<count>::max();
    for (std::uint32_t mask = 0; mask < accepted.size(); ++mask) {
        if (accepted[mask]) {
            best = std::min<count>(best, std::popcount(mask ^ g_mask));
        }
    }
    return best;
}

} // namespace qte
