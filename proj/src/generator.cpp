#include "qte/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace qte {

std::pair<Graph, SkeletonForest> generate_qt(const GenSpec& spec) {
    const node n = spec.n;
    if (n < spec.size_min) {
        throw std::domain_error("generate_qt: n is below the minimum component size");
    }
    Rng rng(spec.seed);

    const count size_min = spec.size_min;
    const count size_max = std::max<count>(
        size_min, static_cast<count>(spec.size_max_fraction * static_cast<double>(n)));

    // inverse-CDF sampling of component sizes over [size_min, size_max]
    std::vector<double> cumulative;
    cumulative.reserve(size_max - size_min + 1);
    double acc = 0.0;
    for (count s = size_min; s <= size_max; ++s) {
        acc += std::pow(static_cast<double>(s), spec.exponent);
        cumulative.push_back(acc);
    }
    auto draw_size = [&]() -> count {
        const double x = rng.unit() * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
        if (it == cumulative.end()) --it;
        return size_min + static_cast<count>(it - cumulative.begin());
    };

    SkeletonForest f = make_all_roots(n);
    node next_id = 0;
    while (next_id < n) {
        count size = std::min<count>(draw_size(), n - next_id);  // last component truncated
        // random recursive tree: local node v picks a parent among its predecessors
        for (count v = 1; v < size; ++v) {
            f.parent[next_id + v] = next_id + static_cast<node>(rng.below(v));
        }
        next_id += static_cast<node>(size);
    }
    recompute_depths(f);
    return {closure_of_forest(f), std::move(f)};
}

std::pair<Graph, EditSet> plant_edits(const Graph& g, count k, std::uint64_t seed,
                                      double insert_fraction) {
    const node n = g.node_count();
    const count inserts = static_cast<count>(std::floor(insert_fraction * static_cast<double>(k)));
    const count deletes = k - inserts;

    const count all_pairs = static_cast<count>(n) * (n - 1) / 2;
    if (inserts > all_pairs - g.edge_count() || deletes > g.edge_count()) {
        throw std::domain_error("plant_edits: not enough edges/non-edges for the requested split");
    }

    Rng rng(seed);
    EditSet edits;
    edits.reserve(k);

    // insertions: rejection-sample distinct non-edges
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(inserts * 2);
    while (chosen.size() < inserts) {
        node u = static_cast<node>(rng.below(n));
        node v = static_cast<node>(rng.below(n));
        if (u == v || g.has_edge(u, v)) continue;
        if (chosen.insert(pair_key(u, v)).second) {
            edits.push_back({EditKind::insert, std::min(u, v), std::max(u, v)});
        }
    }

    // deletions: sample distinct original edge indices
    if (deletes > 0) {
        auto edges = g.edges();
        std::unordered_set<count> picked;
        picked.reserve(deletes * 2);
        while (picked.size() < deletes) {
            count i = rng.below(edges.size());
            if (picked.insert(i).second) {
                edits.push_back({EditKind::remove, edges[i].first, edges[i].second});
            }
        }
    }

    return {apply_edits(g, edits), std::move(edits)};
}

} // namespace qte
