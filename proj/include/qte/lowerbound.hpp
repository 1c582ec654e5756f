#ifndef QTE_LOWERBOUND_HPP
#define QTE_LOWERBOUND_HPP

#include <utility>
#include <vector>

#include "qte/common.hpp"
#include "qte/graph.hpp"

namespace qte {

struct BoundResult {
    count bound = 0;
    std::vector<std::pair<node, node>> removed_pairs;
};

/**
 * Lower bound on the quasi-threshold edit distance by destroying node-disjoint
 * forbidden-subgraph witnesses.
 *
 * Nodes are visited by ascending initial degree (ties shuffled by `seed`).
 * For a live node u, a live neighbor v of minimal current degree with
 * pseudo-counter > 0 certifies a C4 through {u, v} or a P4 with {u, v}
 * central; both u and v are deleted and the bound grows by one. Triangle
 * counters are maintained by the trivial per-edge update, giving O(m) memory
 * and O(m * max_degree) worst-case deletion cost.
 *
 * The iteration keeps the initial order even though deletions shrink degrees;
 * the pseudo-counter itself is always evaluated against current degrees and
 * triangle counts. With `resort`, nodes are instead visited by minimal
 * current degree.
 */
BoundResult lower_bound(const Graph& g, std::uint64_t seed, bool resort = false);

} // namespace qte

#endif // QTE_LOWERBOUND_HPP
