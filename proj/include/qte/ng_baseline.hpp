#ifndef QTE_NG_BASELINE_HPP
#define QTE_NG_BASELINE_HPP

#include <vector>

#include "qte/common.hpp"
#include "qte/edits.hpp"
#include "qte/graph.hpp"

namespace qte {

struct SubgraphCounts {
    count p4 = 0;
    count c4 = 0;
};

struct CountDelta {
    std::int64_t p4 = 0;
    std::int64_t c4 = 0;
};

/**
 * Number of induced P4 and C4 subgraphs. Per edge, the product of the two
 * exclusive neighborhood sizes counts central-P4 plus C4 occurrences;
 * adjacencies between the exclusive sides separate the C4 share, whose total
 * is divided by 4.
 */
SubgraphCounts count_p4_c4(const Graph& g);

/// Change in (P4, C4) counts caused by applying the edit, in one O(m) pass
/// over the edited pair's neighborhood structure. Does not modify g. Throws
/// std::domain_error if the edit is not applicable.
CountDelta delta_p4_c4(const Graph& g, const Edit& e);

struct NgOptions {
    count revert_depth = 10;   // edits reverted before each BST refinement
    bool use_bst = true;
    bool freeze_edited = false;  // forbid re-editing a pair in the greedy loop
};

struct NgStats {
    std::vector<count> evaluations_per_step;   // candidate edits scored per greedy step
    std::vector<SubgraphCounts> counts_trace;  // counts after each applied edit
};

/**
 * Greedy baseline: repeatedly applies the single edit with the largest
 * decrease of p4 + c4 (ties: deletions before insertions, then lexicographic
 * pair) until no forbidden subgraph remains. With use_bst, the last
 * revert_depth edits are reverted and re-solved exactly, repeated while that
 * strictly improves the total.
 */
EditSet ng_greedy(const Graph& g, const NgOptions& opts = {}, NgStats* stats = nullptr);

} // namespace qte

#endif // QTE_NG_BASELINE_HPP
