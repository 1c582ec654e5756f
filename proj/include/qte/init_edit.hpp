#ifndef QTE_INIT_EDIT_HPP
#define QTE_INIT_EDIT_HPP

#include "qte/common.hpp"
#include "qte/graph.hpp"
#include "qte/skeleton.hpp"
#include "qte/triangles.hpp"

namespace qte {

/**
 * Initialization heuristic: builds a skeleton forest for an arbitrary graph,
 * processing nodes by descending degree. A processed node collects a
 * preliminary child set among its unprocessed neighbors (kept if parents
 * match, or if the pseudo-counter and triangle/depth conditions allow it,
 * with non-strict comparisons), the preliminary children elect the node's new
 * parent by majority, and the final child set is re-selected with strict
 * comparisons. The input graph is never modified.
 *
 * t must be count_triangles(g). Depths of the returned forest are the true
 * tree depths recomputed from the final parent map.
 */
SkeletonForest initial_skeleton(const Graph& g, const TriangleCounts& t);

/// |E(g) symmetric-difference E(closure(f))|, computed without materializing
/// the closure. Throws std::domain_error on an invalid forest.
count count_edits(const Graph& g, const SkeletonForest& f);

} // namespace qte

#endif // QTE_INIT_EDIT_HPP
