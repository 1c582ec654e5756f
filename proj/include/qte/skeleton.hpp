#ifndef QTE_SKELETON_HPP
#define QTE_SKELETON_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qte/common.hpp"
#include "qte/graph.hpp"

namespace qte {

/**
 * Rooted forest given by a parent assignment; `none` marks roots (equivalently
 * children of the virtual root). The transitive ancestor-descendant closure of
 * the forest defines a quasi-threshold graph.
 */
struct SkeletonForest {
    std::vector<node> parent;
    std::vector<count> depth;  // roots have depth 0

    node size() const { return static_cast<node>(parent.size()); }
};

/// Forest where every node is a root (closure = empty graph).
SkeletonForest make_all_roots(node n);

/// Recomputes depths from the parent map. Throws std::domain_error on an
/// out-of-range parent or a parent cycle.
void recompute_depths(SkeletonForest& f);

/// The quasi-threshold graph defined by f: edge {u, v} iff one is a proper
/// ancestor of the other. Throws std::domain_error on an invalid forest.
Graph closure_of_forest(const SkeletonForest& f);

/// Text format: one line per node, "node parent depth", parent -1 for roots.
void write_skeleton(const SkeletonForest& f, std::ostream& out);
void write_skeleton_file(const SkeletonForest& f, const std::string& path);
SkeletonForest read_skeleton(std::istream& in);
SkeletonForest read_skeleton_file(const std::string& path);

} // namespace qte

#endif // QTE_SKELETON_HPP
