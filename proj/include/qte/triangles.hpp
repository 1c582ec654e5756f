#ifndef QTE_TRIANGLES_HPP
#define QTE_TRIANGLES_HPP

#include <vector>

#include "qte/common.hpp"
#include "qte/graph.hpp"

namespace qte {

/**
 * Per-edge triangle counts of a graph, stored in a flat array indexed by a
 * canonical edge id (rank of the edge in the u < v ordering). Holds a pointer
 * to the graph it was computed for; the graph must outlive the counts.
 */
class TriangleCounts {
public:
    TriangleCounts() = default;

    /// Count of triangles containing edge {u, v}. Throws std::domain_error
    /// if {u, v} is not an edge.
    std::uint32_t at(node u, node v) const { return counts_[edge_id(u, v)]; }

    /// Sum over all edges; equals 3 times the number of triangles.
    count total() const;

    count edge_count() const { return counts_.size(); }

    friend TriangleCounts count_triangles(const Graph& g);

private:
    count edge_id(node u, node v) const;

    const Graph* g_ = nullptr;
    std::vector<std::uint32_t> counts_;   // one slot per edge, canonical order
    std::vector<count> up_offset_;        // per node: id of its first up-edge
    std::vector<node> up_begin_;          // per node: index in adj of first neighbor > node
};

/// Exact per-edge triangle counts via neighborhood intersection in
/// degree-ordered direction (each triangle is listed once).
TriangleCounts count_triangles(const Graph& g);

/// Value used for pinned/undefined pseudo-counter entries.
inline constexpr count pc_infinity = std::numeric_limits<count>::max();

/// Pseudo-C4-P4 counter of an edge {x, y}:
///   (d(x) - 1 - t({x,y})) * (d(y) - 1 - t({x,y}))
/// which equals the number of C4 containing the edge plus the number of P4
/// having it as central edge. Throws std::domain_error if {x, y} is no edge.
count pseudo_counter(const Graph& g, const TriangleCounts& t, node x, node y);

} // namespace qte

#endif // QTE_TRIANGLES_HPP
