#ifndef QTE_GRAPH_HPP
#define QTE_GRAPH_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qte/common.hpp"

namespace qte {

/**
 * Simple undirected graph over dense 0-based node ids.
 *
 * Adjacency lists are kept sorted, which gives O(log d) edge queries and
 * linear-time neighborhood intersections. Instances are immutable after
 * construction and safe to read from multiple threads.
 */
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n nodes. Duplicate edges and self-loops are dropped.
    /// Endpoints must be < n.
    Graph(node n, const std::vector<std::pair<node, node>>& edges);

    node node_count() const { return static_cast<node>(adj_.size()); }
    count edge_count() const { return m_; }

    node degree(node u) const { return static_cast<node>(adj_[u].size()); }
    node max_degree() const;

    const std::vector<node>& neighbors(node u) const { return adj_[u]; }
    const std::vector<std::vector<node>>& adjacency() const { return adj_; }

    bool has_edge(node u, node v) const;

    /// Edges as canonical (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<node, node>> edges() const;

private:
    std::vector<std::vector<node>> adj_;
    count m_ = 0;
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Reads an edge list: one "u v" pair per line, '#' or '%' starts a comment.
 * Ids are used verbatim; gaps become isolated nodes. A comment of the form
 * "# nodes N" raises the node count to at least N (the writer emits it when
 * trailing isolated nodes would otherwise be lost).
 */
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// One "u v" per line, u < v, ascending.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

/// Relabels nodes by a uniformly random permutation drawn from `seed`.
/// Returns the permuted graph and the mapping old id -> new id.
std::pair<Graph, std::vector<node>> permute_nodes(const Graph& g, std::uint64_t seed);

} // namespace qte

#endif // QTE_GRAPH_HPP
