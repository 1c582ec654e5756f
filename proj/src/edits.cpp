#include "qte/edits.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qte {

bool operator==(const Edit& a, const Edit& b) {
    return a.kind == b.kind && pair_key(a.u, a.v) == pair_key(b.u, b.v);
}

Graph apply_edits(const Graph& g, const EditSet& edits) {
    node n = g.node_count();
    for (const Edit& e : edits) {
        n = std::max({n, e.u + 1, e.v + 1});
    }
    std::vector<std::vector<node>> adj(n);
    for (node u = 0; u < g.node_count(); ++u) adj[u] = g.neighbors(u);

    auto has = [&](node u, node v) {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    };
    for (const Edit& e : edits) {
        if (e.u == e.v) throw std::domain_error("edit with equal endpoints");
        if (e.kind == EditKind::insert) {
            if (has(e.u, e.v)) throw std::domain_error("insert edit targets an existing edge");
            adj[e.u].insert(std::upper_bound(adj[e.u].begin(), adj[e.u].end(), e.v), e.v);
            adj[e.v].insert(std::upper_bound(adj[e.v].begin(), adj[e.v].end(), e.u), e.u);
        } else {
            if (!has(e.u, e.v)) throw std::domain_error("remove edit targets a non-edge");
            adj[e.u].erase(std::lower_bound(adj[e.u].begin(), adj[e.u].end(), e.v));
            adj[e.v].erase(std::lower_bound(adj[e.v].begin(), adj[e.v].end(), e.u));
        }
    }

    std::vector<std::pair<node, node>> edges;
    for (node u = 0; u < n; ++u) {
        for (node v : adj[u]) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

EditSet edits_from_skeleton(const Graph& g, const SkeletonForest& f) {
    if (f.size() != g.node_count()) {
        throw std::invalid_argument("skeleton size does not match graph");
    }
    SkeletonForest checked = f;
    recompute_depths(checked);

    EditSet edits;
    // deletions: edges of g whose endpoints are not in ancestor relation
    for (node u = 0; u < g.node_count(); ++u) {
        for (node v : g.neighbors(u)) {
            if (v <= u) continue;
            node a = u, b = v;
            if (checked.depth[a] < checked.depth[b]) std::swap(a, b);
            while (checked.depth[a] > checked.depth[b]) a = checked.parent[a];
            if (a != b) edits.push_back({EditKind::remove, u, v});
        }
    }
    // insertions: ancestor pairs missing from g, streamed per node
    for (node u = 0; u < g.node_count(); ++u) {
        for (node a = checked.parent[u]; a != none; a = checked.parent[a]) {
            if (!g.has_edge(u, a)) {
                edits.push_back({EditKind::insert, std::min(u, a), std::max(u, a)});
            }
        }
    }
    return edits;
}

void write_edit_list(const EditSet& edits, std::ostream& out) {
    for (const Edit& e : edits) {
        out << (e.kind == EditKind::insert ? '+' : '-') << ' ' << e.u << ' ' << e.v << '\n';
    }
}

void write_edit_list_file(const EditSet& edits, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edit_list(edits, out);
}

EditSet read_edit_list(std::istream& in) {
    EditSet edits;
    std::string line;
    count line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string sign;
        if (!(ls >> sign)) continue;
        if (sign == "#" || sign == "%") continue;
        long long u = -1, v = -1;
        if ((sign != "+" && sign != "-") || !(ls >> u >> v) || u < 0 || v < 0) {
            throw parse_error("edit line " + std::to_string(line_no) + ": expected '+ u v' or '- u v'");
        }
        edits.push_back({sign == "+" ? EditKind::insert : EditKind::remove,
                         static_cast<node>(u), static_cast<node>(v)});
    }
    return edits;
}

EditSet read_edit_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edit_list(in);
}

} // namespace qte
