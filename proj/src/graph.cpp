#include "qte/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qte {

Graph::Graph(node n, const std::vector<std::pair<node, node>>& edges) : adj_(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) continue;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m_ += nbrs.size();
    }
    m_ /= 2;
}

node Graph::max_degree() const {
    node d = 0;
    for (const auto& nbrs : adj_) {
        d = std::max<node>(d, static_cast<node>(nbrs.size()));
    }
    return d;
}

bool Graph::has_edge(node u, node v) const {
    if (u >= node_count() || v >= node_count() || u == v) return false;
    const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    node target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

std::vector<std::pair<node, node>> Graph::edges() const {
    std::vector<std::pair<node, node>> result;
    result.reserve(m_);
    for (node u = 0; u < node_count(); ++u) {
        for (node v : adj_[u]) {
            if (u < v) result.emplace_back(u, v);
        }
    }
    return result;
}

namespace {

bool is_comment_or_blank(const std::string& line, std::string& content) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) return true;
    if (line[i] == '#' || line[i] == '%') {
        content = line.substr(i + 1);
        return true;
    }
    content.clear();
    return false;
}

} // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<node, node>> edges;
    node max_id = 0;
    bool any_node = false;
    node header_nodes = 0;

    std::string line;
    count line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string comment;
        if (is_comment_or_blank(line, comment)) {
            std::istringstream cs(comment);
            std::string word;
            unsigned long long n = 0;
            if (cs >> word && word == "nodes" && cs >> n) {
                header_nodes = std::max<node>(header_nodes, static_cast<node>(n));
                any_node = any_node || n > 0;
            }
            continue;
        }
        std::istringstream ls(line);
        long long a = -1, b = -1;
        if (!(ls >> a >> b) || a < 0 || b < 0) {
            throw parse_error("line " + std::to_string(line_no) + ": expected two nonnegative integers");
        }
        std::string rest;
        if (ls >> rest) {
            throw parse_error("line " + std::to_string(line_no) + ": trailing token '" + rest + "'");
        }
        node u = static_cast<node>(a);
        node v = static_cast<node>(b);
        max_id = std::max({max_id, u, v});
        any_node = true;
        if (u != v) edges.emplace_back(u, v);
    }

    node n = any_node ? std::max<node>(max_id + 1, header_nodes) : 0;
    return Graph(n, edges);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    node last_endpoint = 0;
    bool any = false;
    for (node u = 0; u < g.node_count(); ++u) {
        if (g.degree(u) > 0) {
            last_endpoint = u;
            any = true;
        }
    }
    if (g.node_count() > 0 && (!any || last_endpoint + 1 != g.node_count())) {
        out << "# nodes " << g.node_count() << "\n";
    }
    for (node u = 0; u < g.node_count(); ++u) {
        for (node v : g.neighbors(u)) {
            if (u < v) out << u << ' ' << v << '\n';
        }
    }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(g, out);
}

std::pair<Graph, std::vector<node>> permute_nodes(const Graph& g, std::uint64_t seed) {
    const node n = g.node_count();
    std::vector<node> mapping(n);
    for (node u = 0; u < n; ++u) mapping[u] = u;
    Rng rng(seed);
    rng.shuffle(mapping);

    std::vector<std::pair<node, node>> edges;
    edges.reserve(g.edge_count());
    for (node u = 0; u < n; ++u) {
        for (node v : g.neighbors(u)) {
            if (u < v) edges.emplace_back(mapping[u], mapping[v]);
        }
    }
    return {Graph(n, edges), std::move(mapping)};
}

} // namespace qte
