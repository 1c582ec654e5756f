#include "qte/skeleton.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qte {

SkeletonForest make_all_roots(node n) {
    SkeletonForest f;
    f.parent.assign(n, none);
    f.depth.assign(n, 0);
    return f;
}

void recompute_depths(SkeletonForest& f) {
    const node n = f.size();
    f.depth.assign(n, 0);
    // state: 0 unvisited, 1 on current path, 2 resolved
    std::vector<unsigned char> state(n, 0);
    std::vector<node> path;
    for (node start = 0; start < n; ++start) {
        if (state[start] == 2) continue;
        node u = start;
        path.clear();
        while (u != none && state[u] == 0) {
            state[u] = 1;
            path.push_back(u);
            node p = f.parent[u];
            if (p != none && p >= n) {
                throw std::domain_error("skeleton parent out of range");
            }
            u = p;
        }
        if (u != none && state[u] == 1) {
            throw std::domain_error("skeleton parent map contains a cycle");
        }
        count base = (u == none) ? 0 : f.depth[u] + 1;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            f.depth[*it] = base++;
            state[*it] = 2;
        }
    }
}

Graph closure_of_forest(const SkeletonForest& f) {
    SkeletonForest checked = f;
    recompute_depths(checked);

    const node n = f.size();
    std::vector<std::pair<node, node>> edges;
    count total = 0;
    for (node u = 0; u < n; ++u) total += checked.depth[u];
    edges.reserve(total);
    for (node u = 0; u < n; ++u) {
        for (node a = checked.parent[u]; a != none; a = checked.parent[a]) {
            edges.emplace_back(u, a);
        }
    }
    return Graph(n, edges);
}

void write_skeleton(const SkeletonForest& f, std::ostream& out) {
    for (node u = 0; u < f.size(); ++u) {
        if (f.parent[u] == none) {
            out << u << " -1 " << f.depth[u] << '\n';
        } else {
            out << u << ' ' << f.parent[u] << ' ' << f.depth[u] << '\n';
        }
    }
}

void write_skeleton_file(const SkeletonForest& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_skeleton(f, out);
}

SkeletonForest read_skeleton(std::istream& in) {
    std::vector<std::pair<node, node>> entries;  // (node, parent)
    node max_id = 0;
    std::string line;
    count line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        long long u = 0, p = 0;
        unsigned long long d = 0;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> p >> d) || u < 0 || p < -1) {
            throw parse_error("skeleton line " + std::to_string(line_no) + ": expected 'node parent depth'");
        }
        entries.emplace_back(static_cast<node>(u), p < 0 ? none : static_cast<node>(p));
        max_id = std::max<node>(max_id, static_cast<node>(u));
        if (p >= 0) max_id = std::max<node>(max_id, static_cast<node>(p));
    }
    SkeletonForest f = make_all_roots(entries.empty() ? 0 : max_id + 1);
    for (auto [u, p] : entries) f.parent[u] = p;
    recompute_depths(f);
    return f;
}

SkeletonForest read_skeleton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_skeleton(in);
}

} // namespace qte
