#include "qte/qtm.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "qte/init_edit.hpp"

namespace qte {

Mover::Mover(const Graph& g, const SkeletonForest& initial) : g_(g) {
    const node n = g.node_count();
    if (initial.size() != n) {
        throw std::invalid_argument("initial skeleton does not match graph");
    }
    SkeletonForest checked = initial;
    recompute_depths(checked);

    tree_.resize(n);
    depth_ = checked.depth;
    for (node u = 0; u < n; ++u) {
        tree_[u].parent = checked.parent[u];
    }
    for (node u = 0; u < n; ++u) {
        auto& sib = siblings_of(tree_[u].parent);
        tree_[u].pos_in_parent = static_cast<std::uint32_t>(sib.size());
        sib.push_back(u);
    }

    edits_ = count_edits(g, checked);

    child_close_.assign(n, 0);
    score_max_.assign(n, -1);
    dfs_cursor_.resize(n);
    for (node u = 0; u < n; ++u) dfs_cursor_[u] = u;
    best_parent_.assign(n, none);
    touched_.assign(n, 0);
    in_queue_.assign(n, 0);
    neighbor_mark_.assign(n, 0);
}

std::vector<node>& Mover::siblings_of(node parent) {
    return parent == none ? roots_ : tree_[parent].children;
}

void Mover::remove_from_parent(node u) {
    auto& sib = siblings_of(tree_[u].parent);
    const std::uint32_t pos = tree_[u].pos_in_parent;
    // O(1) removal: swap with the last child
    sib[pos] = sib.back();
    tree_[sib[pos]].pos_in_parent = pos;
    sib.pop_back();
}

void Mover::attach(node u, node p) {
    tree_[u].parent = p;
    auto& sib = siblings_of(p);
    tree_[u].pos_in_parent = static_cast<std::uint32_t>(sib.size());
    sib.push_back(u);
    depth_[u] = p == none ? 0 : depth_[p] + 1;
}

node Mover::first_child(node u) const {
    return tree_[u].children.empty() ? none : tree_[u].children.front();
}

node Mover::next_dfs_descend(node x, node basis) const {
    if (!tree_[x].children.empty()) return tree_[x].children.front();
    return next_skip_subtree(x, basis);
}

node Mover::next_skip_subtree(node x, node basis) const {
    while (true) {
        const node p = tree_[x].parent;
        const auto& sib = p == none ? roots_ : tree_[p].children;
        if (tree_[x].pos_in_parent + 1 < sib.size()) {
            return sib[tree_[x].pos_in_parent + 1];
        }
        if (p == basis) return basis;
        assert(p != none);
        x = p;
    }
}

std::int64_t Mover::adjust_subtree(node u, std::int64_t delta) {
    std::int64_t balance = 0;
    // manual DFS over the child arrays; x == u signals completion
    node x = u;
    do {
        depth_[x] = static_cast<count>(static_cast<std::int64_t>(depth_[x]) + delta);
        balance += neighbor_mark_[x] ? 1 : -1;
        node nxt = first_child(x);
        if (nxt == none) {
            if (x == u) break;
            nxt = next_skip_subtree(x, u);
        }
        x = nxt;
    } while (x != u);
    return balance;
}

std::int64_t Mover::isolate(node v_m) {
    assert(isolated_ == none);
    for (node w : g_.neighbors(v_m)) neighbor_mark_[w] = 1;

    old_parent_ = tree_[v_m].parent;
    old_children_.assign(tree_[v_m].children.begin(), tree_[v_m].children.end());

    old_savings_ = 0;
    for (node a = old_parent_; a != none; a = tree_[a].parent) {
        old_savings_ += neighbor_mark_[a] ? 1 : -1;
    }

    remove_from_parent(v_m);
    for (node c : old_children_) {
        remove_from_parent(c);
        old_savings_ += adjust_subtree(c, -1);
        attach(c, old_parent_);
    }

    isolated_ = v_m;
    return old_savings_;
}

void Mover::push(node w) {
    if (in_queue_[w]) return;
    assert(!touched_[w]);
    in_queue_[w] = true;
    touched_log_.push_back(w);
    queue_.emplace(depth_[w], w);
    ++pushes_;
}

MoveDecision Mover::try_move(node v_m) {
    assert(isolated_ == v_m);
    pushes_ = 0;

    for (node w : g_.neighbors(v_m)) push(w);

    std::int64_t cc_root = 0;
    std::int64_t sm_root = -1;
    node bp_root = none;

    while (!queue_.empty()) {
        const node u = queue_.top().second;
        queue_.pop();
        touched_[u] = 1;

        // fold the summed closeness of u's close children: u itself as parent
        if (child_close_[u] > score_max_[u]) {
            score_max_[u] = child_close_[u];
            best_parent_[u] = u;
        }
        if (neighbor_mark_[u]) {
            child_close_[u] += 2;
            score_max_[u] += 2;
        }
        child_close_[u] -= 1;
        score_max_[u] -= 1;

        // resumable bounded DFS for the unexplored part of u's subtree
        if (child_close_[u] >= 0 && !tree_[u].children.empty()) {
            node x = tree_[u].children.front();
            while (x != u) {
                if (!touched_[x] || child_close_[x] < 0) {
                    child_close_[u] -= 1;
                    x = dfs_cursor_[x];  // resume an aborted DFS, else stays at x
                    if (child_close_[u] < 0) {
                        dfs_cursor_[u] = x;
                        break;
                    }
                    x = next_dfs_descend(x, u);
                } else {
                    // subtree already fully accounted by x's own processing
                    x = next_skip_subtree(x, u);
                }
            }
        }

        const node p = tree_[u].parent;
        if (p == none) {
            if (child_close_[u] > 0) cc_root += child_close_[u];
            if (score_max_[u] > sm_root) {
                sm_root = score_max_[u];
                bp_root = best_parent_[u];
            }
        } else {
            if (child_close_[u] > 0) {
                child_close_[p] += child_close_[u];
                push(p);
            }
            if (score_max_[u] > score_max_[p]) {
                score_max_[p] = score_max_[u];
                best_parent_[p] = best_parent_[u];
                push(p);
            }
        }
    }

    // the virtual root: adopting its close children is the isolation-with-
    // adoption placement; no +-1 applies since the root is not a real node
    if (cc_root > sm_root) {
        sm_root = cc_root;
        bp_root = none;
    }

    MoveDecision d;
    d.savings = std::max<std::int64_t>(sm_root, 0);
    d.new_parent = sm_root > 0 ? bp_root : none;
    for (node c : touched_log_) {
        if (touched_[c] && tree_[c].parent == d.new_parent && child_close_[c] > 0) {
            d.adopted.push_back(c);
        }
    }
    return d;
}

bool Mover::apply_move(node v_m, const MoveDecision& d) {
    assert(isolated_ == v_m);
    assert(d.savings >= old_savings_);

    const bool improves = d.savings > old_savings_;
    if (improves) {
        attach(v_m, d.new_parent);
        for (node a : d.adopted) {
            if (tree_[a].parent != d.new_parent) {
                throw std::invalid_argument("adopted node is not a child of the chosen parent");
            }
            remove_from_parent(a);
            adjust_subtree(a, 1);
            attach(a, v_m);
        }
        edits_ -= static_cast<count>(d.savings - old_savings_);
    } else {
        // no better position: restore the original one exactly
        attach(v_m, old_parent_);
        for (node c : old_children_) {
            remove_from_parent(c);
            adjust_subtree(c, 1);
            attach(c, v_m);
        }
    }

    for (node w : g_.neighbors(v_m)) neighbor_mark_[w] = 0;
    reset_scratch();
    isolated_ = none;
    old_children_.clear();

    if (debug_checks_) check_scratch_clean();
    return improves;
}

bool Mover::move_node(node v_m) {
    isolate(v_m);
    MoveDecision d = try_move(v_m);
    return apply_move(v_m, d);
}

count Mover::run(count max_rounds, std::uint64_t seed) {
    const node n = g_.node_count();
    std::vector<node> order(n);
    for (node u = 0; u < n; ++u) order[u] = u;
    Rng rng(seed);

    round_trace_.clear();
    count rounds = 0;
    while (true) {
        ++rounds;
        rng.shuffle(order);
        count changed = 0;
        for (node v : order) {
            if (move_node(v)) ++changed;
        }
        round_trace_.push_back(edits_);
        if (changed == 0) break;
        if (max_rounds != 0 && rounds == max_rounds) break;
    }
    return rounds;
}

void Mover::reset_scratch() {
    for (node w : touched_log_) {
        child_close_[w] = 0;
        score_max_[w] = -1;
        dfs_cursor_[w] = w;
        best_parent_[w] = none;
        touched_[w] = 0;
        in_queue_[w] = 0;
    }
    touched_log_.clear();
    assert(queue_.empty());
}

void Mover::check_scratch_clean() const {
    for (node u = 0; u < g_.node_count(); ++u) {
        if (child_close_[u] != 0 || score_max_[u] != -1 || dfs_cursor_[u] != u ||
            best_parent_[u] != none || touched_[u] || in_queue_[u] || neighbor_mark_[u]) {
            throw std::logic_error("per-move scratch not reset");
        }
    }
}

count Mover::recount_edits() const {
    return count_edits(g_, skeleton());
}

SkeletonForest Mover::skeleton() const {
    SkeletonForest f;
    const node n = g_.node_count();
    f.parent.resize(n);
    for (node u = 0; u < n; ++u) f.parent[u] = tree_[u].parent;
    f.depth = depth_;
    return f;
}

QtmResult run_qtm(const Graph& g, const SkeletonForest& initial, count max_rounds,
                  std::uint64_t seed) {
    Mover mover(g, initial);
    QtmResult result;
    result.initial_edits = mover.edits();
    result.rounds_used = mover.run(max_rounds, seed);
    result.edits = mover.edits();
    result.forest = mover.skeleton();
    result.round_edits = mover.round_trace();
    return result;
}

} // namespace qte
