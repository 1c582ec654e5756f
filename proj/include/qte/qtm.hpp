#ifndef QTE_QTM_HPP
#define QTE_QTM_HPP

#include <queue>
#include <vector>

#include "qte/common.hpp"
#include "qte/graph.hpp"
#include "qte/skeleton.hpp"

namespace qte {

struct MoveDecision {
    node new_parent = none;        // none = below the virtual root
    std::vector<node> adopted;     // children of new_parent moved under v_m
    std::int64_t savings = 0;      // edits saved versus isolating v_m
};

struct QtmResult {
    SkeletonForest forest;
    count edits = 0;
    count rounds_used = 0;
    count initial_edits = 0;
    std::vector<count> round_edits;  // edit count after each round
};

/**
 * Quasi-Threshold Mover: round-based local search that relocates one node at
 * a time within the skeleton, each move optimal for the moved node.
 *
 * A move isolates v_m (children fall back to its old parent), then finds the
 * parent + adopted-children placement saving the most edits via a bottom-up
 * scan over a depth-ordered queue seeded with v_m's neighbors. Subtree
 * closeness is evaluated by short resumable DFS searches that share state, so
 * a move costs O(d(v_m) log d(v_m)) amortized. If the best placement does not
 * beat the old position, v_m is restored exactly.
 *
 * The mover owns graph reference, forest and scratch exclusively; run
 * independent instances for concurrent work.
 */
class Mover {
public:
    Mover(const Graph& g, const SkeletonForest& initial);

    /// Detaches v_m, reattaching its children to its old parent, and returns
    /// the edit savings of the old position relative to isolation.
    std::int64_t isolate(node v_m);

    /// Optimal placement for an isolated v_m. Call isolate(v_m) first.
    MoveDecision try_move(node v_m);

    /// Applies the decision if it strictly beats the old position, otherwise
    /// restores v_m. Resets the per-move scratch. Returns true on a change.
    bool apply_move(node v_m, const MoveDecision& d);

    /// isolate + try_move + apply_move.
    bool move_node(node v_m);

    /// Runs rounds of moves over seeded shuffles until a round changes
    /// nothing or max_rounds is reached (max_rounds = 0: until stable).
    /// Returns the number of rounds executed.
    count run(count max_rounds, std::uint64_t seed);

    count edits() const { return edits_; }
    count recount_edits() const;

    SkeletonForest skeleton() const;
    const std::vector<count>& round_trace() const { return round_trace_; }

    /// Queue pushes of the most recent move (operation-count contract).
    count last_move_pushes() const { return pushes_; }

    /// Enables per-move verification that the scratch is fully reset.
    void set_debug_checks(bool on) { debug_checks_ = on; }

private:
    struct TreeNode {
        node parent = none;
        std::uint32_t pos_in_parent = 0;
        std::vector<node> children;
    };

    std::vector<node>& siblings_of(node parent);
    void remove_from_parent(node u);
    void attach(node u, node p);
    node first_child(node u) const;
    node next_dfs_descend(node x, node basis) const;
    node next_skip_subtree(node x, node basis) const;

    /// Adds delta to the depth of every node in u's subtree (u included) and
    /// returns the subtree's neighbor balance (#marked - #unmarked).
    std::int64_t adjust_subtree(node u, std::int64_t delta);

    void push(node w);
    void reset_scratch();
    void check_scratch_clean() const;

    const Graph& g_;
    std::vector<TreeNode> tree_;
    std::vector<node> roots_;
    std::vector<count> depth_;
    count edits_ = 0;
    std::vector<count> round_trace_;

    // per-move scratch, restored to initial values after every move
    std::vector<std::int64_t> child_close_;
    std::vector<std::int64_t> score_max_;
    std::vector<node> dfs_cursor_;
    std::vector<node> best_parent_;
    std::vector<unsigned char> touched_;
    std::vector<unsigned char> in_queue_;
    std::vector<unsigned char> neighbor_mark_;
    std::vector<node> touched_log_;
    std::priority_queue<std::pair<count, node>> queue_;

    // state of the move in progress
    node isolated_ = none;
    node old_parent_ = none;
    std::vector<node> old_children_;
    std::int64_t old_savings_ = 0;

    count pushes_ = 0;
    bool debug_checks_ = false;
};

QtmResult run_qtm(const Graph& g, const SkeletonForest& initial, count max_rounds,
                  std::uint64_t seed);

} // namespace qte

#endif // QTE_QTM_HPP
