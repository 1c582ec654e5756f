#ifndef QTE_EXACT_HPP
#define QTE_EXACT_HPP

#include <array>
#include <optional>

#include "qte/common.hpp"
#include "qte/edits.hpp"
#include "qte/graph.hpp"
#include "qte/recognition.hpp"

namespace qte {

/// The 6 possible edits destroying a forbidden subgraph: for a P4 (a,b,c,d)
/// delete ab, bc, cd or insert ac, bd, ad; for a C4 delete ab, bc, cd, da or
/// insert ac, bd.
std::array<Edit, 6> branch_edits(const Certificate& c);

/**
 * Bounded search tree solver: branches over the 6 edits of a forbidden
 * subgraph found by recognition, blocking each edited pair on its branch.
 * Returns a minimum-size edit set of size <= k_max (found by iterative
 * deepening), or nullopt if none exists. Intended for desk-scale budgets.
 */
std::optional<EditSet> bst_solve(const Graph& g, count k_max);

/// Minimum edit distance by exhaustive enumeration of all graphs on g's
/// nodes. Throws std::domain_error for more than 6 nodes.
count brute_force_optimum(const Graph& g);

} // namespace qte

#endif // QTE_EXACT_HPP
