#ifndef QTE_GENERATOR_HPP
#define QTE_GENERATOR_HPP

#include <utility>

#include "qte/common.hpp"
#include "qte/edits.hpp"
#include "qte/graph.hpp"
#include "qte/skeleton.hpp"

namespace qte {

struct GenSpec {
    node n = 0;
    std::uint64_t seed = 0;
    count planted_k = 0;
    count size_min = 10;            // minimum component size
    double size_max_fraction = 0.2; // maximum component size as fraction of n
    double exponent = -1.0;         // power-law exponent of the size distribution
    double insert_fraction = 0.8;   // planted edits: this share are insertions
};

/**
 * Generates a quasi-threshold graph with power-law component sizes: sizes are
 * drawn by inverse-CDF from [size_min, size_max_fraction * n] (last component
 * truncated so sizes sum to n); each component is the closure of a random
 * recursive tree (node v picks a uniform parent among 0..v-1).
 * Returns the graph and its defining skeleton. Throws std::domain_error for
 * n < size_min.
 */
std::pair<Graph, SkeletonForest> generate_qt(const GenSpec& spec);

/**
 * Applies k random edits: floor(insert_fraction * k) distinct non-edges are
 * inserted and the remaining k edits delete distinct original edges, all
 * drawn uniformly. The edited graph has edit distance at most k from g.
 * Throws std::domain_error if not enough edges/non-edges exist.
 */
std::pair<Graph, EditSet> plant_edits(const Graph& g, count k, std::uint64_t seed,
                                      double insert_fraction = 0.8);

} // namespace qte

#endif // QTE_GENERATOR_HPP
