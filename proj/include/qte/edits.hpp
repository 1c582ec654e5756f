#ifndef QTE_EDITS_HPP
#define QTE_EDITS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qte/common.hpp"
#include "qte/graph.hpp"
#include "qte/skeleton.hpp"

namespace qte {

enum class EditKind { insert, remove };

struct Edit {
    EditKind kind;
    node u;
    node v;
};

bool operator==(const Edit& a, const Edit& b);

/// Ordered list of edge edits; k = size().
using EditSet = std::vector<Edit>;

/// Applies the edits in order. Throws std::domain_error if an insert targets
/// an existing edge or a removal a non-edge (at application time).
Graph apply_edits(const Graph& g, const EditSet& edits);

/// The edit set turning g into the closure of f, without materializing the
/// closure: deletions are edges of g without an ancestor relation, insertions
/// are ancestor pairs missing from g.
EditSet edits_from_skeleton(const Graph& g, const SkeletonForest& f);

/// Text format: one edit per line, "+ u v" or "- u v".
void write_edit_list(const EditSet& edits, std::ostream& out);
void write_edit_list_file(const EditSet& edits, const std::string& path);
EditSet read_edit_list(std::istream& in);
EditSet read_edit_list_file(const std::string& path);

} // namespace qte

#endif // QTE_EDITS_HPP
