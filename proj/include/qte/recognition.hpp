#ifndef QTE_RECOGNITION_HPP
#define QTE_RECOGNITION_HPP

#include <array>
#include <variant>
#include <vector>

#include "qte/common.hpp"
#include "qte/graph.hpp"
#include "qte/skeleton.hpp"

namespace qte {

enum class CertificateKind { p4, c4 };

/// Four nodes witnessing an induced P4 or C4, listed along the path/cycle.
struct Certificate {
    CertificateKind kind;
    std::array<node, 4> nodes;
};

using RecognitionResult = std::variant<SkeletonForest, Certificate>;

/**
 * Certifying linear-time quasi-threshold recognition.
 *
 * Nodes are processed by decreasing degree (ties by ascending id). Every node
 * starts as child of the virtual root; a processed node claims its not yet
 * processed neighbors as children after checking that they share its parent.
 * On success the returned skeleton's closure equals the input graph; on the
 * first parent mismatch an induced P4 or C4 is extracted.
 *
 * The class keeps its scratch arrays between calls so tight loops (e.g. the
 * bounded search tree) can re-run it without reallocating.
 */
class Recognizer {
public:
    RecognitionResult run(const Graph& g);
    RecognitionResult run(node n, const std::vector<std::vector<node>>& adj);

    /// Acceptance check only; skips building the skeleton/certificate.
    bool accepts(node n, const std::vector<std::vector<node>>& adj);

private:
    template <bool BuildResult>
    bool run_impl(node n, const std::vector<std::vector<node>>& adj,
                  SkeletonForest* forest_out, Certificate* cert_out);

    std::vector<node> order_;
    std::vector<node> bucket_start_;
    std::vector<node> parent_;
    std::vector<count> rank_;      // processing rank, ~0 = not yet processed
    std::vector<unsigned char> mark_;
};

RecognitionResult recognize(const Graph& g);

bool is_quasi_threshold(const Graph& g);

/// True iff the certificate's four nodes are distinct, in range, and induce
/// exactly the claimed pattern in g.
bool verify_certificate(const Graph& g, const Certificate& c);

} // namespace qte

#endif // QTE_RECOGNITION_HPP
