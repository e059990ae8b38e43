#pragma once

#include "exgraph/graph.hpp"

namespace exg {

// Existence/uniqueness failures of the completion. Either one means a result
// of the theory has been falsified (or the engine is broken); callers must
// surface it, never swallow it.
struct NoCompletion : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MultipleCompletions : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompletionQuery {
    std::vector<std::string> u;  // canonical variable keys
    std::vector<int> root_path;  // reduced path from the enumeration root (0-based)
};

struct CompletionResult {
    int vertex = -1;  // graph vertex id of the completion
    std::vector<std::string> cluster;
    std::vector<int> tree_vertex;  // reduced path (from the enumeration root)
                                   // of a tree vertex realizing the completion
    /// (position, c-vector) for each non-U position, proving nonnegativity.
    std::vector<std::pair<int, std::vector<long long>>> certificate;
};

/// Brute-force completion (the normative algorithm): scan every vertex of
/// F_U, replay its witness path relative to the query root to get its
/// C-matrix, and keep the unique vertex whose non-U c-vectors are all
/// nonnegative. `initial` is the seed the graph was enumerated from.
CompletionResult bongartz_completion(const ExchangeGraph& g,
                                     const LabeledSeed& initial,
                                     const CompletionQuery& q);

/// Directed-search variant: from the root seed, repeatedly mutate at a non-U
/// position whose c-vector is negative. Must agree with the brute-force
/// oracle; used as an accelerator and cross-check.
CompletionResult bongartz_completion_directed(const ExchangeGraph& g,
                                              const LabeledSeed& initial,
                                              const CompletionQuery& q);

/// The map P_U: each vertex v goes to its completion with root = witness(v).
/// Result is indexed by vertex id.
std::vector<int> projection_map(const ExchangeGraph& g,
                                const LabeledSeed& initial,
                                const std::vector<std::string>& u);

struct ProjectionAudit {
    bool p1 = false;  // image inside F_U
    bool p2 = false;  // fixes F_U pointwise
    bool p3 = false;  // edges map to edges or vertices of F_U
    bool p4 = false;  // boundary edges collapse
    std::vector<std::string> failures;
    bool ok() const { return p1 && p2 && p3 && p4; }
};

ProjectionAudit audit_projection(const ExchangeGraph& g,
                                 const std::vector<std::string>& u,
                                 const std::vector<int>& pmap);

struct Case3Report {
    std::size_t edges_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// For every tree edge t --k-- t' among witness vertices and their one-step
/// neighbors, the completions B_U(t), B_U(t') either coincide or share n-1
/// variables.
Case3Report verify_lemma_case3(const ExchangeGraph& g,
                               const LabeledSeed& initial,
                               const std::vector<std::string>& u);

std::string completion_to_json(const CompletionQuery& q,
                               const CompletionResult& r);

}  // namespace exg
