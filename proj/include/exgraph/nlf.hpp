#pragma once

#include "exgraph/bongartz.hpp"

namespace exg {

struct NlfViolation {
    int v = -1;
    int w = -1;
    std::vector<int> geodesic;         // offending vertex path
    int leaving_vertex = -1;           // vertex on the path outside the face
    std::vector<std::string> face_u;   // minimal face defining set
};

struct FaceAuditRecord {
    std::vector<std::string> u;
    ProjectionAudit audit;
};

struct NlfReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    bool graph_complete = false;
    std::size_t pairs_checked = 0;
    std::size_t geodesics_checked = 0;
    bool budget_exceeded = false;
    std::vector<NlfViolation> violations;
    std::vector<FaceAuditRecord> face_audits;  // empty when audit skipped
    bool projection_route_ran = false;
    bool routes_agree = true;  // per-pair verdict comparison of the two routes

    bool ok() const {
        if (!violations.empty() || !routes_agree) return false;
        for (const auto& fa : face_audits)
            if (!fa.audit.ok()) return false;
        return true;
    }
    std::string to_json() const;
    std::string summary() const;
};

/// Checks every geodesic in `paths` (vertex paths v..w) for containment in
/// the face defined by `u`; appends violations. Split out so tests can feed
/// a corrupted path list directly.
void check_geodesic_containment(const ExchangeGraph& g, int v, int w,
                                const std::vector<std::string>& u,
                                const std::vector<std::vector<int>>& paths,
                                std::vector<NlfViolation>& out);

/// Verifies the non-leaving-face property over all vertex pairs (exhaustive
/// when |V|^2 fits the pair budget, otherwise a deterministic stride
/// subsample). When `initial` is given, additionally runs the projection
/// audit for every face arising from a sub-cluster and compares the two
/// routes' per-pair verdicts; pass nullptr for graphs loaded without seeds
/// (geodesic route only).
NlfReport verify_nlf(const ExchangeGraph& g, const LabeledSeed* initial,
                     std::size_t pair_budget = 1000000,
                     std::size_t path_budget = 100000);

}  // namespace exg
