#include "exgraph/nlf.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace exg {

void check_geodesic_containment(const ExchangeGraph& g, int v, int w,
                                const std::vector<std::string>& u,
                                const std::vector<std::vector<int>>& paths,
                                std::vector<NlfViolation>& out) {
    for (const auto& path : paths) {
        for (int x : path) {
            if (!g.cluster(x).contains_all(u)) {
                NlfViolation viol;
                viol.v = v;
                viol.w = w;
                viol.geodesic = path;
                viol.leaving_vertex = x;
                viol.face_u = u;
                out.push_back(std::move(viol));
                break;
            }
        }
    }
}

NlfReport verify_nlf(const ExchangeGraph& g, const LabeledSeed* initial,
                     std::size_t pair_budget, std::size_t path_budget) {
    g.require_complete("verify_nlf");
    NlfReport rep;
    rep.vertices = g.num_vertices();
    rep.edges = g.num_edges();
    rep.graph_complete = g.complete();
    rep.projection_route_ran = initial != nullptr && g.has_witnesses();

    const std::size_t nv = g.num_vertices();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t w = v + 1; w < nv; ++w)
            pairs.emplace_back(static_cast<int>(v), static_cast<int>(w));
    if (pairs.size() > pair_budget) {
        // Deterministic stride subsample; no RNG so reports are reproducible.
        rep.budget_exceeded = true;
        std::size_t stride = (pairs.size() + pair_budget - 1) / pair_budget;
        std::vector<std::pair<int, int>> sampled;
        for (std::size_t i = 0; i < pairs.size(); i += stride)
            sampled.push_back(pairs[i]);
        pairs = std::move(sampled);
    }

    // Projection audits memoized per distinct defining set.
    std::map<std::vector<std::string>, ProjectionAudit> audits;
    auto audit_of = [&](const std::vector<std::string>& u) -> const ProjectionAudit& {
        auto it = audits.find(u);
        if (it == audits.end()) {
            std::vector<int> pmap = projection_map(g, *initial, u);
            it = audits.emplace(u, audit_projection(g, u, pmap)).first;
        }
        return it->second;
    };

    for (auto [v, w] : pairs) {
        std::vector<std::string> u = g.cluster(v).intersection(g.cluster(w));
        GeodesicSet gs = geodesics(g, v, w, path_budget);
        if (gs.truncated) rep.budget_exceeded = true;
        rep.geodesics_checked += gs.paths.size();
        std::size_t before = rep.violations.size();
        check_geodesic_containment(g, v, w, u, gs.paths, rep.violations);
        bool geodesic_ok = rep.violations.size() == before;
        ++rep.pairs_checked;

        if (rep.projection_route_ran && !u.empty()) {
            bool projection_ok = audit_of(u).ok();
            // A valid projection for the minimal face forces containment, so
            // the two verdicts must match.
            if (projection_ok != geodesic_ok) rep.routes_agree = false;
        }
    }

    // Face audit over every face defined by a sub-cluster (sizes 1..n-1).
    if (rep.projection_route_ran) {
        std::map<std::vector<std::string>, bool> faces;
        for (std::size_t v = 0; v < nv; ++v) {
            const auto& keys = g.cluster(static_cast<int>(v)).keys();
            const std::size_t n = keys.size();
            for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
                std::vector<std::string> u;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) u.push_back(keys[i]);
                std::sort(u.begin(), u.end());
                faces.emplace(std::move(u), true);
            }
        }
        for (const auto& [u, _] : faces)
            rep.face_audits.push_back({u, audit_of(u)});
    }
    return rep;
}

std::string NlfReport::to_json() const {
    nlohmann::json j;
    j["vertices"] = vertices;
    j["edges"] = edges;
    j["complete"] = graph_complete;
    j["pairs_checked"] = pairs_checked;
    j["geodesics_checked"] = geodesics_checked;
    j["budget_exceeded"] = budget_exceeded;
    j["projection_route_ran"] = projection_route_ran;
    j["routes_agree"] = routes_agree;
    j["ok"] = ok();
    nlohmann::json viols = nlohmann::json::array();
    for (const auto& viol : violations) {
        nlohmann::json o;
        o["v"] = viol.v;
        o["w"] = viol.w;
        o["geodesic"] = viol.geodesic;
        o["leaving_vertex"] = viol.leaving_vertex;
        o["face_U"] = viol.face_u;
        viols.push_back(std::move(o));
    }
    j["violations"] = std::move(viols);
    nlohmann::json fas = nlohmann::json::array();
    for (const auto& fa : face_audits) {
        nlohmann::json o;
        o["U"] = fa.u;
        o["ok"] = fa.audit.ok();
        o["failures"] = fa.audit.failures;
        fas.push_back(std::move(o));
    }
    j["face_audits"] = std::move(fas);
    return j.dump(2);
}

std::string NlfReport::summary() const {
    std::ostringstream os;
    os << vertices << " vertices, " << edges << " edges; " << pairs_checked
       << " pairs, " << geodesics_checked << " geodesics checked; "
       << face_audits.size() << " faces audited; " << violations.size()
       << " violations";
    if (!routes_agree) os << "; ROUTE DISAGREEMENT";
    if (budget_exceeded) os << "; budget exceeded";
    os << (ok() ? "; OK" : "; FAILED");
    return os.str();
}

}  // namespace exg
