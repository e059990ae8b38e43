#include "exgraph/bongartz.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace exg {

namespace {

// Seed at the query root, then at a face vertex relative to that root:
// replay the root path from the enumeration root, reset the C-matrix there,
// and walk reverse(root_path) + witness(v).
LabeledSeed seed_relative_to_root(const LabeledSeed& initial,
                                  const std::vector<int>& root_path,
                                  const std::vector<int>& target_witness) {
    LabeledSeed at_root = replay(initial, root_path).rerooted();
    std::vector<int> walk = reversed_path(root_path);
    walk.insert(walk.end(), target_witness.begin(), target_witness.end());
    return replay(std::move(at_root), reduce_path(walk));
}

// Nonnegativity test of the definition; fills the certificate on success.
bool passes_cvector_test(
    const LabeledSeed& s, const std::vector<std::string>& u,
    std::vector<std::pair<int, std::vector<long long>>>& cert) {
    cert.clear();
    const std::size_t n = s.rank();
    for (std::size_t i = 0; i < n; ++i) {
        std::string key = s.variables()[i].to_string();
        if (std::find(u.begin(), u.end(), key) != u.end()) continue;
        std::vector<long long> col = s.cmatrix().column(i);
        for (long long x : col)
            if (x < 0) return false;
        cert.emplace_back(static_cast<int>(i), std::move(col));
    }
    return true;
}

std::string join_keys(const std::vector<std::string>& keys) {
    std::ostringstream os;
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? ", " : "") << keys[i];
    return os.str();
}

}  // namespace

CompletionResult bongartz_completion(const ExchangeGraph& g,
                                     const LabeledSeed& initial,
                                     const CompletionQuery& q) {
    g.require_complete("bongartz_completion");
    Face face = face_of(g, q.u);

    CompletionResult found;
    bool have = false;
    for (int v : face.vertices) {
        LabeledSeed s = seed_relative_to_root(initial, q.root_path, g.witness(v));
        if (Cluster(s.variables()).keys() != g.cluster(v).keys())
            throw std::logic_error("bongartz_completion: witness replay mismatch");
        std::vector<std::pair<int, std::vector<long long>>> cert;
        if (!passes_cvector_test(s, face.defining, cert)) continue;
        if (have)
            throw MultipleCompletions("two face vertices pass the c-vector test for U = {" +
                                      join_keys(face.defining) + "}");
        have = true;
        found.vertex = v;
        found.cluster = g.cluster(v).keys();
        std::vector<int> tv = reversed_path(q.root_path);
        tv.insert(tv.end(), g.witness(v).begin(), g.witness(v).end());
        found.tree_vertex = reduce_path(tv);
        found.certificate = std::move(cert);
    }
    if (!have)
        throw NoCompletion("no face vertex passes the c-vector test for U = {" +
                           join_keys(face.defining) + "}");
    return found;
}

CompletionResult bongartz_completion_directed(const ExchangeGraph& g,
                                              const LabeledSeed& initial,
                                              const CompletionQuery& q) {
    g.require_complete("bongartz_completion_directed");
    Face face = face_of(g, q.u);
    LabeledSeed s = replay(initial, q.root_path).rerooted();

    const std::size_t cap = g.num_vertices() * g.rank() * 4 + 16;
    std::vector<std::pair<int, std::vector<long long>>> cert;
    for (std::size_t step = 0; step <= cap; ++step) {
        if (passes_cvector_test(s, face.defining, cert)) {
            CompletionResult r;
            Cluster c(s.variables());
            r.vertex = g.find(c);
            r.cluster = c.keys();
            std::vector<int> tv = reversed_path(q.root_path);
            const auto& p = s.path();
            tv.insert(tv.end(), p.begin(), p.end());
            r.tree_vertex = reduce_path(tv);
            r.certificate = std::move(cert);
            return r;
        }
        // Mutate at the smallest non-U position whose c-vector is negative.
        bool moved = false;
        for (std::size_t i = 0; i < s.rank() && !moved; ++i) {
            std::string key = s.variables()[i].to_string();
            if (std::find(face.defining.begin(), face.defining.end(), key) !=
                face.defining.end())
                continue;
            if (epsilon(s.cmatrix(), i) < 0) {
                s = s.mutated(i);
                moved = true;
            }
        }
        if (!moved)
            throw NoCompletion("directed search stalled for U = {" +
                               join_keys(face.defining) + "}");
    }
    throw NoCompletion("directed search exceeded its step cap");
}

std::vector<int> projection_map(const ExchangeGraph& g,
                                const LabeledSeed& initial,
                                const std::vector<std::string>& u) {
    g.require_complete("projection_map");
    std::vector<int> pmap(g.num_vertices(), -1);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        CompletionQuery q{u, g.witness(static_cast<int>(v))};
        pmap[v] = bongartz_completion(g, initial, q).vertex;
    }
    return pmap;
}

ProjectionAudit audit_projection(const ExchangeGraph& g,
                                 const std::vector<std::string>& u,
                                 const std::vector<int>& pmap) {
    ProjectionAudit a;
    Face face = face_of(g, u);
    std::set<int> fv(face.vertices.begin(), face.vertices.end());
    std::set<std::pair<int, int>> fe(face.edges.begin(), face.edges.end());

    a.p1 = a.p2 = a.p3 = a.p4 = true;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (!fv.count(pmap[v])) {
            a.p1 = false;
            a.failures.push_back("P1: image of vertex " + std::to_string(v) +
                                 " is outside the face");
        }
        if (fv.count(static_cast<int>(v)) && pmap[v] != static_cast<int>(v)) {
            a.p2 = false;
            a.failures.push_back("P2: face vertex " + std::to_string(v) +
                                 " is not fixed");
        }
    }
    for (auto [v, w] : g.edges()) {
        int pv = pmap[v], pw = pmap[w];
        if (pv != pw) {
            auto e = std::minmax(pv, pw);
            if (!fe.count({e.first, e.second})) {
                a.p3 = false;
                a.failures.push_back("P3: edge (" + std::to_string(v) + "," +
                                     std::to_string(w) +
                                     ") maps to a non-edge of the face");
            }
        }
        bool iv = fv.count(v) > 0, iw = fv.count(w) > 0;
        if (iv != iw && pv != pw) {
            a.p4 = false;
            a.failures.push_back("P4: boundary edge (" + std::to_string(v) + "," +
                                 std::to_string(w) + ") does not collapse");
        }
    }
    return a;
}

Case3Report verify_lemma_case3(const ExchangeGraph& g,
                               const LabeledSeed& initial,
                               const std::vector<std::string>& u) {
    g.require_complete("verify_lemma_case3");
    Case3Report rep;
    const std::size_t n = g.rank();
    std::set<std::vector<int>> seen_edges;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> t = g.witness(static_cast<int>(v));
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<int> tp = t;
            tp.push_back(static_cast<int>(k));
            tp = reduce_path(tp);
            // Canonical key for the unordered tree edge {t, t'}.
            std::vector<int> key = t.size() < tp.size() ? t : tp;
            key.push_back(static_cast<int>(k) + 1000);
            if (!seen_edges.insert(key).second) continue;

            CompletionResult bt = bongartz_completion(g, initial, {u, t});
            CompletionResult btp = bongartz_completion(g, initial, {u, tp});
            std::vector<std::string> common;
            for (const auto& x : bt.cluster)
                if (std::find(btp.cluster.begin(), btp.cluster.end(), x) !=
                    btp.cluster.end())
                    common.push_back(x);
            ++rep.edges_checked;
            if (common.size() != n && common.size() != n - 1)
                rep.violations.push_back(
                    "tree edge at direction " + std::to_string(k + 1) +
                    " from witness of vertex " + std::to_string(v) +
                    ": |intersection| = " + std::to_string(common.size()));
        }
    }
    return rep;
}

std::string completion_to_json(const CompletionQuery& q,
                               const CompletionResult& r) {
    nlohmann::json j;
    j["U"] = q.u;
    nlohmann::json rp = nlohmann::json::array();
    for (int k : q.root_path) rp.push_back(k + 1);
    j["root_path"] = rp;
    j["completion"] = r.cluster;
    nlohmann::json cert = nlohmann::json::array();
    for (const auto& [pos, col] : r.certificate)
        cert.push_back({{"position", pos + 1}, {"c_vector", col}});
    j["certificate"] = cert;
    return j.dump(2);
}

}  // namespace exg
