#include "exgraph/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace exg {

Cluster::Cluster(std::vector<LaurentPoly> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end(),
              [](const LaurentPoly& a, const LaurentPoly& b) {
                  return LaurentPoly::cmp(a, b) < 0;
              });
    for (std::size_t i = 0; i + 1 < vars_.size(); ++i)
        if (vars_[i] == vars_[i + 1])
            throw std::invalid_argument("Cluster: variables not distinct");
    keys_.reserve(vars_.size());
    for (const auto& v : vars_) keys_.push_back(v.to_string());
    // key order is canonical on its own (plain string sort) so that clusters
    // loaded from JSON compare equal to enumerated ones
    std::sort(keys_.begin(), keys_.end());
}

Cluster Cluster::from_keys(std::vector<std::string> keys) {
    Cluster c;
    c.keys_ = std::move(keys);
    std::sort(c.keys_.begin(), c.keys_.end());
    return c;
}

bool Cluster::contains(const std::string& key) const {
    return std::find(keys_.begin(), keys_.end(), key) != keys_.end();
}

bool Cluster::contains_all(const std::vector<std::string>& keys) const {
    for (const auto& k : keys)
        if (!contains(k)) return false;
    return true;
}

std::vector<std::string> Cluster::intersection(const Cluster& o) const {
    std::vector<std::string> r;
    for (const auto& k : keys_)
        if (o.contains(k)) r.push_back(k);
    return r;
}

std::size_t ClusterKeyHash::operator()(
    const std::vector<std::string>& keys) const {
    std::size_t h = keys.size();
    std::hash<std::string> hs;
    for (const auto& k : keys) h = h * 1000003u + hs(k);
    return h;
}

int ExchangeGraph::find(const Cluster& c) const {
    auto it = index_.find(c.keys());
    return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& ExchangeGraph::vertices_with(
    const std::string& key) const {
    static const std::vector<int> empty;
    auto it = registry_.find(key);
    return it == registry_.end() ? empty : it->second;
}

std::vector<std::string> ExchangeGraph::variable_keys() const {
    std::vector<std::string> r;
    r.reserve(registry_.size());
    for (const auto& [k, v] : registry_) r.push_back(k);
    std::sort(r.begin(), r.end());
    return r;
}

void ExchangeGraph::finalize() {
    // Renumber by canonical cluster order so the result does not depend on
    // traversal order or worker count.
    const std::size_t nv = vertices_.size();
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vertices_[a] < vertices_[b]; });
    std::vector<int> pos(nv);
    for (std::size_t i = 0; i < nv; ++i) pos[order[i]] = static_cast<int>(i);

    std::vector<Cluster> nverts;
    std::vector<std::vector<int>> nwit;
    nverts.reserve(nv);
    nwit.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        nverts.push_back(std::move(vertices_[order[i]]));
        if (!witness_.empty()) nwit.push_back(std::move(witness_[order[i]]));
    }
    vertices_ = std::move(nverts);
    witness_ = std::move(nwit);

    std::set<std::pair<int, int>> es;
    for (auto [a, b] : edges_) {
        int x = pos[a], y = pos[b];
        if (x > y) std::swap(x, y);
        es.insert({x, y});
    }
    edges_.assign(es.begin(), es.end());

    index_.clear();
    registry_.clear();
    adj_.assign(nv, {});
    for (std::size_t i = 0; i < nv; ++i) {
        index_.emplace(vertices_[i].keys(), static_cast<int>(i));
        for (const auto& k : vertices_[i].keys())
            registry_[k].push_back(static_cast<int>(i));
    }
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& l : adj_) std::sort(l.begin(), l.end());
}

ExchangeGraph enumerate_graph(const LabeledSeed& initial,
                              std::size_t max_vertices, std::size_t max_depth) {
    if (max_vertices == 0 || max_depth == 0)
        throw std::invalid_argument("enumerate_graph: budgets must be positive");
    const std::size_t n = initial.rank();
    ExchangeGraph g;
    g.rank_ = n;

    std::unordered_map<std::vector<std::string>, int, ClusterKeyHash> seen;
    std::deque<LabeledSeed> frontier;
    bool exhausted = true;

    auto add_vertex = [&](const LabeledSeed& s) -> int {
        Cluster c(s.variables());
        auto it = seen.find(c.keys());
        if (it != seen.end()) return it->second;
        int id = static_cast<int>(g.vertices_.size());
        seen.emplace(c.keys(), id);
        g.vertices_.push_back(std::move(c));
        g.witness_.push_back(reduce_path(s.path()));
        return id;
    };

    frontier.push_back(initial);
    add_vertex(initial);
    while (!frontier.empty()) {
        LabeledSeed s = std::move(frontier.front());
        frontier.pop_front();
        int from = seen.at(Cluster(s.variables()).keys());
        if (s.path().size() >= max_depth) {
            exhausted = false;
            continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
            LabeledSeed t = s.mutated(k);
            Cluster c(t.variables());
            auto it = seen.find(c.keys());
            int to;
            if (it != seen.end()) {
                to = it->second;
            } else {
                if (g.vertices_.size() >= max_vertices) {
                    exhausted = false;
                    continue;
                }
                to = add_vertex(t);
                frontier.push_back(std::move(t));
            }
            if (from != to)
                g.edges_.emplace_back(std::min(from, to), std::max(from, to));
        }
    }
    g.complete_ = exhausted;
    g.finalize();
    return g;
}

Face face_of(const ExchangeGraph& g, const std::vector<std::string>& u) {
    Face f;
    f.defining = u;
    std::sort(f.defining.begin(), f.defining.end());
    f.defining.erase(std::unique(f.defining.begin(), f.defining.end()),
                     f.defining.end());
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.cluster(static_cast<int>(v)).contains_all(f.defining))
            f.vertices.push_back(static_cast<int>(v));
    if (f.vertices.empty())
        throw NotAFace("face_of: no cluster contains the given set");
    for (auto [a, b] : g.edges()) {
        bool ha = std::binary_search(f.vertices.begin(), f.vertices.end(), a);
        bool hb = std::binary_search(f.vertices.begin(), f.vertices.end(), b);
        if (ha && hb) f.edges.emplace_back(a, b);
    }
    return f;
}

Face minimal_face(const ExchangeGraph& g, int v, int w) {
    g.require_complete("minimal_face");
    return face_of(g, g.cluster(v).intersection(g.cluster(w)));
}

std::vector<int> bfs_distances(const ExchangeGraph& g, int v) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<int> q{v};
    dist[v] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : g.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
    }
    return dist;
}

GeodesicSet geodesics(const ExchangeGraph& g, int v, int w,
                      std::size_t max_paths) {
    g.require_complete("geodesics");
    GeodesicSet out;
    std::vector<int> dist = bfs_distances(g, w);
    if (dist[v] < 0) return out;  // unreachable; cannot happen when complete
    out.length = static_cast<std::size_t>(dist[v]);

    std::vector<int> path{v};
    // Iterative DFS descending through distance-decreasing neighbors.
    struct Frame {
        int vertex;
        std::size_t next = 0;
    };
    std::vector<Frame> stack{{v, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.vertex == w) {
            if (out.paths.size() >= max_paths) {
                out.truncated = true;
                break;
            }
            out.paths.push_back(path);
            stack.pop_back();
            path.pop_back();
            continue;
        }
        const auto& nb = g.neighbors(f.vertex);
        bool descended = false;
        while (f.next < nb.size()) {
            int y = nb[f.next++];
            if (dist[y] == dist[f.vertex] - 1) {
                stack.push_back({y, 0});
                path.push_back(y);
                descended = true;
                break;
            }
        }
        if (!descended) {
            stack.pop_back();
            path.pop_back();
        }
    }
    return out;
}

std::string ExchangeGraph::to_json() const {
    nlohmann::json j;
    j["complete"] = complete_;
    j["rank"] = rank_;
    nlohmann::json verts = nlohmann::json::array();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        nlohmann::json v;
        v["id"] = i;
        v["cluster"] = vertices_[i].keys();
        if (!witness_.empty()) {
            nlohmann::json p = nlohmann::json::array();
            for (int k : witness_[i]) p.push_back(k + 1);
            v["witness_path"] = p;
        }
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    nlohmann::json es = nlohmann::json::array();
    for (auto [a, b] : edges_) es.push_back(nlohmann::json::array({a, b}));
    j["edges"] = std::move(es);
    return j.dump(2);
}

ExchangeGraph ExchangeGraph::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExchangeGraph g;
    g.complete_ = j.at("complete").get<bool>();
    g.rank_ = j.at("rank").get<std::size_t>();
    bool have_witness = true;
    for (const auto& v : j.at("vertices")) {
        g.vertices_.push_back(
            Cluster::from_keys(v.at("cluster").get<std::vector<std::string>>()));
        if (v.contains("witness_path")) {
            std::vector<int> p;
            for (int k : v.at("witness_path")) p.push_back(k - 1);
            g.witness_.push_back(std::move(p));
        } else {
            have_witness = false;
        }
    }
    if (!have_witness) g.witness_.clear();
    for (const auto& e : j.at("edges"))
        g.edges_.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());

    const std::size_t nv = g.vertices_.size();
    g.adj_.assign(nv, {});
    std::set<std::pair<int, int>> es;
    for (auto [a, b] : g.edges_) es.insert({std::min(a, b), std::max(a, b)});
    g.edges_.assign(es.begin(), es.end());
    for (auto [a, b] : g.edges_) {
        g.adj_.at(a).push_back(b);
        g.adj_.at(b).push_back(a);
    }
    for (auto& l : g.adj_) std::sort(l.begin(), l.end());
    for (std::size_t i = 0; i < nv; ++i) {
        g.index_.emplace(g.vertices_[i].keys(), static_cast<int>(i));
        for (const auto& k : g.vertices_[i].keys())
            g.registry_[k].push_back(static_cast<int>(i));
    }
    return g;
}

std::string ExchangeGraph::to_dot(
    const std::vector<std::string>* highlight_face) const {
    std::ostringstream os;
    os << "graph exchange {\n  node [shape=box];\n";
    std::vector<bool> in_face(vertices_.size(), false);
    if (highlight_face) {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            in_face[i] = vertices_[i].contains_all(*highlight_face);
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        os << "  v" << i << " [label=\"";
        const auto& keys = vertices_[i].keys();
        for (std::size_t k = 0; k < keys.size(); ++k)
            os << (k ? "\\n" : "") << keys[k];
        os << "\"";
        if (in_face[i]) os << ", style=filled, fillcolor=lightblue";
        os << "];\n";
    }
    for (auto [a, b] : edges_) {
        os << "  v" << a << " -- v" << b;
        if (in_face[a] && in_face[b]) os << " [penwidth=2]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace exg
