#pragma once

#include "exgraph/seed.hpp"

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace exg {

struct IncompleteGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAFace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-labelled cluster: the n variables of a seed with the order forgotten,
/// stored sorted by the canonical polynomial order. Identity, hashing and
/// containment go through the canonical string keys, so clusters loaded from
/// a JSON file (strings only) interoperate with enumerated ones.
class Cluster {
public:
    explicit Cluster(std::vector<LaurentPoly> vars);
    /// For graphs loaded from JSON; keys must already be canonical renderings.
    static Cluster from_keys(std::vector<std::string> keys);

    std::size_t size() const { return keys_.size(); }
    const std::vector<LaurentPoly>& variables() const { return vars_; }
    const std::vector<std::string>& keys() const { return keys_; }

    bool contains(const std::string& key) const;
    bool contains_all(const std::vector<std::string>& keys) const;
    std::vector<std::string> intersection(const Cluster& o) const;

    bool operator==(const Cluster& o) const { return keys_ == o.keys_; }
    bool operator<(const Cluster& o) const { return keys_ < o.keys_; }

private:
    Cluster() = default;
    std::vector<LaurentPoly> vars_;  // empty for loaded graphs
    std::vector<std::string> keys_;
};

struct ClusterKeyHash {
    std::size_t operator()(const std::vector<std::string>& keys) const;
};

/// Face F_U: the full subgraph on clusters containing U.
struct Face {
    std::vector<std::string> defining;  // U, sorted keys
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
};

/// Exchange graph on non-labelled clusters; edges at (n-1)-intersections.
class ExchangeGraph {
public:
    std::size_t rank() const { return rank_; }
    bool complete() const { return complete_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Cluster>& vertices() const { return vertices_; }
    const Cluster& cluster(int v) const { return vertices_.at(v); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::vector<int>& witness(int v) const { return witness_.at(v); }
    bool has_witnesses() const { return !witness_.empty(); }

    /// Vertex index of a cluster, or -1.
    int find(const Cluster& c) const;
    /// Vertices containing the given variable key.
    const std::vector<int>& vertices_with(const std::string& key) const;
    std::vector<std::string> variable_keys() const;

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    void require_complete(const char* op) const {
        if (!complete_)
            throw IncompleteGraph(std::string(op) + ": graph enumeration is incomplete");
    }

    std::string to_json() const;
    std::string to_dot(const std::vector<std::string>* highlight_face = nullptr) const;
    static ExchangeGraph from_json(const std::string& text);

private:
    friend ExchangeGraph enumerate_graph(const LabeledSeed&, std::size_t,
                                         std::size_t);
    void finalize();

    std::size_t rank_ = 0;
    bool complete_ = false;
    std::vector<Cluster> vertices_;
    std::vector<std::pair<int, int>> edges_;  // i < j, sorted
    std::vector<std::vector<int>> adj_;       // sorted neighbor lists
    std::vector<std::vector<int>> witness_;   // reduced tree path per vertex
    std::unordered_map<std::vector<std::string>, int, ClusterKeyHash> index_;
    std::unordered_map<std::string, std::vector<int>> registry_;
};

/// Breadth-first closure of the initial seed under all n mutations,
/// deduplicated by canonical cluster. Vertices are renumbered by canonical
/// cluster order after closure, so the result is independent of traversal
/// details. Budget exhaustion yields a partial graph with complete() == false.
ExchangeGraph enumerate_graph(const LabeledSeed& initial,
                              std::size_t max_vertices = 100000,
                              std::size_t max_depth = 64);

/// Face of U; throws NotAFace if U is contained in no cluster.
Face face_of(const ExchangeGraph& g, const std::vector<std::string>& u);

/// Minimal face containing both vertices: the face of the cluster intersection.
Face minimal_face(const ExchangeGraph& g, int v, int w);

struct GeodesicSet {
    std::vector<std::vector<int>> paths;  // vertex paths v..w, deterministic order
    std::size_t length = 0;
    bool truncated = false;
};

/// All shortest v->w paths: BFS distance labels from w, then descent from v
/// through strictly distance-decreasing neighbors in ascending index order.
GeodesicSet geodesics(const ExchangeGraph& g, int v, int w,
                      std::size_t max_paths = 100000);

/// BFS distances from v to every vertex.
std::vector<int> bfs_distances(const ExchangeGraph& g, int v);

}  // namespace exg
