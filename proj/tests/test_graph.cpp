#include "exgraph/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using exg::Cluster;
using exg::ExchangeGraph;
using exg::LabeledSeed;

namespace {

ExchangeGraph enumerate_matrix(std::vector<std::vector<long long>> b,
                               std::size_t max_vertices = 100000,
                               std::size_t max_depth = 64) {
    return exg::enumerate_graph(
        LabeledSeed::initial(exg::ExchangeMatrix(std::move(b))), max_vertices,
        max_depth);
}

ExchangeGraph a2_graph() { return enumerate_matrix({{0, 1}, {-1, 0}}); }
ExchangeGraph a3_graph() {
    return enumerate_matrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
}

int vertex_of(const ExchangeGraph& g, std::vector<std::string> keys) {
    int v = g.find(Cluster::from_keys(std::move(keys)));
    REQUIRE(v >= 0);
    return v;
}

}  // namespace

TEST_CASE("A2 pentagon") {
    ExchangeGraph g = a2_graph();
    CHECK(g.complete());
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 5);
    for (std::size_t v = 0; v < 5; ++v) CHECK(g.degree(static_cast<int>(v)) == 2);

    // the five clusters: {x1,x2}, {(1+x2)/x1, x2}, {(1+x2)/x1, (1+x1+x2)/(x1x2)},
    // {(1+x1+x2)/(x1x2), (1+x1)/x2}, {(1+x1)/x2, x1}
    LabeledSeed s = LabeledSeed::initial(exg::ExchangeMatrix({{0, 1}, {-1, 0}}));
    std::string x1 = "x1", x2 = "x2";
    std::string m1 = s.mutated(0).variables()[0].to_string();
    std::string m12 = s.mutated(0).mutated(1).variables()[1].to_string();
    std::string m2 = s.mutated(1).variables()[1].to_string();
    CHECK(m1 == "x1^-1*x2 + x1^-1");
    CHECK(m2 == "x1*x2^-1 + x2^-1");
    CHECK(m12 == "x2^-1 + x1^-1 + x1^-1*x2^-1");
    std::set<std::vector<std::string>> expected{
        {x1, x2}, {m1, x2}, {m1, m12}, {m12, m2}, {m2, x1}};
    std::set<std::vector<std::string>> got;
    for (const auto& c : g.vertices()) {
        auto k = c.keys();
        std::sort(k.begin(), k.end());
        got.insert(k);
    }
    std::set<std::vector<std::string>> expected_sorted;
    for (auto k : expected) {
        std::sort(k.begin(), k.end());
        expected_sorted.insert(k);
    }
    CHECK(got == expected_sorted);
}

TEST_CASE("finite-type counts") {
    ExchangeGraph b2 = enumerate_matrix({{0, 1}, {-2, 0}});
    CHECK(b2.num_vertices() == 6);
    CHECK(b2.num_edges() == 6);
    ExchangeGraph g2 = enumerate_matrix({{0, 1}, {-3, 0}});
    CHECK(g2.num_vertices() == 8);
    CHECK(g2.num_edges() == 8);
    ExchangeGraph a3 = a3_graph();
    CHECK(a3.num_vertices() == 14);
    CHECK(a3.num_edges() == 21);
    for (std::size_t v = 0; v < 14; ++v) CHECK(a3.degree(static_cast<int>(v)) == 3);
}

TEST_CASE("adjacency equals the intersection criterion") {
    ExchangeGraph g = a3_graph();
    std::set<std::pair<int, int>> from_mutation(g.edges().begin(),
                                                g.edges().end());
    std::set<std::pair<int, int>> from_intersection;
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
        for (int w = v + 1; w < static_cast<int>(g.num_vertices()); ++w)
            if (g.cluster(v).intersection(g.cluster(w)).size() == g.rank() - 1)
                from_intersection.insert({v, w});
    CHECK(from_mutation == from_intersection);
}

TEST_CASE("abstract axioms on the enumerated variable set") {
    // each (n-1)-subset of a cluster lies in exactly two clusters
    ExchangeGraph g = a3_graph();
    std::set<std::vector<std::string>> subsets;
    for (const auto& c : g.vertices()) {
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            std::vector<std::string> u;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) u.push_back(c.keys()[i]);
            std::sort(u.begin(), u.end());
            subsets.insert(std::move(u));
        }
    }
    for (const auto& u : subsets) {
        int count = 0;
        for (const auto& c : g.vertices())
            if (c.contains_all(u)) ++count;
        CHECK(count == 2);
    }
}

TEST_CASE("faces") {
    ExchangeGraph g = a2_graph();
    exg::Face whole = exg::face_of(g, {});
    CHECK(whole.vertices.size() == 5);
    CHECK(whole.edges.size() == 5);

    int v0 = vertex_of(g, {"x1", "x2"});
    exg::Face point = exg::face_of(g, g.cluster(v0).keys());
    CHECK(point.vertices == std::vector<int>{v0});
    CHECK(point.edges.empty());

    exg::Face edge = exg::face_of(g, {"x2"});
    CHECK(edge.vertices.size() == 2);
    CHECK(edge.edges.size() == 1);

    CHECK_THROWS_AS(exg::face_of(g, {"x1", "x1^-1*x2 + x1^-1"}), exg::NotAFace);
}

TEST_CASE("face order interval property") {
    ExchangeGraph g = a3_graph();
    const auto& keys = g.cluster(0).keys();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        exg::Face small = exg::face_of(g, {keys[0], keys[i]});
        exg::Face big = exg::face_of(g, {keys[i]});
        for (int v : small.vertices)
            CHECK(std::binary_search(big.vertices.begin(), big.vertices.end(), v));
    }
}

TEST_CASE("minimal face") {
    ExchangeGraph g = a2_graph();
    int v0 = vertex_of(g, {"x1", "x2"});
    CHECK(exg::minimal_face(g, v0, v0).vertices == std::vector<int>{v0});

    int v1 = g.neighbors(v0)[0];
    exg::Face f = exg::minimal_face(g, v0, v1);
    CHECK(f.defining.size() == 1);
    CHECK(f.edges.size() == 1);

    // clusters sharing nothing give the whole graph
    LabeledSeed s = LabeledSeed::initial(exg::ExchangeMatrix({{0, 1}, {-1, 0}}));
    int far = g.find(Cluster(s.mutated(0).mutated(1).variables()));
    REQUIRE(far >= 0);
    CHECK(exg::minimal_face(g, v0, far).vertices.size() == 5);
}

TEST_CASE("geodesics") {
    ExchangeGraph g = a2_graph();
    int v0 = vertex_of(g, {"x1", "x2"});
    auto self = exg::geodesics(g, v0, v0);
    CHECK(self.paths == std::vector<std::vector<int>>{{v0}});

    int v1 = g.neighbors(v0)[0];
    auto adj = exg::geodesics(g, v0, v1);
    CHECK(adj.paths == std::vector<std::vector<int>>{{v0, v1}});

    // distance-2 pairs in the pentagon have a unique geodesic
    auto dist = exg::bfs_distances(g, v0);
    for (int w = 0; w < 5; ++w)
        if (dist[w] == 2) {
            auto gs = exg::geodesics(g, v0, w);
            CHECK(gs.paths.size() == 1);
            CHECK(gs.paths[0].size() == 3);
        }
}

TEST_CASE("geodesic lengths match all-pairs BFS") {
    ExchangeGraph g = a3_graph();
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
        auto dist = exg::bfs_distances(g, v);
        for (int w = 0; w < static_cast<int>(g.num_vertices()); ++w) {
            auto gs = exg::geodesics(g, v, w);
            CHECK(!gs.paths.empty());
            for (const auto& p : gs.paths)
                CHECK(p.size() == static_cast<std::size_t>(dist[w]) + 1);
        }
    }
}

TEST_CASE("budgets yield flagged partial graphs") {
    // Markov quiver: infinite type
    ExchangeGraph m = enumerate_matrix({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}},
                                       100000, 5);
    CHECK(!m.complete());
    CHECK(m.num_vertices() > 3);
    CHECK_THROWS_AS(exg::geodesics(m, 0, 1), exg::IncompleteGraph);
    CHECK_THROWS_AS(exg::minimal_face(m, 0, 1), exg::IncompleteGraph);

    ExchangeGraph small = enumerate_matrix({{0, 1}, {-1, 0}}, 3, 64);
    CHECK(!small.complete());
    CHECK(small.num_vertices() <= 3);
}

TEST_CASE("JSON round-trip and DOT") {
    ExchangeGraph g = a2_graph();
    ExchangeGraph h = ExchangeGraph::from_json(g.to_json());
    CHECK(h.num_vertices() == g.num_vertices());
    CHECK(h.edges() == g.edges());
    CHECK(h.complete());
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        CHECK(h.cluster(static_cast<int>(v)).keys() ==
              g.cluster(static_cast<int>(v)).keys());

    std::string dot = g.to_dot();
    CHECK(dot.find("graph exchange") != std::string::npos);
    CHECK(dot.find("v0 -- ") != std::string::npos);
}

TEST_CASE("enumeration is deterministic") {
    CHECK(a3_graph().to_json() == a3_graph().to_json());
}
