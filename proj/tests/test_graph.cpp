#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "ktds/error.hpp"
#include "ktds/graph.hpp"
#include "ktds/graph_corpus.hpp"
#include "ktds/graph_expr.hpp"
#include "ktds/vertex_set.hpp"

using namespace ktds;

namespace {

void check_symmetric(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    std::set<std::size_t> seen;
    for (auto u : g.neighbors(v)) {
      REQUIRE(u != v);
      REQUIRE(seen.insert(u).second);
      REQUIRE(g.has_edge(u, v));
      REQUIRE(g.has_edge(v, u));
    }
    REQUIRE(g.degree(v) == seen.size());
  }
}

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out{complete(1), complete(4), cycle(3), cycle(6), path(5), petersen(), star_subdivide(cycle(5))};
  for (const auto& ng : connected_graph_classes(4)) out.push_back(ng.graph);
  return out;
}

}  // namespace

TEST_CASE("complete graphs") {
  CHECK(complete(1).size() == 0);
  const Graph k4 = complete(4);
  CHECK(k4.size() == 6);
  CHECK(k4.min_degree() == 3);
  CHECK(k4.max_degree() == 3);
  const Graph k3 = complete(3);
  CHECK(k3.min_degree() == 2);
  CHECK(k3.max_degree() == 2);
  CHECK_THROWS_AS(complete(0), InvalidArgument);
}

TEST_CASE("cycles and the Petersen graph") {
  CHECK(cycle(5).size() == 5);
  CHECK_THROWS_AS(cycle(2), InvalidArgument);
  const Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  CHECK(p.min_degree() == 3);
  CHECK(p.max_degree() == 3);
  // Girth 5: no triangles or 4-cycles, so adjacent vertices share no neighbor and
  // nonadjacent ones share exactly one.
  for (std::size_t u = 0; u < 10; ++u) {
    for (std::size_t v = u + 1; v < 10; ++v) {
      int common = 0;
      for (std::size_t w = 0; w < 10; ++w) common += p.has_edge(u, w) && p.has_edge(v, w);
      CHECK(common == (p.has_edge(u, v) ? 0 : 1));
    }
  }
  const Graph c3 = cycle(3);
  CHECK(c3.size() == complete(3).size());
  CHECK(c3.degree_sequence() == complete(3).degree_sequence());
}

TEST_CASE("adjacency is symmetric after every constructor") {
  for (const Graph& g : sample_graphs()) check_symmetric(g);
  for (const Graph& g : sample_graphs()) check_symmetric(cartesian_product(g, cycle(4)));
}

TEST_CASE("edge list construction merges duplicates and rejects bad edges") {
  const std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}, {0, 1}};
  const Graph g = Graph::from_edges(3, edges);
  CHECK(g.size() == 2);
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), InvalidArgument);
  const std::vector<Edge> out_of_range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, out_of_range), InvalidArgument);
}

TEST_CASE("Cartesian product structure") {
  const Graph rook = cartesian_product(complete(3), complete(4));
  CHECK(rook.order() == 12);
  CHECK(rook.min_degree() == 5);
  CHECK(rook.max_degree() == 5);

  const Graph k1m = cartesian_product(complete(1), complete(5));
  CHECK(k1m == complete(5));

  const Graph c4 = cartesian_product(complete(2), complete(2));
  CHECK(c4.order() == 4);
  CHECK(c4.size() == 4);
  CHECK(c4.min_degree() == 2);
  CHECK(c4.max_degree() == 2);
  CHECK(is_connected(c4));

  SUBCASE("edge count formula over generated pairs") {
    for (const Graph& g : sample_graphs()) {
      for (const Graph& h : sample_graphs()) {
        const Graph gh = cartesian_product(g, h);
        CHECK(gh.size() == g.order() * h.size() + h.order() * g.size());
      }
    }
  }

  SUBCASE("adjacency rule with g-major numbering") {
    const Graph g = path(3);
    const Graph h = cycle(4);
    const Graph gh = cartesian_product(g, h);
    for (std::size_t a = 0; a < gh.order(); ++a) {
      for (std::size_t b = 0; b < gh.order(); ++b) {
        const auto pa = ProductVertex::unflatten(a, h.order());
        const auto pb = ProductVertex::unflatten(b, h.order());
        const bool expected = (pa.g_index == pb.g_index && h.has_edge(pa.h_index, pb.h_index)) ||
                              (pa.h_index == pb.h_index && g.has_edge(pa.g_index, pb.g_index));
        CHECK(gh.has_edge(a, b) == expected);
      }
    }
  }

  SUBCASE("rook's graphs are (n+m-2)-regular") {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (std::size_t m = 1; m <= 8; ++m) {
        const Graph r = cartesian_product(complete(n), complete(m));
        CHECK(r.min_degree() == n + m - 2);
        CHECK(r.max_degree() == n + m - 2);
      }
    }
  }

  CHECK_THROWS_AS(cartesian_product(Graph{}, complete(2)), InvalidArgument);
}

TEST_CASE("product vertex flattening is a bijection") {
  const std::size_t g_order = 4;
  const std::size_t h_order = 7;
  std::set<std::size_t> ids;
  for (std::size_t g = 0; g < g_order; ++g) {
    for (std::size_t h = 0; h < h_order; ++h) {
      const ProductVertex pv{g, h};
      const std::size_t id = pv.flatten(h_order);
      CHECK(id < g_order * h_order);
      CHECK(ProductVertex::unflatten(id, h_order) == pv);
      ids.insert(id);
    }
  }
  CHECK(ids.size() == g_order * h_order);
}

TEST_CASE("star_subdivide") {
  const Graph c5 = cycle(5);
  const Graph star = star_subdivide(c5, 1);
  CHECK(star.order() == 20);
  CHECK(star.size() == 5 + 3 * 5);

  const Graph k2 = star_subdivide(complete(2), 1);
  CHECK(k2.order() == 6);
  CHECK(k2.size() == 5);
  CHECK(is_connected(k2));
  CHECK(k2.max_degree() == 2);  // a path on 6 vertices
  CHECK(k2.degree_sequence() == std::vector<std::size_t>{2, 2, 2, 2, 1, 1});

  for (std::size_t p = 1; p <= 3; ++p) {
    const Graph g = petersen();
    const Graph s = star_subdivide(g, p);
    CHECK(s.order() == g.order() * (1 + p) + 2 * g.size());
    for (std::size_t v = 0; v < g.order(); ++v) CHECK(s.degree(v) == g.degree(v) + p);
    // Originals are pairwise at distance >= 3.
    for (std::size_t u = 0; u < g.order(); ++u) {
      for (std::size_t v = 0; v < g.order(); ++v) CHECK_FALSE(s.has_edge(u, v));
    }
  }
  CHECK_THROWS_AS(star_subdivide(c5, 0), InvalidArgument);
}

TEST_CASE("spanning subgraphs") {
  CHECK(is_spanning_subgraph(cycle(4), complete(4)));
  CHECK_FALSE(is_spanning_subgraph(complete(4), cycle(4)));
  CHECK(is_spanning_subgraph(petersen(), petersen()));
  CHECK_THROWS_AS(is_spanning_subgraph(cycle(4), complete(5)), InvalidArgument);
}

TEST_CASE("disjoint unions of K2") {
  CHECK(is_disjoint_union_of_k2(complete(2)));
  const std::vector<Edge> matching{{0, 1}, {2, 3}};
  CHECK(is_disjoint_union_of_k2(Graph::from_edges(4, matching)));
  CHECK_FALSE(is_disjoint_union_of_k2(complete(3)));
  CHECK_FALSE(is_disjoint_union_of_k2(complete(1)));
  CHECK_FALSE(is_disjoint_union_of_k2(path(3)));
}

TEST_CASE("graph expressions") {
  CHECK(parse_graph_expr("K3xK4") == cartesian_product(complete(3), complete(4)));
  CHECK(parse_graph_expr("P") == petersen());
  CHECK(parse_graph_expr("star(C5,1)") == star_subdivide(cycle(5), 1));
  CHECK(parse_graph_expr(" ( K2 x C4 ) x K2 ") ==
        cartesian_product(cartesian_product(complete(2), cycle(4)), complete(2)));
  CHECK(parse_graph_expr("star(K2xK2, 2)") == star_subdivide(cartesian_product(complete(2), complete(2)), 2));

  SUBCASE("errors carry positions") {
    try {
      parse_graph_expr("K3xQ");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(parse_graph_expr(""), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("K3x"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("star(C5"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("K3 K4"), ParseError);
    CHECK_THROWS_AS(parse_graph_expr("C2"), InvalidArgument);
    CHECK_THROWS_AS(parse_graph_expr("@/nonexistent/graph.txt"), Error);
  }

  SUBCASE("edge-list files") {
    const auto file = std::filesystem::temp_directory_path() / "ktds_test_edges.txt";
    {
      std::ofstream out(file);
      out << "4\n0 1\n1 2\n2 3\n3 0\n1 0\n";
    }
    const Graph g = parse_graph_expr("@" + file.string());
    CHECK(g.order() == 4);
    CHECK(g.size() == 4);
    CHECK(parse_graph_expr("K2x@" + file.string()) == cartesian_product(complete(2), g));
    std::filesystem::remove(file);
  }
}

TEST_CASE("edge-list round trip") {
  for (const Graph& g : sample_graphs()) {
    std::stringstream buffer;
    write_edge_list(buffer, g);
    CHECK(read_edge_list(buffer) == g);
  }
  std::istringstream bad("3\n0 x\n");
  CHECK_THROWS_AS(read_edge_list(bad), ParseError);
}

TEST_CASE("vertex sets") {
  VertexSet s(70, {0, 3, 69});
  CHECK(s.size() == 3);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(68));
  CHECK(s.to_string() == "{0, 3, 69}");
  s.erase(3);
  CHECK(s.indices() == std::vector<std::size_t>{0, 69});
  CHECK_THROWS_AS(s.insert(70), InvalidArgument);
  CHECK(VertexSet::full(5).size() == 5);
  CHECK(VertexSet::from_word(5, 0b10110).indices() == std::vector<std::size_t>{1, 2, 4});
  CHECK_THROWS_AS(VertexSet::from_word(3, 0b1000), InvalidArgument);
  CHECK(VertexSet(4).empty());
}

TEST_CASE("connected graph classes") {
  const std::size_t expected[] = {1, 1, 2, 6, 21};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for (const auto& ng : connected_graph_classes(5)) count += ng.graph.order() == n;
    CHECK(count == expected[n - 1]);
  }
  const auto classes = connected_graph_classes(5);
  CHECK(classes.size() == 31);
  std::set<std::uint64_t> codes;
  for (const auto& ng : classes) {
    CHECK(is_connected(ng.graph));
    codes.insert(brute_force_canonical_code(ng.graph) * 16 + ng.graph.order());
  }
  CHECK(codes.size() == classes.size());
  CHECK(standard_generators().size() == 9);
}

TEST_CASE("random connected graphs") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t order = 1 + static_cast<std::size_t>(t % 12);
    const Graph g = random_connected_graph(order, 0.3, rng);
    CHECK(g.order() == order);
    CHECK(is_connected(g));
    check_symmetric(g);
  }
}
