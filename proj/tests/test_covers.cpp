#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "structural.hpp"
#include "woideal/covers.hpp"
#include "woideal/errors.hpp"

using namespace woideal;

namespace {

WeightedOrientedGraph graph(std::vector<std::uint64_t> weights, std::vector<Arc> arcs) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= weights.size(); ++i) names.push_back("x" + std::to_string(i));
  return WeightedOrientedGraph::from_indices(names, std::move(weights), std::move(arcs));
}

// x1 -> x2 -> x3
WeightedOrientedGraph path(std::uint64_t w2, std::uint64_t w3) { return graph({1, w2, w3}, {{0, 1}, {1, 2}}); }

// x1 -> x2 -> x3 -> x1
WeightedOrientedGraph triangle(std::uint64_t w) { return graph({w, w, w}, {{0, 1}, {1, 2}, {2, 0}}); }

std::vector<VertexMask> masks(const std::vector<VertexCover>& covers) {
  std::vector<VertexMask> out;
  for (const auto& c : covers) out.push_back(c.members);
  return out;
}

std::vector<VertexMask> masks(const std::vector<CoverPartition>& covers) {
  std::vector<VertexMask> out;
  for (const auto& c : covers) out.push_back(c.cover);
  return out;
}

constexpr VertexMask X1 = 1, X2 = 2, X3 = 4;

}  // namespace

TEST_SUITE("minimal vertex covers") {
  TEST_CASE("single edge") {
    CHECK(masks(minimal_vertex_covers(underlying(graph({1, 1}, {{0, 1}})))) == std::vector<VertexMask>{X1, X2});
  }

  TEST_CASE("path") {
    CHECK(masks(minimal_vertex_covers(underlying(path(1, 1)))) == std::vector<VertexMask>{X2, X1 | X3});
  }

  TEST_CASE("triangle") {
    CHECK(masks(minimal_vertex_covers(underlying(triangle(1)))) ==
          std::vector<VertexMask>{X1 | X2, X1 | X3, X2 | X3});
  }

  TEST_CASE("edgeless graph: the empty cover") {
    CHECK(masks(minimal_vertex_covers(underlying(graph({1, 1}, {})))) == std::vector<VertexMask>{0});
  }

  TEST_CASE("cover predicates") {
    const auto g = underlying(path(1, 1));
    CHECK(is_vertex_cover(g, X2));
    CHECK_FALSE(is_vertex_cover(g, X1));
    CHECK(is_minimal_vertex_cover(g, X1 | X3));
    CHECK_FALSE(is_minimal_vertex_cover(g, X1 | X2));
  }

  TEST_CASE("exact-mode cap") {
    std::vector<std::uint64_t> weights(25, 1);
    const auto g = graph(weights, {});
    CHECK_THROWS_AS(minimal_vertex_covers(underlying(g)), CapacityError);
    CHECK_THROWS_AS(strong_vertex_covers(g), CapacityError);
    CHECK_NOTHROW(minimal_vertex_covers(underlying(g), 25));
    CHECK_THROWS_AS(check_exact_capacity(5, 4), CapacityError);
  }
}

TEST_SUITE("cover partition") {
  TEST_CASE("C = {x2, x3} on the path") {
    const auto p = cover_partition(path(2, 2), X2 | X3);
    CHECK(p.l1 == 0);
    CHECK(p.l2 == X2);
    CHECK(p.l3 == X3);
  }

  TEST_CASE("the whole oriented triangle is L3") {
    const auto p = cover_partition(triangle(1), X1 | X2 | X3);
    CHECK(p.l1 == 0);
    CHECK(p.l2 == 0);
    CHECK(p.l3 == (X1 | X2 | X3));
  }

  TEST_CASE("C = {x2} on the path") {
    const auto p = cover_partition(path(2, 2), X2);
    CHECK(p.l1 == X2);
    CHECK(p.l2 == 0);
    CHECK(p.l3 == 0);
  }

  TEST_CASE("non-covers are rejected") { CHECK_THROWS_AS(cover_partition(path(1, 1), X1), InvalidInput); }
}

TEST_SUITE("strong vertex covers") {
  TEST_CASE("heavy L2 member feeding L3") { CHECK(is_strong_cover(path(2, 2), X2 | X3)); }

  TEST_CASE("unit weight feeder is not enough") { CHECK_FALSE(is_strong_cover(path(1, 2), X2 | X3)); }

  TEST_CASE("minimal covers are strong") {
    for (const auto& g : {path(1, 1), path(2, 3), triangle(2)})
      for (const auto& c : minimal_vertex_covers(underlying(g))) CHECK(is_strong_cover(g, c.members));
  }

  TEST_CASE("non-covers are never strong") { CHECK_FALSE(is_strong_cover(path(2, 2), X3)); }

  TEST_CASE("single edge with unit weights") {
    CHECK(masks(strong_vertex_covers(graph({1, 1}, {{0, 1}}))) == std::vector<VertexMask>{X1, X2});
  }

  TEST_CASE("path with weights (1,2,2)") {
    const auto covers = strong_vertex_covers(path(2, 2));
    CHECK(masks(covers) == std::vector<VertexMask>{X2, X1 | X3, X2 | X3});
    CHECK(covers[2].l3 == X3);
  }

  TEST_CASE("oriented triangle with weight 2") {
    CHECK(masks(strong_vertex_covers(triangle(2))) ==
          std::vector<VertexMask>{X1 | X2, X1 | X3, X2 | X3, X1 | X2 | X3});
    CHECK(masks(strong_vertex_covers(triangle(1))) == std::vector<VertexMask>{X1 | X2, X1 | X3, X2 | X3});
  }

  TEST_CASE("enumeration matches brute force and is sweep-order independent") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 400; ++i) {
      const auto d = testing::random_instance(rng, 9);
      const auto forward = strong_vertex_covers(d, kDefaultExactCap, SweepOrder::forward);
      const auto reverse = strong_vertex_covers(d, kDefaultExactCap, SweepOrder::reverse);
      CHECK(forward == reverse);
      CHECK(masks(forward) == bf::strong_covers(d));
      for (const auto& p : forward) CHECK(p == cover_partition(d, p.cover));
    }
  }
}

TEST_SUITE("arc masks") {
  TEST_CASE("records adjacency and heavy vertices") {
    const ArcMasks m(path(2, 1));
    CHECK(m.n == 3);
    CHECK(m.out[0] == X2);
    CHECK(m.in[2] == X2);
    CHECK(m.neighbors[1] == (X1 | X3));
    CHECK(m.heavy == X2);
  }
}
