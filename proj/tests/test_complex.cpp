#include <doctest.h>

#include <chrono>

#include "woideal/complex.hpp"
#include "woideal/errors.hpp"

using namespace woideal;

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

FaceMask face(std::initializer_list<int> vs) {
  FaceMask m = 0;
  for (int v : vs) m |= bit(static_cast<VertexId>(v));
  return m;
}

SimplicialComplex hollow_triangle() { return SimplicialComplex(names(3), {face({0, 1}), face({1, 2}), face({0, 2})}); }

// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane() {
  return SimplicialComplex(names(6), {face({0, 1, 2}), face({0, 2, 3}), face({0, 3, 4}), face({0, 4, 5}),
                                      face({0, 5, 1}), face({1, 2, 4}), face({2, 3, 5}), face({3, 4, 1}),
                                      face({4, 5, 2}), face({5, 1, 3})});
}

std::vector<std::size_t> betti(const SimplicialComplex& c, Field f) { return reduced_homology_ranks(c, f).reduced_betti; }

}  // namespace

TEST_SUITE("simplicial complexes") {
  TEST_CASE("facets are reduced to maximal faces") {
    const SimplicialComplex c(names(3), {face({0}), face({0, 1}), face({0, 1}), face({2})});
    CHECK(c.facets() == std::vector<FaceMask>{face({0, 1}), face({2})});
    CHECK(c.dimension() == 1);
    CHECK_FALSE(c.is_pure());
    CHECK(c.contains(face({1})));
    CHECK_FALSE(c.contains(face({1, 2})));
    CHECK(c.vertices() == face({0, 1, 2}));
  }

  TEST_CASE("faces, f-vector and Euler characteristic") {
    const auto c = hollow_triangle();
    CHECK(c.f_vector() == std::vector<std::size_t>{1, 3, 3});
    CHECK(c.reduced_euler_characteristic() == -1);
    const auto faces = c.faces_by_dimension();
    CHECK(faces[1] == std::vector<FaceMask>{face({0}), face({1}), face({2})});
  }

  TEST_CASE("links") {
    const SimplicialComplex c(names(4), {face({0, 1, 2}), face({0, 3})});
    CHECK(c.link(face({0})).facets() == std::vector<FaceMask>{face({1, 2}), face({3})});
    CHECK(c.link(face({1, 2})).facets() == std::vector<FaceMask>{face({0})});
    CHECK(c.link(0).facets() == c.facets());
    CHECK_THROWS_AS(c.link(face({1, 3})), InvalidInput);
  }

  TEST_CASE("the void complex and oversized faces are rejected") {
    CHECK_THROWS_AS(SimplicialComplex(names(2), {}), InvalidInput);
    CHECK_THROWS_AS(SimplicialComplex(names(2), {face({2})}), InvalidInput);
  }

  TEST_CASE("boundary matrices compose to zero") {
    const auto c = projective_plane();
    const auto faces = c.faces_by_dimension();
    const auto d2 = boundary_matrix(faces, 2);
    const auto d1 = boundary_matrix(faces, 1);
    CHECK(d2.columns.size() == 10);
    CHECK(d2.rows == 15);
    for (const auto& column : d2.columns) {
      std::vector<long long> image(d1.rows, 0);
      for (auto [r, s] : column)
        for (auto [rr, ss] : d1.columns[r]) image[rr] += s * ss;
      for (long long v : image) CHECK(v == 0);
    }
    CHECK(boundary_matrix(faces, 3).columns.empty());
  }

  TEST_CASE("ranks over both fields") {
    const auto faces = projective_plane().faces_by_dimension();
    CHECK(rank_over(Field::F2, boundary_matrix(faces, 2)) == 9);
    CHECK(rank_over(Field::Q, boundary_matrix(faces, 2)) == 10);
  }
}

TEST_SUITE("reduced homology") {
  TEST_CASE("hollow triangle is a circle") {
    for (Field f : {Field::F2, Field::Q}) {
      const auto h = reduced_homology_ranks(hollow_triangle(), f);
      CHECK(h.betti(0) == 0);
      CHECK(h.betti(1) == 1);
      CHECK(h.euler_characteristic() == hollow_triangle().reduced_euler_characteristic());
    }
  }

  TEST_CASE("two isolated points") {
    const SimplicialComplex c(names(2), {face({0}), face({1})});
    CHECK(betti(c, Field::F2) == std::vector<std::size_t>{0, 1});
    CHECK(betti(c, Field::Q) == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("full simplex is acyclic") {
    const SimplicialComplex c(names(4), {face({0, 1, 2, 3})});
    CHECK(betti(c, Field::F2) == std::vector<std::size_t>(5, 0));
    CHECK(betti(c, Field::Q) == std::vector<std::size_t>(5, 0));
  }

  TEST_CASE("the empty face alone has reduced homology in degree -1") {
    const SimplicialComplex c(names(2), {0});
    CHECK(c.dimension() == -1);
    CHECK(betti(c, Field::Q) == std::vector<std::size_t>{1});
  }

  TEST_CASE("projective plane: torsion shows over F2 only") {
    CHECK(betti(projective_plane(), Field::F2) == std::vector<std::size_t>{0, 0, 1, 1});
    CHECK(betti(projective_plane(), Field::Q) == std::vector<std::size_t>{0, 0, 0, 0});
  }

  TEST_CASE("torus") {
    std::vector<FaceMask> facets;
    for (int i = 0; i < 7; ++i) {
      facets.push_back(face({i, (i + 1) % 7, (i + 3) % 7}));
      facets.push_back(face({i, (i + 2) % 7, (i + 3) % 7}));
    }
    const SimplicialComplex torus(names(7), facets);
    CHECK(betti(torus, Field::F2) == std::vector<std::size_t>{0, 0, 2, 1});
    CHECK(betti(torus, Field::Q) == std::vector<std::size_t>{0, 0, 2, 1});
  }

  TEST_CASE("capacity and deadline") {
    CHECK_THROWS_AS(reduced_homology_ranks(SimplicialComplex(names(17), {face({0})}), Field::F2), CapacityError);
    const auto past = Deadline(std::chrono::steady_clock::now() - std::chrono::seconds(1));
    CHECK(past.expired());
    CHECK_THROWS_AS(is_cm_reisner(projective_plane(), Field::Q, 16, past), TimeoutError);
    CHECK_FALSE(Deadline{}.expired());
  }
}

TEST_SUITE("Reisner criterion") {
  TEST_CASE("complex of the 4-cycle edge ideal is not CM") {
    const SimplicialComplex c(names(4), {face({0, 2}), face({1, 3})});
    CHECK_FALSE(is_cm_reisner(c, Field::F2));
    CHECK_FALSE(is_cm_reisner(c, Field::Q));
  }

  TEST_CASE("hollow triangle and a single point are CM") {
    CHECK(is_cm_reisner(hollow_triangle(), Field::F2));
    CHECK(is_cm_reisner(SimplicialComplex(names(1), {face({0})}), Field::Q));
  }

  TEST_CASE("non-pure complexes are not CM") {
    CHECK_FALSE(is_cm_reisner(SimplicialComplex(names(3), {face({0, 1}), face({2})}), Field::Q));
  }

  TEST_CASE("projective plane depends on the field") {
    CHECK_FALSE(is_cm_reisner(projective_plane(), Field::F2));
    CHECK(is_cm_reisner(projective_plane(), Field::Q));
  }

  TEST_CASE("a cone is CM exactly when its base is") {
    const SimplicialComplex cone_over_points(names(3), {face({0, 2}), face({1, 2})});
    CHECK(is_cm_reisner(cone_over_points, Field::F2));
    const SimplicialComplex cone_over_square(names(5), {face({0, 2, 4}), face({1, 3, 4})});
    CHECK_FALSE(is_cm_reisner(cone_over_square, Field::F2));
  }

  TEST_CASE("two triangles sharing a vertex are not CM") {
    const SimplicialComplex bowtie(names(5), {face({0, 1, 2}), face({2, 3, 4})});
    CHECK_FALSE(is_cm_reisner(bowtie, Field::F2));
    CHECK_FALSE(is_cm_reisner(bowtie, Field::Q));
  }
}
