// Unit tests for graph-state patterns: measurement-plane generators, the
// structural validator, edge bookkeeping, and generator-built states against
// dense expectations.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mbqc/graph.hpp"
#include "oracle.hpp"

using mbqc::Complex;
using mbqc::GraphStatePattern;
using mbqc::PatternVertex;
using mbqc::Plane;
using mbqc::VertexRole;

namespace {

PatternVertex plus_vertex(int id, VertexRole role) {
  PatternVertex v;
  v.id = id;
  v.role = role;
  v.a = Complex(1.0 / std::sqrt(2.0), 0.0);
  v.b = v.a;
  return v;
}

}  // namespace

TEST_CASE("plane generators are normalized and outcome-orthogonal") {
  const double angles[] = {0.0, 0.3, -1.2, 3.1, 2.0 * 3.14159265358979323846 / 3.0};
  for (Plane plane : {Plane::XY, Plane::YZ, Plane::XZ}) {
    for (double theta : angles) {
      const auto g0 = mbqc::plane_generator(plane, theta, 0, 7);
      const auto g1 = mbqc::plane_generator(plane, theta, 1, 7);
      REQUIRE(g0.qubit == 7);
      REQUIRE(std::abs(std::norm(g0.alpha) + std::norm(g0.beta) - 1.0) < 1e-12);
      REQUIRE(std::abs(std::norm(g1.alpha) + std::norm(g1.beta) - 1.0) < 1e-12);
      const Complex overlap = std::conj(g0.alpha) * g1.alpha + std::conj(g0.beta) * g1.beta;
      REQUIRE(std::abs(overlap) < 1e-12);
    }
  }
  REQUIRE_THROWS_AS(mbqc::plane_generator(Plane::XY, 0.0, 2, 1), mbqc::Error);
}

TEST_CASE("branch probabilities over the two outcomes sum to one") {
  // Three-vertex path, random amplitudes; measuring vertex 2 in any plane
  // must split the norm exactly.
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 30; ++trial) {
    GraphStatePattern p;
    for (int id = 1; id <= 3; ++id) {
      PatternVertex v;
      v.id = id;
      v.role = VertexRole::Output;
      std::tie(v.a, v.b) = oracle::random_pair(rng);
      p.add_vertex(v);
    }
    p.add_edge(1, 2);
    p.add_edge(2, 3);
    const auto full = oracle::generator_state(p.build_state());
    double total = 0.0;
    for (const auto& amp : full) total += std::norm(amp);

    const Plane plane = static_cast<Plane>(trial % 3);
    const double theta = oracle::random_angle(rng);
    double split = 0.0;
    for (int s : {0, 1}) {
      const auto g = mbqc::plane_generator(plane, theta, s, 2);
      const auto proj = oracle::project_qubit(full, 3, 2, g.alpha, g.beta);
      for (const auto& amp : proj) split += std::norm(amp);
    }
    REQUIRE(std::abs(split - total) < 1e-12);
  }
}

TEST_CASE("two-vertex plus pattern builds the CZ|++> state") {
  GraphStatePattern p;
  p.add_vertex(plus_vertex(1, VertexRole::Output));
  p.add_vertex(plus_vertex(2, VertexRole::Output));
  p.add_edge(1, 2);
  const auto state = oracle::generator_state(p.build_state());
  REQUIRE(state.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const double expect = (i == 3) ? -0.5 : 0.5;
    REQUIRE(std::abs(state[i] - Complex(expect)) < 1e-12);
  }
}

TEST_CASE("edge bookkeeping normalizes, rejects self-loops, toggles") {
  GraphStatePattern p;
  p.add_vertex(plus_vertex(1, VertexRole::Output));
  p.add_vertex(plus_vertex(2, VertexRole::Output));
  p.add_edge(2, 1);
  REQUIRE(p.has_edge(1, 2));
  REQUIRE(p.edges.count({1, 2}) == 1);
  REQUIRE_THROWS_AS(p.add_edge(1, 1), mbqc::Error);
  p.add_edge(1, 2);  // idempotent: re-adding keeps the single normalized edge
  REQUIRE(p.edges.size() == 1);
  REQUIRE_THROWS_AS(p.add_edge(1, 3), mbqc::Error);  // unknown endpoint

  p.toggle_edge(1, 2);
  REQUIRE_FALSE(p.has_edge(1, 2));
  p.toggle_edge(2, 1);
  REQUIRE(p.has_edge(1, 2));
  REQUIRE_THROWS_AS(p.toggle_edge(3, 3), mbqc::Error);
}

TEST_CASE("validate flags structural violations") {
  auto base = [] {
    GraphStatePattern p;
    auto v1 = plus_vertex(1, VertexRole::Input);
    v1.measure = mbqc::MeasurementSpec{Plane::XY, 0.0, 0};
    p.add_vertex(v1);
    p.add_vertex(plus_vertex(2, VertexRole::Output));
    p.add_edge(1, 2);
    return p;
  };
  REQUIRE_NOTHROW(base().validate());

  auto p1 = base();
  p1.vertex(1).a = Complex(0.9, 0.0);
  p1.vertex(1).b = Complex(0.0, 0.0);
  REQUIRE_THROWS_WITH(p1.validate(), Catch::Matchers::ContainsSubstring("not normalized"));

  auto p2 = base();
  p2.vertex(2).measure = mbqc::MeasurementSpec{Plane::XY, 0.0, 1};
  REQUIRE_THROWS_WITH(p2.validate(), Catch::Matchers::ContainsSubstring("must not be measured"));

  auto p3 = base();
  p3.vertex(1).measure.reset();
  REQUIRE_THROWS_WITH(p3.validate(), Catch::Matchers::ContainsSubstring("needs a measurement"));

  auto p4 = base();
  auto v3 = plus_vertex(3, VertexRole::Source);
  v3.measure = mbqc::MeasurementSpec{Plane::YZ, 0.4, 0};  // duplicate round 0
  p4.add_vertex(v3);
  p4.add_edge(2, 3);
  REQUIRE_THROWS_WITH(p4.validate(), Catch::Matchers::ContainsSubstring("duplicate measurement order"));

  auto p5 = base();
  p5.edges.insert({1, 9});
  REQUIRE_THROWS_WITH(p5.validate(), Catch::Matchers::ContainsSubstring("unknown vertex"));

  auto p6 = base();
  mbqc::Byproduct bp;
  bp.trigger = 42;
  bp.correction = mbqc::PauliTerm::from_text("X2");
  p6.byproducts.push_back(bp);
  REQUIRE_THROWS_WITH(p6.validate(), Catch::Matchers::ContainsSubstring("unknown vertex"));

  auto p7 = base();
  p7.final_cliffords.push_back(mbqc::CliffordGate::h(5));
  REQUIRE_THROWS_WITH(p7.validate(), Catch::Matchers::ContainsSubstring("unknown vertex"));
}

TEST_CASE("measured_order sorts by round then id; outputs ascend") {
  GraphStatePattern p;
  auto v1 = plus_vertex(1, VertexRole::Input);
  v1.measure = mbqc::MeasurementSpec{Plane::XY, 0.0, 2};
  auto v2 = plus_vertex(2, VertexRole::Source);
  v2.measure = mbqc::MeasurementSpec{Plane::YZ, 0.1, 0};
  auto v3 = plus_vertex(3, VertexRole::Source);
  v3.measure = mbqc::MeasurementSpec{Plane::XY, 0.2, 1};
  p.add_vertex(v1);
  p.add_vertex(v2);
  p.add_vertex(v3);
  p.add_vertex(plus_vertex(5, VertexRole::Output));
  p.add_vertex(plus_vertex(4, VertexRole::Output));
  p.add_edge(1, 2);
  p.add_edge(2, 3);
  p.add_edge(3, 4);
  p.add_edge(3, 5);
  REQUIRE(p.measured_order() == std::vector<int>{2, 3, 1});
  REQUIRE(p.outputs() == std::vector<int>{4, 5});
}

TEST_CASE("role and plane labels round-trip") {
  for (VertexRole r : {VertexRole::Input, VertexRole::Source, VertexRole::Output})
    REQUIRE(mbqc::role_from_label(mbqc::role_label(r)) == r);
  for (Plane pl : {Plane::XY, Plane::YZ, Plane::XZ})
    REQUIRE(mbqc::plane_from_label(mbqc::plane_label(pl)) == pl);
  REQUIRE_THROWS_AS(mbqc::role_from_label("router"), mbqc::Error);
  REQUIRE_THROWS_AS(mbqc::plane_from_label("WX"), mbqc::Error);
}
