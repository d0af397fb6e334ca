#include <numeric>
#include <random>

#include "doctest.h"
#include "msl/error.hpp"
#include "msl/moduli_complex.hpp"
#include "msl/parallel.hpp"
#include "oracles.hpp"

using namespace msl;

namespace {

ModuliComplex build_named(const std::string& name) {
  for (const auto& c : oracle::load_corpus(MSL_TEST_DATA_DIR))
    if (c.name == name) return build_complex(c.config.target, c.config.degree);
  FAIL("missing corpus case " << name);
  return {};
}

}  // namespace

TEST_SUITE("moduli_complex") {
  TEST_CASE("gluing matrices of the one- and two-edge configurations") {
    const TargetCurve l = standard_line(2);
    for (int d1 = 1; d1 <= 4; ++d1) {
      const IntMatrix g = gluing_matrix(oracle::single_edge_configuration(d1), l);
      CHECK(g == IntMatrix{{1, -d1, -d1}});
      CHECK(gcd_maximal_minors(g) == 1);
      for (int d2 = 1; d2 <= 4; ++d2) {
        const IntMatrix g2 = gluing_matrix(oracle::double_edge_configuration(d1, d2), l);
        CHECK(g2 == IntMatrix{{1, -d1, 0, -d1, 0}, {1, 0, -d2, 0, -d2}});
        CHECK(gcd_maximal_minors(g2) == std::gcd(d1, d2));
        CHECK(oracle::brute_gcd_maximal_minors(g2) == std::gcd(d1, d2));
      }
    }
  }

  TEST_CASE("gluing matrix rejects non-maximal types") {
    const TargetCurve l = standard_line(2);
    const DegreeSpec sigma{0, {{-1, 0}, {-1, 0}, {0, -1}, {0, -1}, {2, 2}}};
    CHECK_THROWS_AS(gluing_matrix(make_type(sigma, {}), l), DomainError);
  }

  TEST_CASE("gluing rows vanish at every cut point") {
    for (const auto& c : oracle::load_corpus(MSL_TEST_DATA_DIR)) {
      CAPTURE(c.name);
      const ModuliComplex m = build_complex(c.config.target, c.config.degree);
      for (const auto& cell : m.cells) {
        if (!cell.maximal || cell.type.edge_count() == 0) continue;
        const IntMatrix g = gluing_matrix(cell.type, m.target);
        for (const Rational cut : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
          const RatVector res = oracle::gluing_residual(cell.type, m.target, cell.witness, g, cut);
          CHECK(res == RatVector(res.size(), Rational(0)));
        }
        // a wrong entry is detected
        IntMatrix bad = g;
        bad(0, 0) += 1;
        CHECK(oracle::gluing_residual(cell.type, m.target, cell.witness, bad, Rational(1, 2)) !=
              RatVector(g.rows(), Rational(0)));
      }
    }
  }

  TEST_CASE("intro complex") {
    const ModuliComplex m = build_named("intro");
    CHECK(m.covering_degree == 2);
    CHECK(m.expected_dimension == 1);
    CHECK(m.dimension() == 1);
    CHECK(m.pure);
    CHECK(m.cells_of_dimension(1).size() == 4);
    CHECK(m.cells_of_dimension(0).size() == 1);
    for (int id : m.cells_of_dimension(1)) CHECK(m.cells[id].weight == 1);
    CHECK(m.facets.size() == 4);
    const auto report = check_global_balancing(m);
    CHECK(report.balanced);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].neighbors.size() == 4);
  }

  TEST_CASE("embedding is linear on each cell") {
    std::mt19937 rng(41);
    for (const std::string name : {"intro", "line_d2_simple", "two_d2", "line_d1_n2"}) {
      CAPTURE(name);
      const ModuliComplex m = build_named(name);
      const int r = m.target.ambient_dim;
      for (const auto& cell : m.cells) {
        const RatMatrix e = embedding_matrix(cell.type, r);
        const RatVector z = chart_point(cell.type, cell.witness);
        CHECK(mat_vec(e, z) == embed(cell.type, cell.witness, r));
        const CellChart chart = cell_chart(cell.type, m.target);
        CHECK(mat_mul(chart.constraints, chart.lattice) == IntMatrix(chart.constraints.rows(), chart.lattice.cols()));
        CHECK(static_cast<int>(chart.lattice.cols()) == cell.dimension);
      }
    }
  }

  TEST_CASE("faces and primitive normals") {
    const ModuliComplex m = build_named("intro");
    const auto& origin = m.cells[m.cells_of_dimension(0).front()].type;
    for (int id : m.cells_of_dimension(1)) {
      const auto& t = m.cells[id].type;
      CHECK(face_map(t, origin, m.target).has_value());
      CHECK_FALSE(face_map(origin, t, m.target).has_value());
      const RatVector u = primitive_normal(t, origin, m.target);
      CHECK(u != RatVector(u.size(), Rational(0)));
    }
  }

  TEST_CASE("corpus complexes are pure and balanced") {
    for (const auto& c : oracle::load_corpus(MSL_TEST_DATA_DIR)) {
      CAPTURE(c.name);
      const ModuliComplex m = build_complex(c.config.target, c.config.degree);
      CHECK(m.pure);
      CHECK(m.dimension() == m.expected_dimension);
      for (const auto& cell : m.cells) {
        CHECK(cell.dimension == cell_dimension(cell.type));
        if (cell.dimension == m.expected_dimension) CHECK(cell.weight >= 0);
      }
      for (const auto& [f, s] : m.facets) CHECK(m.cells[s].dimension == m.cells[f].dimension + 1);
      CHECK(check_global_balancing(m, false).balanced);
    }
  }

  TEST_CASE("perturbing one weight unbalances its faces") {
    ModuliComplex m = build_named("line_d2_simple");
    const auto top = m.cells_of_dimension(m.expected_dimension);
    REQUIRE_FALSE(top.empty());
    m.cells[top.front()].weight += 1;
    const auto report = check_global_balancing(m);
    CHECK_FALSE(report.balanced);
    bool blamed = false;
    for (const auto& e : report.entries)
      if (!e.balanced)
        for (int nb : e.neighbors) blamed = blamed || nb == top.front();
    CHECK(blamed);
  }

  TEST_CASE("serial and parallel builds agree") {
    const auto corpus = oracle::load_corpus(MSL_TEST_DATA_DIR);
    for (const auto& c : corpus) {
      CAPTURE(c.name);
      BuildOptions serial;
      serial.parallel = false;
      serial.enumerate.parallel = false;
      serial.hurwitz.parallel = false;
      const ModuliComplex a = build_complex(c.config.target, c.config.degree, serial);
      for (int threads : {1, 2, 4}) {
        set_thread_count(threads);
        const ModuliComplex b = build_complex(c.config.target, c.config.degree);
        REQUIRE(a.cells.size() == b.cells.size());
        for (std::size_t k = 0; k < a.cells.size(); ++k) {
          CHECK(a.cells[k].type == b.cells[k].type);
          CHECK(a.cells[k].weight == b.cells[k].weight);
        }
        CHECK(a.facets == b.facets);
      }
      set_thread_count(0);
    }
  }

  TEST_CASE("cell bound") {
    BuildOptions tight;
    tight.enumerate.max_cells = 3;
    const DegreeSpec sigma{0, {{-1, 0}, {-1, 0}, {0, -1}, {0, -1}, {2, 2}}};
    try {
      build_complex(standard_line(2), sigma, tight);
      FAIL("expected BoundExceeded");
    } catch (const BoundExceeded& e) {
      CHECK(e.partial_count() >= 3);
    }
  }
}
