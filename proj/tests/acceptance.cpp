#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "msl/error.hpp"
#include "msl/parallel.hpp"
#include "oracles.hpp"

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::filesystem::path g_data_dir = MSL_TEST_DATA_DIR;

msl::ModuliComplex build(const msl::JobConfig& c, bool parallel = true) {
  msl::BuildOptions b;
  b.enumerate.max_cells = c.max_cells;
  b.enumerate.max_degree = c.max_d;
  b.enumerate.max_leaves = c.max_n;
  b.hurwitz.max_degree = c.max_d;
  b.parallel = parallel;
  return msl::build_complex(c.target, c.degree, b);
}

bool all_zero(const msl::RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const msl::Rational& x) { return x == 0; });
}

void criterion_intro(Outcome& o) {
  const auto c = msl::config_from_json(msl::load_json(g_data_dir / "intro.json"), g_data_dir);
  const auto m = build(c);
  const auto top = m.cells_of_dimension(1);
  o.require(m.expected_dimension == 1, "expected dimension 1");
  o.require(m.dimension() == 1, "dimension 1");
  o.require(m.pure, "pure");
  o.require(top.size() == 4, "four maximal cells");
  for (int i : top) o.require(m.cells[i].maximal && m.cells[i].weight == 1, "weight 1");
  const auto rep = msl::check_global_balancing(m);
  o.require(rep.balanced, "balanced");
  for (const auto& e : rep.entries) o.require(all_zero(e.residual), "residual exactly zero");
  o.detail << msl::summary_line(m) << ", " << rep.entries.size() << " codim-1 cell(s) balanced";
}

void criterion_gluing(Outcome& o) {
  const msl::TargetCurve l = msl::standard_line(2);
  for (auto [d1, d2] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {2, 4}, {6, 9}}) {
    const msl::IntMatrix g1 = msl::gluing_matrix(oracle::single_edge_configuration(d1), l);
    const msl::IntMatrix want1{{1, -d1, -d1}};
    o.require(g1 == want1, "(1,-d1,-d1) for d1=" + std::to_string(d1));
    o.require(msl::gcd_maximal_minors(g1) == 1 && oracle::brute_gcd_maximal_minors(g1) == 1, "gcd 1");

    const msl::IntMatrix g2 = msl::gluing_matrix(oracle::double_edge_configuration(d1, d2), l);
    const msl::IntMatrix want2{{1, -d1, 0, -d1, 0}, {1, 0, -d2, 0, -d2}};
    o.require(g2 == want2, "two-edge matrix for (" + std::to_string(d1) + "," + std::to_string(d2) + ")");
    const msl::Integer want_gcd = std::gcd(d1, d2);
    o.require(msl::gcd_maximal_minors(g2) == want_gcd && oracle::brute_gcd_maximal_minors(g2) == want_gcd,
              "gcd(d1,d2)");
  }
  o.detail << "4 parameter pairs, both configurations";
}

void criterion_hurwitz(Outcome& o) {
  using P = msl::HurwitzProblem;
  auto h = [](const P& p) { return msl::hurwitz_number_marked(p); };
  o.require(h(P{2, {{2}, {1, 1}, {2}}}) == 1, "H(2;(2),(1,1),(2)) = 1");
  for (int k = 2; k <= 5; ++k) o.require(h(P{1, std::vector<msl::Partition>(k, {1})}) == 1, "H(1;(1)^k) = 1");
  const P p3{3, {{3}, {3}, {1, 1, 1}}};
  const P p2{2, {{2}, {2}}};
  o.require(oracle::brute_hurwitz(p3) == 2 && h(p3) == 2, "H(3;(3),(3),(1,1,1)) = 2");
  o.require(oracle::brute_hurwitz(p2) == msl::Rational(1, 2) && h(p2) == msl::Rational(1, 2), "H(2;(2),(2)) = 1/2");

  const auto problems = oracle::rigid_problems(4, 4);
  for (const auto& p : problems) {
    const msl::Rational v = h(p);
    o.require(v == oracle::brute_hurwitz(p), "library agrees with brute force");
    o.require(msl::count_factorizations_serial(p) == msl::count_factorizations_unfixed(p),
              "class-representative count equals the unfixed count");
    o.require(msl::count_factorizations_parallel(p) == msl::count_factorizations_serial(p), "parallel count");
    std::vector<std::size_t> perm(p.profiles.size());
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      P q{p.degree, {}};
      for (auto i : perm) q.profiles.push_back(p.profiles[i]);
      o.require(h(q) == v, "profile permutation symmetry");
    }
  }
  o.detail << problems.size() << " rigid problems with d <= 4 checked against the S_d oracle";
}

void criterion_local(Outcome& o) {
  const auto stars = oracle::rdim_one_stars({2, 3}, 5, 8);
  int with_contracted = 0;
  std::size_t rays = 0;
  for (const auto& s : stars) {
    const auto fan = msl::build_local_fan(s);
    const auto b = msl::check_balanced_local(fan, s.n_v());
    o.require(b.balanced && all_zero(b.residual), "balanced star");
    with_contracted += s.contracted_label.has_value();
    rays += fan.size();
  }
  o.require(stars.size() >= 200, "several hundred stars");
  o.detail << stars.size() << " stars (" << with_contracted << " with n_V = 1), " << rays << " rays";
}

void criterion_lemma(Outcome& o) {
  std::vector<msl::VertexStar> stars;
  for (auto& s : oracle::rdim_one_stars({2, 3}, 5, 8))
    if (!s.contracted_label) stars.push_back(std::move(s));
  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::size_t> pick_star(0, stars.size() - 1);
  int samples = 0, kinds[3] = {0, 0, 0};
  std::size_t quads = 0;
  while (samples < 50) {
    const auto& s = stars[pick_star(rng)];
    const auto fan = msl::build_local_fan(s);
    if (fan.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_ray(0, fan.size() - 1);
    const auto& ray = fan[pick_ray(rng)];
    ++samples;
    ++kinds[static_cast<int>(ray.resolution.kind)];
    const auto labels = s.labels();
    for (const auto& pos : msl::four_subsets(static_cast<int>(labels.size()))) {
      const msl::Quad quad{labels[pos[0] - 1], labels[pos[1] - 1], labels[pos[2] - 1], labels[pos[3] - 1]};
      const auto got = msl::ft_multiplicity(ray.resolution, s, quad);
      const auto want = oracle::boundary_multiplicity(ray.resolution, s, quad);
      o.require(got.value == want.value && got.split == want.split, "case table");
      ++quads;

      msl::Rational totals[3] = {0, 0, 0};
      for (const auto& r : fan) {
        const auto f = msl::ft_multiplicity(r.resolution, s, quad);
        if (f.split >= 0) totals[f.split] += r.hurwitz * msl::Rational(f.value);
      }
      o.require(totals[0] == totals[1] && totals[1] == totals[2], "three boundary totals coincide");
    }
  }
  o.require(kinds[0] > 0 && kinds[1] > 0, "both resolution types sampled");
  o.detail << samples << " resolutions (" << kinds[0] << " type I, " << kinds[1] << " type II), " << quads
           << " four-subsets";
}

void criterion_lineality(Outcome& o) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick_n(4, 7);
  int inside = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = pick_n(rng);
    const bool in = k % 2 == 0;
    const msl::RatVector x = in ? oracle::random_in_UN(rng, n) : oracle::random_outside_UN(rng, n);
    const bool direct = msl::is_zero_mod_UN(x, n);
    const bool proj = msl::is_zero_mod_UN_by_projections(x, n);
    o.require(direct == in && proj == in, "membership");
    inside += in;
  }
  o.detail << "200 vectors, " << inside << " inside U_N";
}

struct Built {
  std::string name;
  msl::JobConfig config;
  msl::ModuliComplex complex;
};

std::vector<Built>& corpus() {
  static std::vector<Built> built = [] {
    std::vector<Built> out;
    for (auto& c : oracle::load_corpus(g_data_dir)) out.push_back({c.name, c.config, build(c.config)});
    return out;
  }();
  return built;
}

void criterion_dimension(Outcome& o) {
  int one_vertex = 0, two_vertex = 0;
  for (const auto& b : corpus()) {
    const int want = oracle::formula_dimension(b.config.target, b.config.degree);
    o.require(b.complex.expected_dimension == want, b.name + ": expected dimension");
    o.require(b.complex.dimension() == want, b.name + ": max cell dimension");
    o.require(b.complex.pure, b.name + ": pure");
    o.require(b.complex.covering_degree <= 3 && b.config.degree.size() <= 7, b.name + ": corpus bounds");
    (b.config.target.vertex_count() == 1 ? one_vertex : two_vertex)++;
  }
  o.require(corpus().size() >= 10 && one_vertex > 0 && two_vertex > 0, "corpus coverage");
  o.detail << corpus().size() << " complexes (" << one_vertex << " one-vertex, " << two_vertex << " two-vertex targets)";
}

void criterion_balancing(Outcome& o) {
  int mutations = 0;
  for (const auto& b : corpus()) {
    const auto rep = msl::check_global_balancing(b.complex);
    o.require(rep.balanced, b.name + ": balanced");
    const int top = b.complex.dimension();
    if (top < 1) continue;
    for (int c : b.complex.cells_of_dimension(top)) {
      msl::ModuliComplex mutated = b.complex;
      mutated.cells[c].weight += 1;
      o.require(!msl::check_global_balancing(mutated).balanced, b.name + ": mutation detected");
      ++mutations;
    }
  }
  o.detail << corpus().size() << " complexes balanced, " << mutations << " single-weight mutations all rejected";
}

void criterion_determinism(Outcome& o) {
  int compared = 0;
  for (const auto& b : corpus()) {
    msl::set_thread_count(1);
    const auto serial = build(b.config, false);
    const std::string want = msl::dump(msl::to_json(serial, nullptr));
    const auto want_rep = msl::check_global_balancing(serial, false);
    const std::string want_full = msl::dump(msl::to_json(serial, &want_rep));
    for (int threads : {1, 2, 4}) {
      msl::set_thread_count(threads);
      const auto m = build(b.config, true);
      const auto rep = msl::check_global_balancing(m, true);
      o.require(msl::dump(msl::to_json(m, nullptr)) == want && msl::dump(msl::to_json(m, &rep)) == want_full,
                b.name + ": identical JSON with " + std::to_string(threads) + " threads");
      ++compared;
    }
  }
  msl::set_thread_count(0);
  o.detail << compared << " parallel builds byte-identical to the serial build";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_data_dir = argv[1];
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"intro example", criterion_intro},
      {"gluing matrices", criterion_gluing},
      {"Hurwitz numbers", criterion_hurwitz},
      {"local fans balanced", criterion_local},
      {"boundary multiplicities", criterion_lemma},
      {"lineality test", criterion_lineality},
      {"dimension and purity", criterion_dimension},
      {"global balancing", criterion_balancing},
      {"determinism", criterion_determinism},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << ++index << "] " << c.name << ": " << o.detail.str() << " ("
              << ms << " ms)\n";
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
