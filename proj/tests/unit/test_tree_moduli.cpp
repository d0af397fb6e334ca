#include <random>

#include "doctest.h"
#include "msl/error.hpp"
#include "msl/tree_moduli.hpp"
#include "oracles.hpp"

using namespace msl;

namespace {

// Random trivalent tree built by repeatedly attaching a leaf to the middle of an edge.
MarkedTree random_tree(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> len(1, 9);
  MarkedTree t;
  t.n_leaves = n;
  t.vertex_count = 1;
  t.leaf_vertex = {0, 0, 0};
  for (int leaf = 4; leaf <= n; ++leaf) {
    const int choices = static_cast<int>(t.edges.size() + t.leaf_vertex.size());
    const int pick = std::uniform_int_distribution<int>(0, choices - 1)(rng);
    const int mid = t.vertex_count++;
    if (pick < static_cast<int>(t.edges.size())) {
      auto& e = t.edges[pick];
      const int far = e.v;
      e.v = mid;
      t.edges.push_back({mid, far, Rational(len(rng), 1 + len(rng) % 3)});
    } else {
      const int l = pick - static_cast<int>(t.edges.size());
      t.edges.push_back({t.leaf_vertex[l], mid, Rational(len(rng), 1 + len(rng) % 3)});
      t.leaf_vertex[l] = mid;
    }
    t.leaf_vertex.push_back(mid);
  }
  t.validate();
  return t;
}

RatVector add(const RatVector& a, const RatVector& b, const Rational& c = 1) {
  RatVector out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += c * b[k];
  return out;
}

}  // namespace

TEST_SUITE("tree_moduli") {
  TEST_CASE("distance vector of small trees") {
    MarkedTree star{4, 1, {0, 0, 0, 0}, {}};
    CHECK(distance_vector(star) == RatVector(6, Rational(0)));
    MarkedTree split{4, 2, {0, 0, 1, 1}, {{0, 1, Rational(1)}}};
    CHECK(distance_vector(split) == RatVector{0, 1, 1, 1, 1, 0});
    CHECK(split_vector(make_label_set({1, 2}), 4) == distance_vector(split));
  }

  TEST_CASE("caterpillar distances match path sums") {
    const Rational a(3, 2), b(5);
    MarkedTree cat{5, 3, {0, 0, 1, 2, 2}, {{0, 1, a}, {1, 2, b}}};
    const RatVector d = distance_vector(cat);
    CHECK(d == oracle::path_distance_vector(cat));
    CHECK(d[pair_index(1, 5, 5)] == a + b);
    CHECK(d[pair_index(3, 4, 5)] == b);
  }

  TEST_CASE("distance vectors of random trees") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 4 + trial % 5;
      const MarkedTree t = random_tree(rng, n);
      const RatVector d = distance_vector(t);
      CHECK(d == oracle::path_distance_vector(t));
      RatVector sum(pair_count(n), Rational(0));
      const auto splits = t.edge_splits();
      for (std::size_t e = 0; e < splits.size(); ++e) sum = add(sum, split_vector(splits[e], n), t.edges[e].length);
      CHECK(is_zero_mod_UN(add(d, sum, -1), n));
      const TreeType type = tree_type(t);
      for (std::size_t i = 0; i < type.size(); ++i)
        for (std::size_t j = 0; j < type.size(); ++j) CHECK(splits_compatible(type[i], type[j]));
    }
  }

  TEST_CASE("split vectors") {
    CHECK(split_vector(make_label_set({1, 2}), 4) == RatVector{0, 1, 1, 1, 1, 0});
    CHECK(split_vector(make_label_set({1, 3}), 4) == RatVector{1, 0, 1, 1, 0, 1});
    CHECK(split_vector(make_label_set({3, 4}), 4) == split_vector(make_label_set({1, 2}), 4));
    CHECK_THROWS_WITH_AS(split_vector(make_label_set({1}), 4), "not a moduli split", InputError);
    CHECK_THROWS_WITH_AS(split_vector(make_label_set({1, 2, 3}), 4), "not a moduli split", InputError);
    CHECK(canonical_split(make_label_set({1, 2}), 4) == make_label_set({3, 4}));
  }

  TEST_CASE("membership in U_N") {
    std::mt19937 rng(22);
    for (int n = 4; n <= 7; ++n) {
      const RatVector in = oracle::random_in_UN(rng, n);
      CHECK(is_zero_mod_UN(in, n));
      CHECK(is_zero_mod_UN_by_projections(in, n));
      const RatVector out = oracle::random_outside_UN(rng, n);
      CHECK_FALSE(is_zero_mod_UN(out, n));
      CHECK_FALSE(is_zero_mod_UN_by_projections(out, n));
    }
    CHECK_FALSE(is_zero_mod_UN(split_vector(make_label_set({1, 2}), 4), 4));
    RatVector s = add(add(split_vector(make_label_set({1, 2}), 4), split_vector(make_label_set({1, 3}), 4)),
                      split_vector(make_label_set({1, 4}), 4));
    CHECK(is_zero_mod_UN(s, 4));
    for (int n = 4; n <= 5; ++n) {
      RatVector sum(pair_count(n), Rational(0));
      for (int i = 2; i <= n; ++i) sum = add(sum, split_vector(make_label_set({1, i}), n));
      CHECK(is_zero_mod_UN(sum, n));
    }
    CHECK_THROWS_AS(is_zero_mod_UN(RatVector(3, Rational(0)), 3), InputError);
  }

  TEST_CASE("both membership tests agree on random split combinations") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 4 + trial % 3;
      RatVector x(pair_count(n), Rational(0));
      for (LabelSet s = 1; s < all_labels(n); ++s) {
        const int k = label_count(s);
        if ((s & 1) || k < 2 || k > n - 2) continue;
        if (coef(rng) == 0) x = add(x, split_vector(s, n), coef(rng));
      }
      if (trial % 4 == 0) x = add(x, oracle::random_in_UN(rng, n));
      CHECK(is_zero_mod_UN(x, n) == is_zero_mod_UN_by_projections(x, n));
    }
  }

  TEST_CASE("forgetful projection") {
    const RatVector v12 = split_vector(make_label_set({1, 2}), 5);
    CHECK(forgetful_project(v12, 5, {1, 2, 3, 4}) == split_vector(make_label_set({1, 2}), 4));
    CHECK(is_zero_mod_UN(forgetful_project(v12, 5, {1, 3, 4, 5}), 4));
    std::mt19937 rng(24);
    for (int trial = 0; trial < 20; ++trial) {
      const RatVector a = oracle::random_outside_UN(rng, 6), b = oracle::random_in_UN(rng, 6);
      for (const Quad& q : four_subsets(6))
        CHECK(forgetful_project(add(a, b), 6, q) == add(forgetful_project(a, 6, q), forgetful_project(b, 6, q)));
    }
    CHECK(four_subsets(6).size() == 15);
  }

  TEST_CASE("canonical representative") {
    std::mt19937 rng(25);
    for (int n = 4; n <= 7; ++n) {
      const RatVector x = oracle::random_outside_UN(rng, n);
      const RatVector r = canonical_rep_mod_UN(x, n);
      CHECK(canonical_rep_mod_UN(r, n) == r);
      CHECK(is_zero_mod_UN(add(x, r, -1), n));
      CHECK(canonical_rep_mod_UN(add(x, oracle::random_in_UN(rng, n)), n) == r);
      const RatVector y = oracle::random_outside_UN(rng, n);
      CHECK((canonical_rep_mod_UN(y, n) == r) == is_zero_mod_UN(add(x, y, -1), n));
      const RatVector v = split_vector(make_label_set({2, 3}), n);
      CHECK(canonical_rep_mod_UN(add(v, oracle::random_in_UN(rng, n)), n) == canonical_rep_mod_UN(v, n));
    }
    CHECK(canonical_rep_mod_UN(RatVector{4, 5, 6}, 3) == RatVector(3, Rational(0)));
  }

  TEST_CASE("four point classification") {
    const RatVector v = split_vector(make_label_set({1, 3}), 4);
    auto c = classify_four_point(add(RatVector(6, Rational(0)), v, Rational(3, 2)));
    REQUIRE(c);
    CHECK_FALSE(c->zero);
    CHECK(c->split == 1);
    CHECK(c->multiple == Rational(3, 2));
    c = classify_four_point(RatVector{1, 1, 1, 1, 1, 1});
    REQUIRE(c);
    CHECK(c->zero);
  }

  TEST_CASE("malformed trees are rejected") {
    MarkedTree bad{4, 2, {0, 0, 1, 1}, {{0, 1, Rational(0)}}};
    CHECK_THROWS_AS(bad.validate(), InputError);
    MarkedTree two_valent{4, 3, {0, 0, 2, 2}, {{0, 1, Rational(1)}, {1, 2, Rational(1)}}};
    CHECK_THROWS_AS(two_valent.validate(), InputError);
  }
}
