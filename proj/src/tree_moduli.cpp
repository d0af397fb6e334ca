#include "msl/tree_moduli.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "msl/error.hpp"

namespace msl {

int label_count(LabelSet s) { return std::popcount(s); }

std::vector<int> labels_of(LabelSet s) {
  std::vector<int> out;
  for (int i = 1; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

LabelSet make_label_set(std::initializer_list<int> labels) {
  LabelSet s = 0;
  for (int l : labels) s |= label_bit(l);
  return s;
}

LabelSet canonical_split(LabelSet side, int n) { return (side & 1u) ? (all_labels(n) & ~side) : side; }

std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

std::size_t pair_index(int i, int j, int n) {
  if (i == j) throw InputError("pair_index: equal labels");
  if (i > j) std::swap(i, j);
  // pairs (a, *) for a < i come first: sum_{a<i} (n - a)
  const std::size_t before = static_cast<std::size_t>(i - 1) * n - static_cast<std::size_t>(i - 1) * i / 2;
  return before + static_cast<std::size_t>(j - i - 1);
}

std::vector<Quad> four_subsets(int n) {
  std::vector<Quad> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) out.push_back({a, b, c, d});
  return out;
}

void MarkedTree::validate() const {
  if (n_leaves < 3) throw InputError("marked tree needs at least 3 leaves");
  if (static_cast<int>(leaf_vertex.size()) != n_leaves) throw InputError("leaf count mismatch");
  if (static_cast<int>(edges.size()) != vertex_count - 1) throw InputError("marked tree is not a tree");
  std::vector<int> valence(vertex_count, 0);
  std::vector<int> parent(vertex_count);
  for (int v = 0; v < vertex_count; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) throw InputError("edge endpoint out of range");
    if (e.length <= 0) throw InputError("bounded edge lengths must be positive");
    const int a = find(e.u), b = find(e.v);
    if (a == b) throw InputError("marked tree contains a cycle");
    parent[a] = b;
    ++valence[e.u];
    ++valence[e.v];
  }
  for (int v : leaf_vertex) {
    if (v < 0 || v >= vertex_count) throw InputError("leaf vertex out of range");
    ++valence[v];
  }
  for (int v = 0; v < vertex_count; ++v)
    if (valence[v] < 3) throw InputError("vertex of valence below 3");
}

namespace {

// Leaves behind each directed edge, computed by DFS from every edge.
struct TreeAdjacency {
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge index)
  std::vector<LabelSet> leaves_at;

  explicit TreeAdjacency(const MarkedTree& t) : adj(t.vertex_count), leaves_at(t.vertex_count, 0) {
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      adj[t.edges[e].u].emplace_back(t.edges[e].v, static_cast<int>(e));
      adj[t.edges[e].v].emplace_back(t.edges[e].u, static_cast<int>(e));
    }
    for (int l = 1; l <= t.n_leaves; ++l) leaves_at[t.leaf_vertex[l - 1]] |= label_bit(l);
  }

  LabelSet side(int from, int toward) const {
    LabelSet s = leaves_at[toward];
    std::vector<std::pair<int, int>> stack{{toward, from}};
    while (!stack.empty()) {
      auto [v, p] = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj[v]) {
        (void)e;
        if (w == p) continue;
        s |= leaves_at[w];
        stack.emplace_back(w, v);
      }
    }
    return s;
  }
};

}  // namespace

std::vector<LabelSet> MarkedTree::edge_splits() const {
  TreeAdjacency a(*this);
  std::vector<LabelSet> out;
  for (const auto& e : edges) out.push_back(canonical_split(a.side(e.u, e.v), n_leaves));
  return out;
}

TreeType tree_type(const MarkedTree& t) {
  TreeType s = t.edge_splits();
  std::sort(s.begin(), s.end());
  return s;
}

bool splits_compatible(LabelSet a, LabelSet b) {
  // Both sides avoid label 1, so compatibility is laminarity.
  return (a & b) == 0 || (a & b) == a || (a & b) == b;
}

RatVector distance_vector(const MarkedTree& t) {
  TreeAdjacency a(t);
  RatVector d(pair_count(t.n_leaves), Rational(0));
  const auto splits = t.edge_splits();
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const LabelSet s = splits[e];
    for (int i = 1; i <= t.n_leaves; ++i)
      for (int j = i + 1; j <= t.n_leaves; ++j)
        if (((s >> (i - 1)) & 1u) != ((s >> (j - 1)) & 1u)) d[pair_index(i, j, t.n_leaves)] += t.edges[e].length;
  }
  return d;
}

IntVector split_vector_int(LabelSet split, int n) {
  const int k = label_count(split & all_labels(n));
  if (k <= 1 || k >= n - 1 || (split & ~all_labels(n)) != 0) throw InputError("not a moduli split");
  IntVector v(pair_count(n), Integer(0));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (((split >> (i - 1)) & 1u) != ((split >> (j - 1)) & 1u)) v[pair_index(i, j, n)] = 1;
  return v;
}

RatVector split_vector(LabelSet split, int n) { return to_rational(split_vector_int(split, n)); }

bool is_zero_mod_UN(std::span<const Rational> x, int n) {
  if (n < 4) throw InputError("is_zero_mod_UN requires N >= 4");
  if (x.size() != pair_count(n)) throw InputError("is_zero_mod_UN: dimension mismatch");
  RatMatrix a(pair_count(n), n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      a(pair_index(i, j, n), i - 1) = 1;
      a(pair_index(i, j, n), j - 1) = 1;
    }
  return solve_rational(a, x).has_value();
}

bool is_zero_mod_U4(std::span<const Rational> x6) {
  if (x6.size() != 6) throw InputError("is_zero_mod_U4: expected 6 coordinates");
  const Rational a = x6[0] + x6[5], b = x6[1] + x6[4], c = x6[2] + x6[3];
  return a == b && b == c;
}

bool is_zero_mod_UN_by_projections(std::span<const Rational> x, int n) {
  if (n < 4) throw InputError("is_zero_mod_UN requires N >= 4");
  for (const auto& q : four_subsets(n))
    if (!is_zero_mod_U4(forgetful_project(x, n, q))) return false;
  return true;
}

RatVector forgetful_project(std::span<const Rational> x, int n, const Quad& quad) {
  if (x.size() != pair_count(n)) throw InputError("forgetful_project: dimension mismatch");
  Quad s = quad;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end() || s[0] < 1 || s[3] > n)
    throw InputError("forgetful_project: not a 4-subset");
  RatVector out;
  out.reserve(6);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) out.push_back(x[pair_index(s[a], s[b], n)]);
  return out;
}

RatVector lineality_coefficients(std::span<const Rational> x, int n) {
  if (n < 3) throw InputError("lineality_coefficients requires N >= 3");
  if (x.size() != pair_count(n)) throw InputError("lineality_coefficients: dimension mismatch");
  RatVector mu(n);
  const Rational& x12 = x[pair_index(1, 2, n)];
  const Rational& x13 = x[pair_index(1, 3, n)];
  const Rational& x23 = x[pair_index(2, 3, n)];
  mu[0] = (x12 + x13 - x23) / 2;
  mu[1] = x12 - mu[0];
  mu[2] = x13 - mu[0];
  for (int k = 4; k <= n; ++k) mu[k - 1] = x[pair_index(1, k, n)] - mu[0];
  return mu;
}

RatVector canonical_rep_mod_UN(std::span<const Rational> x, int n) {
  const RatVector mu = lineality_coefficients(x, n);
  RatVector out(x.begin(), x.end());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out[pair_index(i, j, n)] -= mu[i - 1] + mu[j - 1];
  return out;
}

std::optional<FourPointClass> classify_four_point(std::span<const Rational> x6) {
  if (x6.size() != 6) throw InputError("classify_four_point: expected 6 coordinates");
  // Four-point sums; v_{ij|kl} has sums (0, 2, 2) and U_4 adds (t, t, t).
  const std::array<Rational, 3> s = {x6[0] + x6[5], x6[1] + x6[4], x6[2] + x6[3]};
  if (s[0] == s[1] && s[1] == s[2]) return FourPointClass{true, -1, Rational(0)};
  for (int k = 0; k < 3; ++k) {
    const Rational& o1 = s[(k + 1) % 3];
    const Rational& o2 = s[(k + 2) % 3];
    if (o1 == o2) return FourPointClass{false, k, (o1 - s[k]) / 2};
  }
  return std::nullopt;
}

}  // namespace msl
