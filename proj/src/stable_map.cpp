#include "msl/stable_map.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "msl/error.hpp"
#include "msl/parallel.hpp"

namespace msl {

namespace {

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

IntVector negate(IntVector a) {
  for (auto& x : a) x = -x;
  return a;
}

// c with w = c * u, c != 0; nullopt when w is zero or not parallel to u.
std::optional<Integer> signed_multiple(std::span<const Integer> w, std::span<const Integer> u) {
  if (w.size() != u.size()) return std::nullopt;
  std::optional<Integer> c;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) {
      if (w[k] != 0) return std::nullopt;
      continue;
    }
    if (w[k] % u[k] != 0) return std::nullopt;
    Integer ck = w[k] / u[k];
    if (ck == 0 || (c && *c != ck)) return std::nullopt;
    c = ck;
  }
  return c;
}

int to_int(const Integer& x) {
  if (!x.fits_sint_p()) throw BoundExceeded("integer out of range", 0);
  return static_cast<int>(x.get_si());
}

std::optional<DirectionMatch> match_branch(const TargetCurve& l, int vertex, std::span<const Integer> w) {
  for (const auto& b : l.branches(vertex)) {
    auto c = signed_multiple(w, b.direction);
    if (c && *c > 0) return DirectionMatch{b, *c};
  }
  return std::nullopt;
}

const IntVector& cell_direction(const TargetCurve& l, const Cell& c) {
  return c.kind == CellKind::Edge ? l.edges.at(c.index).direction : l.rays.at(c.index).direction;
}

// Cells the far endpoint of an edge may occupy, given the near endpoint's
// cell and the direction w from near to far.
std::vector<Cell> far_candidates(const TargetCurve& l, const Cell& near, std::span<const Integer> w) {
  if (is_zero(w)) return {near};
  if (near.kind == CellKind::Vertex) {
    auto m = match_branch(l, near.index, w);
    if (!m) return {};
    const Cell b = m->branch.cell;
    if (b.kind == CellKind::Ray) return {b};
    const auto& e = l.edges[b.index];
    return {Cell{CellKind::Vertex, e.tail == near.index ? e.head : e.tail}, b};
  }
  auto c = signed_multiple(w, cell_direction(l, near));
  if (!c) return {};
  if (near.kind == CellKind::Edge) {
    const auto& e = l.edges[near.index];
    return {Cell{CellKind::Vertex, *c > 0 ? e.head : e.tail}, near};
  }
  if (*c > 0) return {near};
  return {Cell{CellKind::Vertex, l.rays[near.index].vertex}, near};
}

bool end_allowed(const TargetCurve& l, const Cell& c, std::span<const Integer> delta) {
  if (is_zero(delta)) return true;
  if (c.kind == CellKind::Vertex) {
    auto m = match_branch(l, c.index, delta);
    return m && m->branch.cell.kind == CellKind::Ray;
  }
  if (c.kind == CellKind::Edge) return false;
  auto s = signed_multiple(delta, l.rays[c.index].direction);
  return s && *s > 0;
}

bool cell_exists(const TargetCurve& l, const Cell& c) {
  switch (c.kind) {
    case CellKind::Vertex:
      return c.index >= 0 && c.index < l.vertex_count();
    case CellKind::Edge:
      return c.index >= 0 && c.index < static_cast<int>(l.edges.size());
    case CellKind::Ray:
      return c.index >= 0 && c.index < static_cast<int>(l.rays.size());
  }
  return false;
}

std::vector<Cell> all_cells(const TargetCurve& l) {
  std::vector<Cell> out;
  for (int v = 0; v < l.vertex_count(); ++v) out.push_back({CellKind::Vertex, v});
  for (int e = 0; e < static_cast<int>(l.edges.size()); ++e) out.push_back({CellKind::Edge, e});
  for (int r = 0; r < static_cast<int>(l.rays.size()); ++r) out.push_back({CellKind::Ray, r});
  return out;
}

// Vertex-local conditions once the vertex's cell is fixed: ends along rays,
// constant coverage and RH >= 0.
bool vertex_ok(const StableMapType& t, const TargetCurve& l, int v, std::string* why) {
  for (const auto& f : t.flags(v))
    if (f.label > 0 && !end_allowed(l, t.cell[v], f.direction)) {
      if (why) *why = "end " + std::to_string(f.label) + " cannot leave " + to_string(t.cell[v]);
      return false;
    }
  LocalDegree ld;
  try {
    ld = local_degree(t, l, v);
  } catch (const DomainError& e) {
    if (why) *why = e.what();
    return false;
  }
  if (ld.d_v > 0 && riemann_hurwitz(ld.n_v, ld.n_contracted, ld.d_v, ld.val_w) < 0) {
    if (why) *why = "RH < 0 at vertex " + std::to_string(v);
    return false;
  }
  return true;
}

}  // namespace

void DegreeSpec::validate(int ambient_dim) const {
  const int n = size();
  if (n < 3) throw InputError("degree needs at least 3 ends");
  if (n > kMaxLabels) throw InputError("too many ends");
  if (n_contracted < 0 || n_contracted > n) throw InputError("invalid number of contracted ends");
  IntVector sum(ambient_dim, Integer(0));
  for (int j = 0; j < n; ++j) {
    const auto& dir = directions[j];
    if (static_cast<int>(dir.size()) != ambient_dim) throw InputError("end direction has wrong dimension");
    if ((j < n_contracted) != is_zero(dir))
      throw InputError("exactly the first n ends must be contracted (end " + std::to_string(j + 1) + ")");
    for (int k = 0; k < ambient_dim; ++k) sum[k] += dir[k];
  }
  if (!is_zero(sum)) throw InputError("end directions do not sum to zero");
}

int covering_degree(const DegreeSpec& sigma, const TargetCurve& l) {
  std::map<IntVector, Integer> coverage;
  std::map<IntVector, int> ray_count;
  for (const auto& r : l.rays) ++ray_count[r.direction];
  for (int j = sigma.n_contracted; j < sigma.size(); ++j) {
    const auto& dir = sigma.directions[j];
    const auto rays = rays_with_direction(l, dir);
    if (rays.empty()) throw DomainError("degree incompatible with L: end " + std::to_string(j + 1) + " is not along a ray");
    coverage[l.rays[rays.front()].direction] += content(dir);
  }
  std::optional<Integer> d;
  for (const auto& [dir, count] : ray_count) {
    const Integer cov = coverage.count(dir) ? coverage[dir] : Integer(0);
    if (cov == 0 || cov % count != 0) throw DomainError("degree incompatible with L: unequal ray coverage");
    const Integer per_ray = cov / count;
    if (d && *d != per_ray) throw DomainError("degree incompatible with L: unequal ray coverage");
    d = per_ray;
  }
  if (!d) throw DomainError("degree incompatible with L: target has no rays");
  return to_int(*d);
}

int riemann_hurwitz(int n_v, int n_contracted_v, int d_v, int val_w) { return n_v - n_contracted_v - d_v * (val_w - 2) - 2; }

int rdim(int n_v, int d_v, int val_w, int r) { return n_v - d_v * (val_w - 2) + r - 3; }

int classification_number(int n_v, int r) { return n_v + r; }

int expected_dimension(const DegreeSpec& sigma, const TargetCurve& l) {
  const int d = covering_degree(sigma, l);
  int excess = 0;
  for (int w = 0; w < l.vertex_count(); ++w) excess += l.valence(w) - 2;
  return sigma.size() - d * excess - 2;
}

std::vector<Flag> StableMapType::flags(int v) const {
  std::vector<Flag> out;
  for (int label = 1; label <= n_leaves; ++label)
    if (leaf_vertex[label - 1] == v) out.push_back({label, -1, -1, end_direction[label - 1]});
  for (int k = 0; k < edge_count(); ++k) {
    if (parent[k + 1] == v) out.push_back({0, k, k + 1, edge_direction[k]});
    if (k + 1 == v) out.push_back({0, k, parent[v], negate(edge_direction[k])});
  }
  return out;
}

std::vector<int> StableMapType::children(int v) const {
  std::vector<int> out;
  for (int u = 1; u < vertex_count(); ++u)
    if (parent[u] == v) out.push_back(u);
  return out;
}

bool StableMapType::is_contracted(int e) const { return is_zero(edge_direction[e]); }

std::vector<int> StableMapType::topological_order() const {
  std::vector<int> order{0};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : children(order[i])) order.push_back(c);
  return order;
}

StableMapType make_type(const DegreeSpec& sigma, std::vector<LabelSet> splits, std::vector<Cell> cells) {
  const int n = sigma.size();
  std::sort(splits.begin(), splits.end());
  if (std::adjacent_find(splits.begin(), splits.end()) != splits.end()) throw InputError("repeated split");
  const LabelSet allowed = all_labels(n) & ~LabelSet{1};
  for (std::size_t a = 0; a < splits.size(); ++a) {
    const int sz = label_count(splits[a]);
    if ((splits[a] & ~allowed) != 0 || sz < 2 || sz > n - 2) throw InputError("not a moduli split");
    for (std::size_t b = a + 1; b < splits.size(); ++b)
      if (!splits_compatible(splits[a], splits[b])) throw InputError("incompatible splits");
  }
  StableMapType t;
  t.n_leaves = n;
  t.n_contracted = sigma.n_contracted;
  t.splits = splits;
  const int ne = static_cast<int>(splits.size());
  t.parent.assign(ne + 1, -1);
  auto smallest_container = [&](LabelSet s, bool strict) {
    int best = -1;
    for (int j = 0; j < ne; ++j) {
      if ((splits[j] & s) != s || (strict && splits[j] == s)) continue;
      if (best < 0 || label_count(splits[j]) < label_count(splits[best])) best = j;
    }
    return best + 1;  // vertex index, 0 for the root
  };
  for (int k = 0; k < ne; ++k) t.parent[k + 1] = smallest_container(splits[k], true);
  t.leaf_vertex.assign(n, 0);
  for (int label = 2; label <= n; ++label) t.leaf_vertex[label - 1] = smallest_container(label_bit(label), false);
  t.end_direction = sigma.directions;
  const std::size_t r = sigma.directions.front().size();
  for (int k = 0; k < ne; ++k) {
    IntVector w(r, Integer(0));
    for (int label : labels_of(splits[k])) w = add(w, sigma.directions[label - 1]);
    t.edge_direction.push_back(w);
  }
  if (cells.empty()) cells.assign(ne + 1, Cell{CellKind::Vertex, 0});
  if (static_cast<int>(cells.size()) != ne + 1) throw InputError("one cell per vertex required");
  t.cell = std::move(cells);
  return t;
}

LocalDegree local_degree(const StableMapType& t, const TargetCurve& l, int v) {
  LocalDegree ld;
  const auto fl = t.flags(v);
  ld.n_v = static_cast<int>(fl.size());
  for (const auto& f : fl) ld.n_contracted += is_zero(f.direction);
  const Cell c = t.cell[v];
  if (!cell_exists(l, c)) throw InputError("vertex cell out of range");
  if (c.kind == CellKind::Vertex) {
    ld.pinned = true;
    const auto br = l.branches(c.index);
    ld.val_w = static_cast<int>(br.size());
    ld.profiles.assign(br.size(), {});
    std::vector<int> cov(br.size(), 0);
    for (const auto& f : fl) {
      if (is_zero(f.direction)) continue;
      auto m = match_branch(l, c.index, f.direction);
      if (!m) throw DomainError("direction not along L at vertex " + std::to_string(v));
      const auto pos = std::find_if(br.begin(), br.end(), [&](const Branch& b) { return b.cell == m->branch.cell; }) - br.begin();
      ld.profiles[pos].push_back(to_int(m->multiplicity));
      cov[pos] += to_int(m->multiplicity);
    }
    for (auto& p : ld.profiles) std::sort(p.begin(), p.end(), std::greater<>());
    if (std::adjacent_find(cov.begin(), cov.end(), std::not_equal_to<>()) != cov.end())
      throw DomainError("ray coverage not constant at vertex " + std::to_string(v));
    ld.d_v = cov.empty() ? 0 : cov.front();
    return ld;
  }
  ld.val_w = 2;
  const IntVector& u = cell_direction(l, c);
  int forward = 0, backward = 0;
  for (const auto& f : fl) {
    if (is_zero(f.direction)) continue;
    auto s = signed_multiple(f.direction, u);
    if (!s) throw DomainError("direction not along L at vertex " + std::to_string(v));
    (*s > 0 ? forward : backward) += to_int(abs(*s));
  }
  if (forward != backward) throw DomainError("unbalanced vertex " + std::to_string(v));
  ld.d_v = forward;
  return ld;
}

Rational hurwitz_for_local_degree(const LocalDegree& ld, const HurwitzOptions& opts) {
  if (!ld.pinned) throw InputError("Hurwitz weight requested for a vertex over an edge");
  return hurwitz_number_marked(HurwitzProblem{ld.d_v, ld.profiles}, opts);
}

int cell_dimension(const StableMapType& t) {
  int dim = 0;
  for (int v = 0; v < t.vertex_count(); ++v) dim += !t.is_pinned(v);
  for (int k = 0; k < t.edge_count(); ++k) dim += t.is_contracted(k) && t.is_pinned(k + 1);
  return dim;
}

bool is_maximal_type(const StableMapType& t, const TargetCurve& l) {
  for (int k = 0; k < t.edge_count(); ++k)
    if (t.is_contracted(k) && t.is_pinned(k + 1)) return false;
  for (int v = 0; v < t.vertex_count(); ++v) {
    const LocalDegree ld = local_degree(t, l, v);
    if (ld.pinned) {
      if (ld.n_contracted != 0 || riemann_hurwitz(ld.n_v, ld.n_contracted, ld.d_v, ld.val_w) != 0) return false;
    } else if (ld.n_v != 3) {
      return false;
    }
  }
  return true;
}

bool is_admissible(const StableMapType& t, const TargetCurve& l, std::string* why) {
  for (int v = 0; v < t.vertex_count(); ++v)
    if (!cell_exists(l, t.cell[v])) {
      if (why) *why = "cell out of range";
      return false;
    }
  for (int k = 0; k < t.edge_count(); ++k) {
    const auto cand = far_candidates(l, t.cell[t.parent[k + 1]], t.edge_direction[k]);
    if (std::find(cand.begin(), cand.end(), t.cell[k + 1]) == cand.end()) {
      if (why) *why = "edge " + std::to_string(k) + " does not follow L";
      return false;
    }
  }
  for (int v = 0; v < t.vertex_count(); ++v)
    if (!vertex_ok(t, l, v, why)) return false;
  return true;
}

std::optional<CellWitness> feasibility_witness(const StableMapType& t, const TargetCurve& l) {
  const int nv = t.vertex_count();
  std::vector<Rational> coord(nv);
  std::map<Cell, std::vector<int>> on_cell;
  for (int v = 0; v < nv; ++v)
    if (!t.is_pinned(v)) on_cell[t.cell[v]].push_back(v);

  for (const auto& [c, verts] : on_cell) {
    const bool bounded = c.kind == CellKind::Edge;
    const int lo_vertex = bounded ? l.edges[c.index].tail : l.rays[c.index].vertex;
    const int hi_vertex = bounded ? l.edges[c.index].head : -1;
    const IntVector& u = cell_direction(l, c);
    std::vector<int> local(nv, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<int> uf(verts.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (int k = 0; k < t.edge_count(); ++k) {
      const int a = t.parent[k + 1], b = k + 1;
      if (!t.is_contracted(k) || (local[a] < 0 && local[b] < 0)) continue;
      if (local[a] < 0 || local[b] < 0) return std::nullopt;
      uf[find(local[a])] = find(local[b]);
    }
    // graph nodes: 0 = low end, 1 = high end, 2 + class root
    const int nodes = 2 + static_cast<int>(verts.size());
    std::vector<std::vector<int>> out(nodes);
    auto node_of = [&](int v) -> int {
      if (local[v] >= 0) return 2 + find(local[v]);
      if (t.cell[v] == Cell{CellKind::Vertex, lo_vertex}) return 0;
      if (bounded && t.cell[v] == Cell{CellKind::Vertex, hi_vertex}) return 1;
      return -1;
    };
    for (int k = 0; k < t.edge_count(); ++k) {
      const int a = t.parent[k + 1], b = k + 1;
      if (t.is_contracted(k) || (local[a] < 0 && local[b] < 0)) continue;
      auto s = signed_multiple(t.edge_direction[k], u);
      const int na = node_of(a), nb = node_of(b);
      if (!s || na < 0 || nb < 0) return std::nullopt;
      if (*s > 0)
        out[na].push_back(nb);
      else
        out[nb].push_back(na);
    }
    std::vector<char> used(nodes, 0);
    used[0] = 1;
    used[1] = bounded;
    for (int v : verts) used[2 + find(local[v])] = 1;
    for (int x = 2; x < nodes; ++x)
      if (used[x]) {
        out[0].push_back(x);
        if (bounded) out[x].push_back(1);
      }
    // longest path levels by Kahn's algorithm
    std::vector<int> indeg(nodes, 0), level(nodes, 0);
    for (int x = 0; x < nodes; ++x)
      for (int y : out[x]) ++indeg[y];
    std::vector<int> queue;
    for (int x = 0; x < nodes; ++x)
      if (used[x] && indeg[x] == 0) queue.push_back(x);
    std::size_t seen = 0;
    for (std::size_t i = 0; i < queue.size(); ++i, ++seen) {
      const int x = queue[i];
      for (int y : out[x]) {
        level[y] = std::max(level[y], level[x] + 1);
        if (--indeg[y] == 0) queue.push_back(y);
      }
    }
    const std::size_t used_count = std::count(used.begin(), used.end(), 1);
    if (seen != used_count || (queue.empty() || queue.front() != 0)) return std::nullopt;
    for (int v : verts) {
      const int x = 2 + find(local[v]);
      coord[v] = bounded ? Rational(l.edges[c.index].length * level[x] / level[1]) : Rational(level[x]);
    }
  }

  CellWitness w;
  for (int v = 0; v < nv; ++v)
    w.position.push_back(t.is_pinned(v) ? l.vertices[t.cell[v].index] : l.point(CellRef{t.cell[v], coord[v]}));
  for (int k = 0; k < t.edge_count(); ++k) {
    const int a = t.parent[k + 1], b = k + 1;
    const IntVector& dir = t.edge_direction[k];
    if (is_zero(dir)) {
      w.lengths.push_back(Rational(1));
      continue;
    }
    std::size_t i = 0;
    while (dir[i] == 0) ++i;
    w.lengths.push_back((w.position[b][i] - w.position[a][i]) / dir[i]);
  }
  if (!verify_witness(t, l, w)) return std::nullopt;
  return w;
}

bool verify_witness(const StableMapType& t, const TargetCurve& l, const CellWitness& w) {
  const int nv = t.vertex_count();
  if (static_cast<int>(w.position.size()) != nv || static_cast<int>(w.lengths.size()) != t.edge_count()) return false;
  for (int v = 0; v < nv; ++v) {
    const Cell& c = t.cell[v];
    if (c.kind == CellKind::Vertex) {
      if (w.position[v] != l.vertices[c.index]) return false;
      continue;
    }
    const IntVector& u = cell_direction(l, c);
    const RatVector& base = l.vertices[c.kind == CellKind::Edge ? l.edges[c.index].tail : l.rays[c.index].vertex];
    std::size_t i = 0;
    while (u[i] == 0) ++i;
    const Rational x = (w.position[v][i] - base[i]) / u[i];
    for (std::size_t k = 0; k < u.size(); ++k)
      if (w.position[v][k] != base[k] + x * u[k]) return false;
    if (x <= 0) return false;
    if (c.kind == CellKind::Edge && x >= l.edges[c.index].length) return false;
  }
  for (int k = 0; k < t.edge_count(); ++k) {
    if (w.lengths[k] <= 0) return false;
    const int a = t.parent[k + 1], b = k + 1;
    for (std::size_t i = 0; i < t.edge_direction[k].size(); ++i)
      if (w.position[b][i] - w.position[a][i] != w.lengths[k] * t.edge_direction[k][i]) return false;
  }
  return true;
}

namespace {

bool direction_along_l(const TargetCurve& l, const IntVector& w) {
  if (is_zero(w)) return true;
  for (const auto& e : l.edges)
    if (signed_multiple(w, e.direction)) return true;
  for (const auto& r : l.rays)
    if (signed_multiple(w, r.direction)) return true;
  return false;
}

void assign_cells(StableMapType& t, const TargetCurve& l, const std::vector<int>& order, std::size_t pos,
                  std::vector<StableMapType>& out, const EnumerateOptions& opts) {
  if (pos == order.size()) {
    if (opts.dimension && cell_dimension(t) != *opts.dimension) return;
    if (feasibility_witness(t, l)) {
      out.push_back(t);
    } else if (opts.log) {
      opts.log("pruned (empty cell): " + describe(t));
    }
    return;
  }
  const int v = order[pos];
  const std::vector<Cell> cand =
      v == 0 ? all_cells(l) : far_candidates(l, t.cell[t.parent[v]], t.edge_direction[v - 1]);
  for (const Cell& c : cand) {
    t.cell[v] = c;
    if (!vertex_ok(t, l, v, nullptr)) continue;
    assign_cells(t, l, order, pos + 1, out, opts);
  }
}

}  // namespace

std::vector<StableMapType> enumerate_types(const TargetCurve& l, const DegreeSpec& sigma, const EnumerateOptions& opts) {
  const auto violations = validate_smooth(l);
  if (!violations.empty()) throw DomainError("target is not smooth: " + violations.front().message);
  for (int w = 0; w < l.vertex_count(); ++w)
    if (l.valence(w) == 2) throw DomainError("target has a 2-valent vertex");
  sigma.validate(l.ambient_dim);
  const int n = sigma.size();
  if (n > opts.max_leaves) throw BoundExceeded("number of ends exceeds bound", 0);
  const int d = covering_degree(sigma, l);
  if (d > opts.max_degree) throw BoundExceeded("covering degree exceeds bound", 0);

  std::vector<LabelSet> candidates;
  const LabelSet rest = all_labels(n) & ~LabelSet{1};
  for (LabelSet s = rest; s != 0; s = (s - 1) & rest) {
    const int sz = label_count(s);
    if (sz < 2 || sz > n - 2) continue;
    IntVector w(l.ambient_dim, Integer(0));
    for (int label : labels_of(s)) w = add(w, sigma.directions[label - 1]);
    if (direction_along_l(l, w)) candidates.push_back(s);
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::vector<LabelSet>> families;
  const std::size_t family_cap = std::max<std::size_t>(opts.max_cells, 1) * 64;
  std::vector<LabelSet> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == candidates.size()) {
      families.push_back(chosen);
      if (families.size() > family_cap) throw BoundExceeded("too many tree topologies", families.size());
      return;
    }
    rec(i + 1);
    for (LabelSet s : chosen)
      if (!splits_compatible(s, candidates[i])) return;
    chosen.push_back(candidates[i]);
    rec(i + 1);
    chosen.pop_back();
  };
  rec(0);

  std::vector<std::vector<StableMapType>> per_family(families.size());
  auto work = [&](std::size_t i) {
    StableMapType t = make_type(sigma, families[i]);
    assign_cells(t, l, t.topological_order(), 0, per_family[i], opts);
  };
  if (opts.parallel && !opts.log) {
    parallel_for(families.size(), work);
  } else {
    for (std::size_t i = 0; i < families.size(); ++i) work(i);
  }
  std::vector<StableMapType> out;
  for (auto& f : per_family)
    for (auto& t : f) out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > opts.max_cells) throw BoundExceeded("number of cells exceeds bound", out.size());
  return out;
}

std::string describe(const StableMapType& t) {
  std::ostringstream os;
  os << "splits [";
  for (std::size_t k = 0; k < t.splits.size(); ++k) {
    os << (k ? " " : "") << "{";
    const auto ls = labels_of(t.splits[k]);
    for (std::size_t i = 0; i < ls.size(); ++i) os << (i ? "," : "") << ls[i];
    os << "}";
  }
  os << "] cells [";
  for (int v = 0; v < t.vertex_count(); ++v) os << (v ? ", " : "") << to_string(t.cell[v]);
  os << "]";
  return os.str();
}

}  // namespace msl
