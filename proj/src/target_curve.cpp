#include "msl/target_curve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "msl/error.hpp"

namespace msl {

std::string to_string(const Cell& c) {
  switch (c.kind) {
    case CellKind::Vertex:
      return "vertex " + std::to_string(c.index);
    case CellKind::Edge:
      return "edge " + std::to_string(c.index);
    case CellKind::Ray:
      return "ray " + std::to_string(c.index);
  }
  return "?";
}

int TargetCurve::valence(int v) const {
  int n = 0;
  for (const auto& e : edges) n += (e.tail == v) + (e.head == v);
  for (const auto& r : rays) n += (r.vertex == v);
  return n;
}

std::vector<Branch> TargetCurve::branches(int v) const {
  std::vector<Branch> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.tail == v) out.push_back({{CellKind::Edge, static_cast<int>(i)}, e.direction});
    if (e.head == v) {
      IntVector d = e.direction;
      for (auto& x : d) x = -x;
      out.push_back({{CellKind::Edge, static_cast<int>(i)}, d});
    }
  }
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i].vertex == v) out.push_back({{CellKind::Ray, static_cast<int>(i)}, rays[i].direction});
  return out;
}

std::vector<int> TargetCurve::cell_vertices(const Cell& c) const {
  switch (c.kind) {
    case CellKind::Vertex:
      return {c.index};
    case CellKind::Edge:
      return {edges.at(c.index).tail, edges.at(c.index).head};
    case CellKind::Ray:
      return {rays.at(c.index).vertex};
  }
  return {};
}

IntVector TargetCurve::direction_from(const Cell& c, int v) const {
  if (c.kind == CellKind::Ray) return rays.at(c.index).direction;
  if (c.kind != CellKind::Edge) throw InputError("direction_from: not an edge or ray");
  const auto& e = edges.at(c.index);
  if (e.tail == v) return e.direction;
  IntVector d = e.direction;
  for (auto& x : d) x = -x;
  return d;
}

RatVector TargetCurve::point(const CellRef& ref) const {
  const Cell& c = ref.cell;
  if (c.kind == CellKind::Vertex) return vertices.at(c.index);
  const int base = c.kind == CellKind::Edge ? edges.at(c.index).tail : rays.at(c.index).vertex;
  const IntVector& dir = c.kind == CellKind::Edge ? edges[c.index].direction : rays[c.index].direction;
  RatVector p = vertices.at(base);
  for (std::size_t k = 0; k < p.size(); ++k) p[k] += ref.coordinate * dir[k];
  return p;
}

TargetCurve standard_line(int q) {
  if (q < 1) throw InputError("standard_line requires q >= 1");
  TargetCurve l;
  l.ambient_dim = q;
  l.vertices.push_back(RatVector(q, Rational(0)));
  for (int i = 0; i < q; ++i) {
    IntVector d(q, Integer(0));
    d[i] = -1;
    l.rays.push_back({0, d});
  }
  l.rays.push_back({0, IntVector(q, Integer(1))});
  return l;
}

namespace {

bool is_primitive(const IntVector& v) { return content(v) == 1; }

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

}  // namespace

std::vector<Violation> validate_smooth(const TargetCurve& l) {
  std::vector<Violation> out;
  auto add = [&](std::string code, std::string msg) { out.push_back({std::move(code), std::move(msg)}); };
  const int r = l.ambient_dim;
  const int nv = l.vertex_count();
  if (r < 1) add("dimension", "ambient dimension must be positive");
  if (nv == 0) {
    add("empty", "curve has no vertices");
    return out;
  }
  bool structural_ok = r >= 1;
  for (int v = 0; v < nv; ++v)
    if (static_cast<int>(l.vertices[v].size()) != r) {
      add("dimension", "vertex " + std::to_string(v) + " has wrong dimension");
      structural_ok = false;
    }
  for (std::size_t i = 0; i < l.edges.size(); ++i) {
    const auto& e = l.edges[i];
    const std::string name = "edge " + std::to_string(i);
    if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv || e.tail == e.head) {
      add("vertex-index", name + " has invalid endpoints");
      structural_ok = false;
      continue;
    }
    if (static_cast<int>(e.direction.size()) != r) {
      add("dimension", name + " direction has wrong dimension");
      structural_ok = false;
      continue;
    }
    if (!is_primitive(e.direction)) add("non-primitive", name + " direction " + vec_str(e.direction) + " is not primitive");
    if (e.length <= 0) add("length", name + " must have positive length");
    if (static_cast<int>(l.vertices[e.tail].size()) == r && static_cast<int>(l.vertices[e.head].size()) == r) {
      bool consistent = true;
      for (int k = 0; k < r; ++k)
        if (l.vertices[e.head][k] - l.vertices[e.tail][k] != e.length * e.direction[k]) consistent = false;
      if (!consistent) add("geometry", name + ": head - tail != length * direction");
    }
  }
  for (std::size_t i = 0; i < l.rays.size(); ++i) {
    const auto& ray = l.rays[i];
    const std::string name = "ray " + std::to_string(i);
    if (ray.vertex < 0 || ray.vertex >= nv) {
      add("vertex-index", name + " has invalid base vertex");
      structural_ok = false;
      continue;
    }
    if (static_cast<int>(ray.direction.size()) != r) {
      add("dimension", name + " direction has wrong dimension");
      structural_ok = false;
      continue;
    }
    if (!is_primitive(ray.direction)) add("non-primitive", name + " direction " + vec_str(ray.direction) + " is not primitive");
  }
  if (!structural_ok) return out;

  // tree: |E| = |V| - 1 and connected
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  bool cycle = false;
  for (const auto& e : l.edges) {
    const int a = find(e.tail), b = find(e.head);
    if (a == b) cycle = true;
    parent[a] = b;
  }
  int components = 0;
  for (int v = 0; v < nv; ++v) components += find(v) == v;
  if (cycle || components != 1) add("not-a-tree", "underlying graph is not a tree");

  for (int v = 0; v < nv; ++v) {
    const auto br = l.branches(v);
    const int val = static_cast<int>(br.size());
    const std::string name = "vertex " + std::to_string(v);
    if (val < 2 || (val == 2 && nv > 1)) {
      add(val == 2 ? "2-valent vertex" : "low-valence", name + " has valence " + std::to_string(val));
      continue;
    }
    IntVector sum(r, Integer(0));
    for (const auto& b : br)
      for (int k = 0; k < r; ++k) sum[k] += b.direction[k];
    if (std::any_of(sum.begin(), sum.end(), [](const Integer& x) { return x != 0; })) {
      add("unbalanced", name + " directions do not sum to zero");
      continue;
    }
    const int q = val - 1;
    if (q > r) {
      add("not-unimodular", name + " has more than r+1 branches");
      continue;
    }
    for (int skip = 0; skip < val; ++skip) {
      IntMatrix m(q, r);
      int row = 0;
      for (int j = 0; j < val; ++j) {
        if (j == skip) continue;
        for (int k = 0; k < r; ++k) m(row, k) = br[j].direction[k];
        ++row;
      }
      if (gcd_maximal_minors(m) != 1) {
        add("not-unimodular", name + ": directions without branch " + std::to_string(skip) + " are not a lattice basis");
        break;
      }
    }
  }
  return out;
}

LocalLink link_at(const TargetCurve& l, const CellRef& c) {
  LocalLink link;
  if (c.cell.kind == CellKind::Vertex) {
    link.kind = LinkKind::VertexLink;
    for (const auto& b : l.branches(c.cell.index)) link.directions.push_back(b.direction);
    link.q = static_cast<int>(link.directions.size()) - 1;
    return link;
  }
  link.kind = LinkKind::EdgeLink;
  link.q = 0;
  link.directions.push_back(c.cell.kind == CellKind::Edge ? l.edges.at(c.cell.index).direction
                                                          : l.rays.at(c.cell.index).direction);
  return link;
}

namespace {

// w = m * u with m > 0; returns m or 0.
Integer positive_multiple(std::span<const Integer> w, const IntVector& u) {
  if (w.size() != u.size()) throw InputError("direction has wrong dimension");
  Integer m = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) {
      if (w[k] != 0) return 0;
      continue;
    }
    if (w[k] % u[k] != 0) return 0;
    const Integer c = w[k] / u[k];
    if (c <= 0 || (m != 0 && c != m)) return 0;
    m = c;
  }
  return m;
}

}  // namespace

DirectionMatch ray_of_direction(const TargetCurve& l, int vertex, std::span<const Integer> w) {
  for (const auto& b : l.branches(vertex)) {
    const Integer m = positive_multiple(w, b.direction);
    if (m > 0) return {b, m};
  }
  throw DomainError("direction not along L");
}

std::vector<int> rays_with_direction(const TargetCurve& l, std::span<const Integer> w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < l.rays.size(); ++i)
    if (positive_multiple(w, l.rays[i].direction) > 0) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace msl
