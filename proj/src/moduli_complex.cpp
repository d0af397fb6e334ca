#include "msl/moduli_complex.hpp"

#include <algorithm>
#include <map>

#include "msl/error.hpp"
#include "msl/parallel.hpp"

namespace msl {

namespace {

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::optional<Integer> signed_multiple(std::span<const Integer> w, std::span<const Integer> u) {
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

// The L-cell containing the interior of bounded edge k of a type.
Cell edge_support(const StableMapType& t, const TargetCurve& l, int k) {
  const Cell& a = t.cell[t.parent[k + 1]];
  const Cell& b = t.cell[k + 1];
  if (a.kind != CellKind::Vertex) return a;
  if (b.kind != CellKind::Vertex) return b;
  for (std::size_t e = 0; e < l.edges.size(); ++e) {
    const auto& ed = l.edges[e];
    if ((ed.tail == a.index && ed.head == b.index) || (ed.tail == b.index && ed.head == a.index))
      return {CellKind::Edge, static_cast<int>(e)};
  }
  throw DomainError("cut point at vertex of L: edge " + std::to_string(k) + " does not traverse an edge of L");
}

const IntVector& support_direction(const TargetCurve& l, const Cell& c) {
  return c.kind == CellKind::Edge ? l.edges.at(c.index).direction : l.rays.at(c.index).direction;
}

// Row vector over z = (l_0..l_{E-1}, a_1..a_r) giving coordinate k of h(v).
std::vector<Integer> position_row(const StableMapType& t, int v, int k, int r) {
  std::vector<Integer> row(t.edge_count() + r, Integer(0));
  row[t.edge_count() + k] = 1;
  for (int u = v; u != 0; u = t.parent[u]) row[u - 1] = t.edge_direction[u - 1][k];
  return row;
}

}  // namespace

IntMatrix gluing_matrix(const StableMapType& t, const TargetCurve& l) {
  if (!is_maximal_type(t, l)) throw DomainError("gluing matrix requires a maximal type");
  std::vector<int> column(t.vertex_count(), -1);
  int on_edge = 0;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (!t.is_pinned(v)) column[v] = on_edge++;
  const int ne = t.edge_count();
  IntMatrix g(ne, on_edge + 2 * ne);
  for (int k = 0; k < ne; ++k) {
    const int a = t.parent[k + 1], b = k + 1;
    const Cell support = edge_support(t, l, k);
    const auto s = t.is_contracted(k) ? std::optional<Integer>(0)
                                      : signed_multiple(t.edge_direction[k], support_direction(l, support));
    if (!s) throw DomainError("edge direction not along its cell of L");
    if (column[a] >= 0) g(k, column[a]) += 1;
    if (column[b] >= 0) g(k, column[b]) -= 1;
    g(k, on_edge + k) = *s;
    g(k, on_edge + ne + k) = *s;
  }
  return g;
}

Rational cell_weight(const StableMapType& t, const TargetCurve& l, const HurwitzOptions& opts) {
  const IntMatrix g = gluing_matrix(t, l);
  Rational w = g.rows() == 0 ? Rational(1) : Rational(gcd_maximal_minors(g));
  for (int v = 0; v < t.vertex_count() && w != 0; ++v) {
    if (!t.is_pinned(v)) continue;
    w *= hurwitz_for_local_degree(local_degree(t, l, v), opts);
  }
  return w;
}

RatMatrix embedding_matrix(const StableMapType& t, int ambient_dim) {
  const int n = t.n_leaves;
  const std::size_t np = pair_count(n);
  const int ne = t.edge_count();
  RatMatrix phi(np + ambient_dim, ne + ambient_dim);
  for (int k = 0; k < ne; ++k) {
    const RatVector v = split_vector(t.splits[k], n);
    const RatVector rep = canonical_rep_mod_UN(v, n);
    const RatVector mu = lineality_coefficients(v, n);
    for (std::size_t p = 0; p < np; ++p) phi(p, k) = rep[p];
    for (int c = 0; c < ambient_dim; ++c) phi(np + c, k) = -mu[0] * t.end_direction[0][c];
  }
  for (int c = 0; c < ambient_dim; ++c) phi(np + c, ne + c) = 1;
  return phi;
}

CellChart cell_chart(const StableMapType& t, const TargetCurve& l) {
  const int r = l.ambient_dim;
  const int nz = t.edge_count() + r;
  CellChart ch;
  ch.constraints = IntMatrix(0, nz);
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.is_pinned(v)) {
      for (int k = 0; k < r; ++k) ch.constraints.append_row(position_row(t, v, k, r));
      continue;
    }
    const IntVector& u = support_direction(l, t.cell[v]);
    IntMatrix um(1, r);
    for (int k = 0; k < r; ++k) um(0, k) = u[k];
    const IntMatrix normals = integer_kernel(um);
    for (std::size_t j = 0; j < normals.cols(); ++j) {
      std::vector<Integer> row(nz, Integer(0));
      for (int k = 0; k < r; ++k) {
        if (normals(k, j) == 0) continue;
        const auto pr = position_row(t, v, k, r);
        for (int z = 0; z < nz; ++z) row[z] += normals(k, j) * pr[z];
      }
      ch.constraints.append_row(row);
    }
  }
  ch.lattice = integer_kernel(ch.constraints);
  ch.embedding = embedding_matrix(t, r);
  return ch;
}

RatVector chart_point(const StableMapType& t, const CellWitness& w) {
  RatVector z = w.lengths;
  z.insert(z.end(), w.position[0].begin(), w.position[0].end());
  (void)t;
  return z;
}

RatVector embed(const StableMapType& t, const CellWitness& w, int ambient_dim) {
  return mat_vec(embedding_matrix(t, ambient_dim), chart_point(t, w));
}

std::optional<std::vector<int>> face_map(const StableMapType& sigma, const StableMapType& tau, const TargetCurve& l) {
  if (sigma.n_leaves != tau.n_leaves) return std::nullopt;
  if (!std::includes(sigma.splits.begin(), sigma.splits.end(), tau.splits.begin(), tau.splits.end())) return std::nullopt;
  const int nv = sigma.vertex_count();
  std::vector<int> image(nv, -1);
  image[0] = 0;
  for (int v : sigma.topological_order()) {
    if (v == 0) continue;
    auto it = std::lower_bound(tau.splits.begin(), tau.splits.end(), sigma.splits[v - 1]);
    if (it != tau.splits.end() && *it == sigma.splits[v - 1])
      image[v] = static_cast<int>(it - tau.splits.begin()) + 1;
    else
      image[v] = image[sigma.parent[v]];
  }
  for (int v = 0; v < nv; ++v) {
    const Cell& cs = sigma.cell[v];
    const Cell& ct = tau.cell[image[v]];
    if (cs == ct) continue;
    if (ct.kind != CellKind::Vertex || cs.kind == CellKind::Vertex) return std::nullopt;
    const auto ends = l.cell_vertices(cs);
    if (std::find(ends.begin(), ends.end(), ct.index) == ends.end()) return std::nullopt;
  }
  return image;
}

RatVector primitive_normal(const StableMapType& sigma, const StableMapType& tau, const TargetCurve& l) {
  const auto image = face_map(sigma, tau, l);
  if (!image) throw Error("not a face");
  const int r = l.ambient_dim;
  const CellChart ch = cell_chart(sigma, l);
  const int nz = sigma.edge_count() + r;
  IntMatrix extra(0, nz);
  int orient_row = -1;
  for (int k = 0; k < sigma.edge_count(); ++k) {
    if (std::binary_search(tau.splits.begin(), tau.splits.end(), sigma.splits[k])) continue;
    std::vector<Integer> row(nz, Integer(0));
    row[k] = 1;
    if (orient_row < 0) orient_row = static_cast<int>(extra.rows());
    extra.append_row(row);
  }
  for (int v = 0; v < sigma.vertex_count(); ++v)
    if (!sigma.is_pinned(v) && tau.is_pinned((*image)[v]))
      for (int k = 0; k < r; ++k) extra.append_row(position_row(sigma, v, k, r));
  if (orient_row < 0) throw Error("face with the same splits");
  const IntMatrix m = mat_mul(extra, ch.lattice);
  if (rank(m) != 1) throw Error("face is not of codimension one");
  const IntVector phi = primitive_and_length(m.row(orient_row)).primitive;
  if (is_zero(phi)) throw Error("contracted length does not vary on the cell");
  const IntVector c0 = bezout_coefficients(phi);
  const IntVector normal = mat_vec(ch.lattice, c0);
  return mat_vec(ch.embedding, to_rational(normal));
}

int ModuliComplex::dimension() const {
  int d = -1;
  for (const auto& c : cells) d = std::max(d, c.dimension);
  return d;
}

std::vector<int> ModuliComplex::cells_of_dimension(int d) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dimension == d) out.push_back(static_cast<int>(i));
  return out;
}

ModuliComplex build_complex(const TargetCurve& l, const DegreeSpec& sigma, const BuildOptions& opts) {
  ModuliComplex m;
  m.target = l;
  m.degree = sigma;
  EnumerateOptions eo = opts.enumerate;
  eo.parallel = eo.parallel && opts.parallel;
  auto types = enumerate_types(l, sigma, eo);
  m.covering_degree = covering_degree(sigma, l);
  m.expected_dimension = expected_dimension(sigma, l);
  m.cells.resize(types.size());
  HurwitzOptions ho = opts.hurwitz;
  ho.parallel = ho.parallel && opts.parallel;
  auto fill = [&](std::size_t i) {
    ModuliCell& c = m.cells[i];
    c.type = std::move(types[i]);
    c.dimension = cell_dimension(c.type);
    c.maximal = is_maximal_type(c.type, l);
    c.witness = *feasibility_witness(c.type, l);
    if (c.dimension == m.expected_dimension && c.maximal) c.weight = cell_weight(c.type, l, ho);
  };
  if (opts.parallel)
    parallel_for(types.size(), fill);
  else
    for (std::size_t i = 0; i < types.size(); ++i) fill(i);

  const int top = m.dimension();
  std::vector<std::vector<std::pair<int, int>>> found(m.cells.size());
  auto faces_of = [&](std::size_t i) {
    const int d = m.cells[i].dimension;
    for (std::size_t j = 0; j < m.cells.size(); ++j)
      if (m.cells[j].dimension == d + 1 && face_map(m.cells[j].type, m.cells[i].type, l))
        found[i].emplace_back(static_cast<int>(i), static_cast<int>(j));
  };
  if (opts.parallel)
    parallel_for(m.cells.size(), faces_of);
  else
    for (std::size_t i = 0; i < m.cells.size(); ++i) faces_of(i);
  m.pure = top == m.expected_dimension;
  for (std::size_t i = 0; i < m.cells.size(); ++i) {
    const auto& c = m.cells[i];
    if (c.dimension == top && !c.maximal) m.pure = false;
    if (c.dimension > top || (c.dimension < top && found[i].empty())) m.pure = false;
    for (const auto& p : found[i]) m.facets.push_back(p);
  }
  return m;
}

BalanceReport check_global_balancing(const ModuliComplex& m, bool parallel) {
  BalanceReport rep;
  const int top = m.dimension();
  const auto faces = m.cells_of_dimension(top - 1);
  std::map<int, std::vector<int>> cofaces;
  for (const auto& [f, c] : m.facets)
    if (m.cells[c].dimension == top) cofaces[f].push_back(c);
  rep.entries.resize(faces.size());
  auto work = [&](std::size_t idx) {
    const int f = faces[idx];
    BalanceEntry& e = rep.entries[idx];
    e.face = f;
    const auto it = cofaces.find(f);
    if (it != cofaces.end()) e.neighbors = it->second;
    const auto& tau = m.cells[f].type;
    const int r = m.target.ambient_dim;
    RatVector sum(pair_count(tau.n_leaves) + r, Rational(0));
    for (int c : e.neighbors) {
      const Rational& w = m.cells[c].weight;
      if (w == 0) continue;
      const RatVector u = primitive_normal(m.cells[c].type, tau, m.target);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += w * u[k];
    }
    const CellChart ch = cell_chart(tau, m.target);
    const RatMatrix span = mat_mul(ch.embedding, to_rational(ch.lattice));
    std::vector<RatVector> gens;
    for (std::size_t j = 0; j < span.cols(); ++j) gens.push_back(span.col(j));
    e.balanced = in_rational_span(sum, gens);
    e.residual = std::move(sum);
  };
  if (parallel)
    parallel_for(faces.size(), work);
  else
    for (std::size_t i = 0; i < faces.size(); ++i) work(i);
  for (const auto& e : rep.entries) rep.balanced = rep.balanced && e.balanced;
  return rep;
}

}  // namespace msl
