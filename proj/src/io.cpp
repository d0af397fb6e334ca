#include "msl/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "msl/error.hpp"

namespace msl {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object with field '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

int int_value(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(int_value(x, what));
  return out;
}

const char* kind_name(CellKind k) {
  switch (k) {
    case CellKind::Vertex:
      return "vertex";
    case CellKind::Edge:
      return "edge";
    case CellKind::Ray:
      return "ray";
  }
  return "?";
}

const char* resolution_kind_name(ResolutionKind k) {
  switch (k) {
    case ResolutionKind::TypeI:
      return "I";
    case ResolutionKind::TypeII:
      return "II";
    case ResolutionKind::ContractedEnd:
      return "C";
  }
  return "?";
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_schema(const Json& j, const std::string& schema) {
  const Json& s = field(j, "schema");
  if (!s.is_string() || s.get<std::string>() != schema)
    throw InputError("unsupported schema " + s.dump() + ", expected \"" + schema + "\"");
}

Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(Integer(j.get<std::uint64_t>()))
                                                           : Rational(Integer(j.get<long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    Integer num, den(1);
    auto parse_int = [&](const std::string& t) {
      Integer x;
      if (t.empty() || x.set_str(t, 10) != 0) throw InputError("bad rational \"" + s + "\"");
      return x;
    };
    num = parse_int(s.substr(0, slash));
    if (slash != std::string::npos) den = parse_int(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in \"" + s + "\"");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Integer integer_from_json(const Json& j) {
  const Rational q = rational_from_json(j);
  if (q.get_den() != 1) throw InputError("expected an integer, got " + j.dump());
  return q.get_num();
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(Rational(x)));
  return a;
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  RatVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  IntVector out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

Json to_json(const Cell& c) { return Json{{"kind", kind_name(c.kind)}, {"index", c.index}}; }

Cell cell_from_json(const Json& j) {
  const Json& k = field(j, "kind");
  Cell c;
  if (k == "vertex")
    c.kind = CellKind::Vertex;
  else if (k == "edge")
    c.kind = CellKind::Edge;
  else if (k == "ray")
    c.kind = CellKind::Ray;
  else
    throw InputError("unknown cell kind " + k.dump());
  c.index = int_field(j, "index");
  if (c.index < 0) throw InputError("negative cell index");
  return c;
}

Json to_json(const TargetCurve& l) {
  Json j;
  j["schema"] = kTargetSchema;
  j["ambient_dim"] = l.ambient_dim;
  j["vertices"] = Json::array();
  for (const auto& v : l.vertices) j["vertices"].push_back(to_json(v));
  j["edges"] = Json::array();
  for (const auto& e : l.edges)
    j["edges"].push_back(
        {{"tail", e.tail}, {"head", e.head}, {"direction", to_json(e.direction)}, {"length", to_json(e.length)}});
  j["rays"] = Json::array();
  for (const auto& r : l.rays) j["rays"].push_back({{"vertex", r.vertex}, {"direction", to_json(r.direction)}});
  return j;
}

TargetCurve target_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("target must be an object");
  if (j.contains("schema")) require_schema(j, kTargetSchema);
  if (j.contains("standard_line")) {
    const int q = int_field(j, "standard_line");
    if (q < 1) throw InputError("standard_line needs q >= 1");
    return standard_line(q);
  }
  TargetCurve l;
  const Json& vs = field(j, "vertices");
  if (!vs.is_array() || vs.empty()) throw InputError("target needs a nonempty vertex list");
  for (const auto& v : vs) l.vertices.push_back(rat_vector_from_json(v));
  l.ambient_dim = j.contains("ambient_dim") ? int_field(j, "ambient_dim") : static_cast<int>(l.vertices[0].size());
  for (const auto& e : j.value("edges", Json::array())) {
    TargetCurve::Edge ed;
    ed.tail = int_field(e, "tail");
    ed.head = int_field(e, "head");
    ed.direction = int_vector_from_json(field(e, "direction"));
    ed.length = rational_from_json(field(e, "length"));
    l.edges.push_back(std::move(ed));
  }
  for (const auto& r : field(j, "rays")) {
    TargetCurve::Ray ra;
    ra.vertex = int_field(r, "vertex");
    ra.direction = int_vector_from_json(field(r, "direction"));
    l.rays.push_back(std::move(ra));
  }
  return l;
}

Json to_json(const std::vector<Violation>& vs) {
  Json j;
  j["smooth"] = vs.empty();
  j["violations"] = Json::array();
  for (const auto& v : vs) j["violations"].push_back({{"code", v.code}, {"message", v.message}});
  return j;
}

Json to_json(const DegreeSpec& s) {
  Json j;
  j["n"] = s.n_contracted;
  j["directions"] = Json::array();
  for (const auto& d : s.directions) j["directions"].push_back(to_json(d));
  return j;
}

DegreeSpec degree_from_json(const Json& j) {
  DegreeSpec s;
  s.n_contracted = int_field(j, "n");
  for (const auto& d : field(j, "directions")) s.directions.push_back(int_vector_from_json(d));
  return s;
}

Json to_json(const VertexStar& s) {
  Json j;
  j["schema"] = kStarSchema;
  j["q"] = s.q;
  j["ends"] = Json::array();
  for (const auto& e : s.ends) j["ends"].push_back({{"ray", e.ray}, {"weight", e.weight}, {"label", e.label}});
  if (s.contracted_label) j["contracted_label"] = *s.contracted_label;
  return j;
}

VertexStar star_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("star must be an object");
  if (j.contains("schema")) require_schema(j, kStarSchema);
  VertexStar s;
  s.q = int_field(j, "q");
  int next = 1;
  for (const auto& e : field(j, "ends")) {
    StarEnd se;
    se.ray = int_field(e, "ray");
    se.weight = e.contains("weight") ? int_field(e, "weight") : 1;
    se.label = e.contains("label") ? int_field(e, "label") : next;
    next = std::max(next, se.label) + 1;
    s.ends.push_back(se);
  }
  if (j.contains("contracted_label")) s.contracted_label = int_field(j, "contracted_label");
  if (j.contains("n_V")) {
    const int nv = int_field(j, "n_V");
    if (nv < 0 || nv > 1) throw InputError("n_V must be 0 or 1");
    if (nv == 1 && !s.contracted_label) s.contracted_label = next;
    if (nv == 0 && s.contracted_label) throw InputError("n_V = 0 with a contracted label");
  }
  return s;
}

Json to_json(const Resolution& r) {
  Json j;
  j["name"] = to_string(r);
  j["kind"] = resolution_kind_name(r.kind);
  j["i"] = r.i;
  j["j"] = r.j;
  j["d1"] = r.d1;
  j["d2"] = r.d2;
  j["side1"] = r.side1;
  j["side2"] = r.side2;
  return j;
}

Resolution resolution_from_json(const Json& j) {
  Resolution r;
  const Json& k = field(j, "kind");
  if (k == "I")
    r.kind = ResolutionKind::TypeI;
  else if (k == "II")
    r.kind = ResolutionKind::TypeII;
  else if (k == "C")
    r.kind = ResolutionKind::ContractedEnd;
  else
    throw InputError("unknown resolution kind " + k.dump());
  r.i = int_field(j, "i");
  r.j = int_field(j, "j");
  r.d1 = int_field(j, "d1");
  r.d2 = int_field(j, "d2");
  r.side1 = int_list(field(j, "side1"), "side1");
  r.side2 = int_list(field(j, "side2"), "side2");
  return r;
}

LocalFan compute_local_fan(const VertexStar& s, const HurwitzOptions& opts) {
  LocalFan f;
  f.star = s;
  f.rays = build_local_fan(s, opts);
  f.balance = check_balanced_local(f.rays, s.n_v());
  return f;
}

Json to_json(const LocalFan& f) {
  Json j;
  j["schema"] = kLocalFanSchema;
  j["star"] = to_json(f.star);
  j["star"].erase("schema");
  j["N_V"] = f.star.n_v();
  j["n_V"] = f.star.n_contracted();
  j["degree"] = f.star.degree();
  j["rays"] = Json::array();
  for (const auto& r : f.rays)
    j["rays"].push_back({{"resolution", to_json(r.resolution)},
                         {"primitive", to_json(r.primitive)},
                         {"lattice_length", to_json(Rational(r.lattice_length))},
                         {"weight", to_json(r.weight)},
                         {"hurwitz", to_json(r.hurwitz)}});
  j["balanced"] = f.balance.balanced;
  j["residual"] = to_json(f.balance.residual);
  return j;
}

LocalFan local_fan_from_json(const Json& j) {
  require_schema(j, kLocalFanSchema);
  LocalFan f;
  f.star = star_from_json(field(j, "star"));
  for (const auto& r : field(j, "rays")) {
    WeightedRay w;
    w.resolution = resolution_from_json(field(r, "resolution"));
    w.primitive = int_vector_from_json(field(r, "primitive"));
    w.lattice_length = integer_from_json(field(r, "lattice_length"));
    w.weight = rational_from_json(field(r, "weight"));
    w.hurwitz = rational_from_json(field(r, "hurwitz"));
    f.rays.push_back(std::move(w));
  }
  const Json& b = field(j, "balanced");
  if (!b.is_boolean()) throw InputError("'balanced' must be a boolean");
  f.balance.balanced = b.get<bool>();
  f.balance.residual = rat_vector_from_json(field(j, "residual"));
  return f;
}

Json to_json(const StableMapType& t) {
  Json j;
  j["splits"] = Json::array();
  for (LabelSet s : t.splits) j["splits"].push_back(labels_of(s));
  j["vertex_cells"] = Json::array();
  for (const auto& c : t.cell) j["vertex_cells"].push_back(to_json(c));
  j["leaf_vertex"] = t.leaf_vertex;
  j["parent"] = t.parent;
  j["edge_directions"] = Json::array();
  for (const auto& d : t.edge_direction) j["edge_directions"].push_back(to_json(d));
  return j;
}

Json to_json(const BalanceReport& r, const ModuliComplex& m) {
  Json j;
  j["balanced"] = r.balanced;
  j["faces"] = Json::array();
  for (const auto& e : r.entries)
    j["faces"].push_back({{"face", e.face},
                          {"type", describe(m.cells.at(e.face).type)},
                          {"balanced", e.balanced},
                          {"neighbors", e.neighbors},
                          {"residual", to_json(e.residual)}});
  return j;
}

Json to_json(const ModuliComplex& m, const BalanceReport* balance) {
  Json j;
  j["schema"] = kFanSchema;
  j["target"] = to_json(m.target);
  j["target"].erase("schema");
  j["degree"] = to_json(m.degree);
  j["covering_degree"] = m.covering_degree;
  j["expected_dimension"] = m.expected_dimension;
  j["dimension"] = m.dimension();
  j["pure"] = m.pure;
  const int top = m.dimension();
  j["cells"] = Json::array();
  for (std::size_t i = 0; i < m.cells.size(); ++i) {
    const auto& c = m.cells[i];
    Json cj = to_json(c.type);
    cj["id"] = static_cast<int>(i);
    cj["dimension"] = c.dimension;
    cj["maximal"] = c.maximal;
    cj["description"] = describe(c.type);
    if (c.dimension == top) cj["weight"] = to_json(c.weight);
    j["cells"].push_back(std::move(cj));
  }
  j["facets"] = Json::array();
  for (const auto& [f, c] : m.facets) j["facets"].push_back({f, c});

  Json counts = Json::array();
  for (int d = 0; d <= std::max(top, 0); ++d) counts.push_back(m.cells_of_dimension(d).size());
  Json weights = Json::array();
  for (int c : m.cells_of_dimension(top)) weights.push_back(to_json(m.cells[c].weight));
  j["summary"] = {{"cells_per_dimension", counts},
                  {"maximal_cells", m.cells_of_dimension(top).size()},
                  {"weights", weights},
                  {"line", summary_line(m)}};
  if (balance) j["balance"] = to_json(*balance, m);
  return j;
}

ModuliComplex complex_from_json(const Json& j) {
  require_schema(j, kFanSchema);
  ModuliComplex m;
  m.target = target_from_json(field(j, "target"));
  m.degree = degree_from_json(field(j, "degree"));
  m.degree.validate(m.target.ambient_dim);
  m.covering_degree = int_field(j, "covering_degree");
  m.expected_dimension = int_field(j, "expected_dimension");
  const Json& pure = field(j, "pure");
  if (!pure.is_boolean()) throw InputError("'pure' must be a boolean");
  m.pure = pure.get<bool>();
  const Json& cells = field(j, "cells");
  if (!cells.is_array()) throw InputError("'cells' must be an array");
  const int n = m.degree.size();
  for (const auto& cj : cells) {
    if (int_field(cj, "id") != static_cast<int>(m.cells.size())) throw InputError("cell ids must be 0, 1, 2, ...");
    std::vector<LabelSet> splits;
    for (const auto& s : field(cj, "splits")) {
      LabelSet ls = 0;
      for (int l : int_list(s, "split label")) {
        if (l < 1 || l > n) throw InputError("split label out of range");
        ls |= label_bit(l);
      }
      splits.push_back(ls);
    }
    std::vector<Cell> vc;
    for (const auto& c : field(cj, "vertex_cells")) vc.push_back(cell_from_json(c));
    ModuliCell c;
    c.type = make_type(m.degree, std::move(splits), std::move(vc));
    if (!is_admissible(c.type, m.target)) throw InputError("cell " + std::to_string(m.cells.size()) + " is not admissible");
    auto w = feasibility_witness(c.type, m.target);
    if (!w) throw InputError("cell " + std::to_string(m.cells.size()) + " is empty");
    c.witness = std::move(*w);
    c.dimension = int_field(cj, "dimension");
    if (c.dimension != cell_dimension(c.type)) throw InputError("cell dimension does not match its type");
    const Json& mx = field(cj, "maximal");
    if (!mx.is_boolean()) throw InputError("'maximal' must be a boolean");
    c.maximal = mx.get<bool>();
    if (cj.contains("weight")) c.weight = rational_from_json(cj["weight"]);
    m.cells.push_back(std::move(c));
  }
  for (const auto& p : field(j, "facets")) {
    const auto fc = int_list(p, "facet");
    if (fc.size() != 2) throw InputError("facets are [face, cell] pairs");
    for (int x : fc)
      if (x < 0 || x >= static_cast<int>(m.cells.size())) throw InputError("facet refers to an unknown cell");
    m.facets.emplace_back(fc[0], fc[1]);
  }
  return m;
}

std::string summary_line(const ModuliComplex& m) {
  const int top = m.dimension();
  const auto tops = m.cells_of_dimension(top);
  int maximal = 0;
  std::string ws;
  for (int c : tops) {
    if (m.cells[c].maximal) ++maximal;
    ws += (ws.empty() ? "" : ",") + m.cells[c].weight.get_str();
  }
  return "dim " + std::to_string(top) + ", " + std::to_string(maximal) + " maximal cell" + (maximal == 1 ? "" : "s") +
         ", weights " + ws;
}

JobConfig config_from_json(const Json& j, const std::filesystem::path& base_dir) {
  require_schema(j, kConfigSchema);
  JobConfig c;
  const Json& t = field(j, "target");
  if (t.is_string()) {
    std::filesystem::path p = t.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    c.target = target_from_json(load_json(p));
  } else {
    c.target = target_from_json(t);
  }
  const int n = j.contains("n") ? int_field(j, "n") : 0;
  if (n < 0) throw InputError("n must be non-negative");
  c.degree.n_contracted = n;
  for (int k = 0; k < n; ++k) c.degree.directions.emplace_back(c.target.ambient_dim, Integer(0));
  for (const auto& d : field(j, "degree")) {
    IntVector v = int_vector_from_json(d);
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; }))
      throw InputError("'degree' lists the non-contracted directions; use 'n' for contracted ends");
    c.degree.directions.push_back(std::move(v));
  }
  if (j.contains("bounds")) {
    const Json& b = j["bounds"];
    if (b.contains("max_d")) c.max_d = int_field(b, "max_d");
    if (b.contains("max_N")) c.max_n = int_field(b, "max_N");
    if (b.contains("max_cells")) {
      const int mc = int_field(b, "max_cells");
      if (mc <= 0) throw InputError("bounds must be positive");
      c.max_cells = static_cast<std::size_t>(mc);
    }
  }
  if (c.max_d <= 0 || c.max_n <= 0) throw InputError("bounds must be positive");
  c.degree.validate(c.target.ambient_dim);
  return c;
}

Json to_json(const JobConfig& c) {
  Json j;
  j["schema"] = kConfigSchema;
  j["target"] = to_json(c.target);
  j["target"].erase("schema");
  j["n"] = c.degree.n_contracted;
  j["degree"] = Json::array();
  for (int k = c.degree.n_contracted; k < c.degree.size(); ++k) j["degree"].push_back(to_json(c.degree.directions[k]));
  j["bounds"] = {{"max_d", c.max_d}, {"max_N", c.max_n}, {"max_cells", c.max_cells}};
  return j;
}

}  // namespace msl
