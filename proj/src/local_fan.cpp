#include "msl/local_fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "msl/error.hpp"

namespace msl {

namespace {

std::vector<int> coverage(const VertexStar& s) {
  std::vector<int> cov(s.q + 1, 0);
  for (const auto& e : s.ends) cov.at(e.ray) += e.weight;
  return cov;
}

const StarEnd& end_with_label(const VertexStar& s, int label) {
  for (const auto& e : s.ends)
    if (e.label == label) return e;
  throw InputError("no end with label " + std::to_string(label));
}

int fresh_label(const VertexStar& s) {
  const auto ls = s.labels();
  return ls.empty() ? 1 : ls.back() + 1;
}

LabelSet positions_of(const VertexStar& s, const std::vector<int>& labels) {
  LabelSet out = 0;
  for (int l : labels) out |= label_bit(s.position(l));
  return out;
}

int rh_of(const VertexStar& s) { return s.n_v() - s.n_contracted() - s.degree() * (s.q - 1) - 2; }

}  // namespace

int VertexStar::degree() const {
  const auto cov = coverage(*this);
  if (std::adjacent_find(cov.begin(), cov.end(), std::not_equal_to<>()) != cov.end())
    throw DomainError("star is not balanced: ray coverage differs");
  return cov.front();
}

int VertexStar::rdim() const { return n_v() - degree() * (q - 1) + 1 - 3; }

std::vector<int> VertexStar::labels() const {
  std::vector<int> out;
  for (const auto& e : ends) out.push_back(e.label);
  if (contracted_label) out.push_back(*contracted_label);
  std::sort(out.begin(), out.end());
  return out;
}

int VertexStar::position(int label) const {
  const auto ls = labels();
  auto it = std::lower_bound(ls.begin(), ls.end(), label);
  if (it == ls.end() || *it != label) throw InputError("unknown label " + std::to_string(label));
  return static_cast<int>(it - ls.begin()) + 1;
}

void VertexStar::validate() const {
  if (q < 1) throw InputError("star needs q >= 1");
  const auto ls = labels();
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end()) throw InputError("star labels must be distinct");
  if (static_cast<int>(ls.size()) > kMaxLabels) throw InputError("too many star ends");
  for (const auto& e : ends) {
    if (e.ray < 0 || e.ray > q) throw InputError("star end ray index out of range");
    if (e.weight < 1) throw InputError("star end weights must be positive");
  }
  const int d = degree();
  if (d < 1) throw DomainError("star has degree 0");
  if (rdim() != 1) throw DomainError("local fan requires rdim(V) = 1, got " + std::to_string(rdim()));
  if (rh_of(*this) < 0) throw DomainError("star violates RH >= 0");
}

std::string to_string(const Resolution& r) {
  auto list = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + "}";
  };
  switch (r.kind) {
    case ResolutionKind::TypeI:
      return "I(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
    case ResolutionKind::TypeII:
      return "II(" + std::to_string(r.i) + ";" + std::to_string(r.d1) + list(r.side1) + "|" + std::to_string(r.d2) +
             list(r.side2) + ")";
    case ResolutionKind::ContractedEnd:
      return "C(" + std::to_string(r.i) + ")";
  }
  return "?";
}

std::vector<VertexStar> resolution_vertices(const Resolution& r, const VertexStar& s) {
  const int fresh = fresh_label(s);
  switch (r.kind) {
    case ResolutionKind::TypeI: {
      const StarEnd& a = end_with_label(s, r.i);
      const StarEnd& b = end_with_label(s, r.j);
      VertexStar v{s.q, {}, std::nullopt};
      for (const auto& e : s.ends)
        if (e.label != r.i && e.label != r.j) v.ends.push_back(e);
      v.ends.push_back({a.ray, a.weight + b.weight, fresh});
      return {v};
    }
    case ResolutionKind::TypeII: {
      const StarEnd& a = end_with_label(s, r.i);
      VertexStar v1{s.q, {}, std::nullopt}, v2{s.q, {}, std::nullopt};
      for (int l : r.side1) v1.ends.push_back(end_with_label(s, l));
      for (int l : r.side2) v2.ends.push_back(end_with_label(s, l));
      v1.ends.push_back({a.ray, r.d1, fresh});
      v2.ends.push_back({a.ray, r.d2, fresh});
      return {v1, v2};
    }
    case ResolutionKind::ContractedEnd:
      return {VertexStar{s.q, s.ends, std::nullopt}};
  }
  return {};
}

std::vector<Resolution> enumerate_resolutions(const VertexStar& s) {
  s.validate();
  std::vector<Resolution> out;
  if (s.contracted_label) {
    std::vector<int> partners;
    for (const auto& e : s.ends) partners.push_back(e.label);
    std::sort(partners.begin(), partners.end());
    for (int i : partners) out.push_back({ResolutionKind::ContractedEnd, i, *s.contracted_label, 0, 0, {}, {}});
    return out;
  }
  std::vector<StarEnd> ends = s.ends;
  std::sort(ends.begin(), ends.end(), [](const StarEnd& a, const StarEnd& b) { return a.label < b.label; });
  const int n = static_cast<int>(ends.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (ends[a].ray == ends[b].ray)
        out.push_back({ResolutionKind::TypeI, ends[a].label, ends[b].label, ends[a].weight + ends[b].weight, 0, {}, {}});

  for (int a = 0; a < n; ++a) {
    const StarEnd& split = ends[a];
    if (split.weight < 2) continue;
    std::vector<int> others;
    for (int b = 0; b < n; ++b)
      if (b != a) others.push_back(b);
    const int m = static_cast<int>(others.size());
    for (int d1 = 1; d1 < split.weight; ++d1) {
      const int d2 = split.weight - d1;
      for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << m); ++mask) {
        Resolution r{ResolutionKind::TypeII, split.label, 0, d1, d2, {}, {}};
        for (int k = 0; k < m; ++k) ((mask >> k) & 1u ? r.side1 : r.side2).push_back(ends[others[k]].label);
        if (r.side1.front() > r.side2.front()) continue;
        bool ok = true;
        for (const auto& v : resolution_vertices(r, s)) {
          const auto cov = coverage(v);
          if (std::adjacent_find(cov.begin(), cov.end(), std::not_equal_to<>()) != cov.end() || rh_of(v) < 0) {
            ok = false;
            break;
          }
        }
        if (ok) out.push_back(std::move(r));
      }
    }
  }
  return out;
}

IntVector ray_vector(const Resolution& r, const VertexStar& s) {
  const int n = s.n_v();
  switch (r.kind) {
    case ResolutionKind::TypeI:
      return split_vector_int(positions_of(s, {r.i, r.j}), n);
    case ResolutionKind::ContractedEnd:
      return split_vector_int(positions_of(s, {r.i, r.j}), n);
    case ResolutionKind::TypeII: {
      const IntVector v1 = split_vector_int(positions_of(s, r.side1), n);
      const IntVector v2 = split_vector_int(positions_of(s, r.side2), n);
      IntVector out(v1.size());
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = r.d2 * v1[k] + r.d1 * v2[k];
      return out;
    }
  }
  return {};
}

HurwitzProblem star_hurwitz_problem(const VertexStar& s) {
  HurwitzProblem p;
  p.degree = s.degree();
  p.profiles.assign(s.q + 1, {});
  for (const auto& e : s.ends) p.profiles[e.ray].push_back(e.weight);
  for (auto& mu : p.profiles) std::sort(mu.begin(), mu.end(), std::greater<>());
  return p;
}

Rational resolution_weight(const Resolution& r, const VertexStar& s, const HurwitzOptions& opts) {
  Rational w = 1;
  for (const auto& v : resolution_vertices(r, s)) w *= hurwitz_number_marked(star_hurwitz_problem(v), opts);
  if (r.kind == ResolutionKind::TypeII) w *= std::gcd(r.d1, r.d2);
  return w;
}

FtMultiplicity ft_multiplicity(const Resolution& r, const VertexStar& s, const Quad& labels) {
  Quad pos;
  for (int k = 0; k < 4; ++k) pos[k] = s.position(labels[k]);
  std::sort(pos.begin(), pos.end());
  const IntVector v = ray_vector(r, s);
  const RatVector proj = forgetful_project(to_rational(v), s.n_v(), pos);
  const auto cls = classify_four_point(proj);
  if (!cls) throw Error("projection is not proportional to a split vector");
  if (cls->zero) return {Integer(0), -1};
  if (cls->multiple <= 0 || cls->multiple.get_den() != 1) throw Error("projection multiple is not a positive integer");
  return {cls->multiple.get_num(), cls->split};
}

std::vector<WeightedRay> build_local_fan(const VertexStar& s, const HurwitzOptions& opts) {
  std::vector<WeightedRay> out;
  for (auto& r : enumerate_resolutions(s)) {
    WeightedRay w;
    const auto pl = primitive_and_length(ray_vector(r, s));
    w.primitive = pl.primitive;
    w.lattice_length = pl.length;
    w.weight = resolution_weight(r, s, opts);
    w.hurwitz = w.weight / Rational(pl.length);
    w.resolution = std::move(r);
    out.push_back(std::move(w));
  }
  return out;
}

LocalBalance check_balanced_local(const std::vector<WeightedRay>& rays, int n_v) {
  RatVector sum(pair_count(n_v), Rational(0));
  for (const auto& r : rays) {
    if (r.weight == 0) continue;
    if (r.primitive.size() != sum.size()) throw InputError("rays do not share N_V");
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += r.weight * r.primitive[k];
  }
  LocalBalance b;
  b.residual = canonical_rep_mod_UN(sum, n_v);
  b.balanced = is_zero_mod_UN(sum, n_v);
  return b;
}

}  // namespace msl
