#pragma once

// One-dimensional local moduli spaces of a vertex over a vertex of L with
// rdim 1: resolutions, ray vectors, weights and the local balancing test.

#include <optional>
#include <string>
#include <vector>

#include "msl/hurwitz.hpp"
#include "msl/tree_moduli.hpp"

namespace msl {

struct StarEnd {
  int ray = 0;     // index of the ray of L^q_1, 0..q
  int weight = 1;  // m_j
  int label = 0;
};

/// Local degree of a vertex mapping to the vertex of L^q_1. Labels are
/// arbitrary distinct integers; coordinates index them in increasing order.
struct VertexStar {
  int q = 2;
  std::vector<StarEnd> ends;            // non-contracted
  std::optional<int> contracted_label;  // n_V = 1

  int n_v() const { return static_cast<int>(ends.size()) + (contracted_label ? 1 : 0); }
  int n_contracted() const { return contracted_label ? 1 : 0; }
  /// Common coverage of the q+1 rays; throws DomainError if not constant.
  int degree() const;
  int rdim() const;
  /// Sorted labels, contracted label included.
  std::vector<int> labels() const;
  /// 1-based coordinate position of a label.
  int position(int label) const;
  /// Throws InputError on malformed data and DomainError unless balanced,
  /// rdim 1, RH >= 0 and n_V <= 1.
  void validate() const;
};

enum class ResolutionKind { TypeI, TypeII, ContractedEnd };

/// Type I merges ends i, j. Type II splits end i into weights d1 + d2 with
/// the remaining ends partitioned as side1 | side2 (labels, not positions).
/// ContractedEnd attaches the contracted end next to end i.
struct Resolution {
  ResolutionKind kind = ResolutionKind::TypeI;
  int i = 0;
  int j = 0;
  int d1 = 0;
  int d2 = 0;
  std::vector<int> side1;
  std::vector<int> side2;
};

std::string to_string(const Resolution& r);

std::vector<Resolution> enumerate_resolutions(const VertexStar& s);

/// Ray generator in Z^{C(N_V,2)}: v_{ij}, d2 v_{I1} + d1 v_{I2}, or v_{c,i}.
IntVector ray_vector(const Resolution& r, const VertexStar& s);

/// The vertex stars created by the resolution (one for type I and
/// ContractedEnd, two for type II), with the new edge labelled by a fresh label.
std::vector<VertexStar> resolution_vertices(const Resolution& r, const VertexStar& s);

/// Gluing weight: H(V1), gcd(d1,d2) H(V1) H(V2), or H(Sigma_V minus the contracted end).
Rational resolution_weight(const Resolution& r, const VertexStar& s, const HurwitzOptions& opts = {});

/// Hurwitz problem of a star with rdim 0 (contracted ends dropped).
HurwitzProblem star_hurwitz_problem(const VertexStar& s);

struct FtMultiplicity {
  Integer value;
  int split = -1;  // index into {ij|kl, ik|jl, il|jk} of the sorted labels, -1 if zero
};

/// The c >= 0 with ft_quad(ray_vector) = c * v_split mod U_4. Throws Error if
/// the projection is not a non-negative multiple of a split vector.
FtMultiplicity ft_multiplicity(const Resolution& r, const VertexStar& s, const Quad& labels);

struct WeightedRay {
  Resolution resolution;
  IntVector primitive;
  Integer lattice_length;
  Rational weight;    // gluing weight
  Rational hurwitz;   // H_alpha = weight / lattice_length
};

/// All resolutions with weights; weight-0 rays are kept and flagged by weight.
std::vector<WeightedRay> build_local_fan(const VertexStar& s, const HurwitzOptions& opts = {});

struct LocalBalance {
  bool balanced = false;
  RatVector residual;  // canonical representative of sum weight * primitive
};

LocalBalance check_balanced_local(const std::vector<WeightedRay>& rays, int n_v);

}  // namespace msl
