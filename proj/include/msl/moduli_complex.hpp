#pragma once

// The weighted polyhedral complex M_{0,n}(L, Sigma): cell weights from the
// gluing matrix, linear embedding coordinates, face relations and the
// codimension-one balancing test.

#include <optional>
#include <string>
#include <vector>

#include "msl/hurwitz.hpp"
#include "msl/stable_map.hpp"

namespace msl {

/// Rows: bounded edges. Columns: positions of vertices over edges of L (vertex
/// order), then the cut half-edge lengths on the parent side (edge order),
/// then on the child side. Throws DomainError for non-maximal types.
IntMatrix gluing_matrix(const StableMapType& t, const TargetCurve& l);

/// gcd of maximal minors of the gluing matrix times the product of Hurwitz
/// numbers at vertices over vertices of L.
Rational cell_weight(const StableMapType& t, const TargetCurve& l, const HurwitzOptions& opts = {});

/// Chart of a cell in the coordinates z = (bounded edge lengths, h(V_0)),
/// V_0 the vertex carrying end 1.
struct CellChart {
  IntMatrix constraints;  // homogeneous equations cutting out the tangent space
  IntMatrix lattice;      // columns: basis of Z^{E+r} cap tangent space
  RatMatrix embedding;    // z -> canonical distance coordinates (+) anchor
};

/// The embedding is linear in z: distance part is the canonical representative
/// of sum_e l_e v_{I_e}, anchor part is h(V_0) - mu_1 delta_1 where mu is the
/// lineality correction of that representative.
RatMatrix embedding_matrix(const StableMapType& t, int ambient_dim);
CellChart cell_chart(const StableMapType& t, const TargetCurve& l);

/// Coordinates z of a witness point.
RatVector chart_point(const StableMapType& t, const CellWitness& w);
/// Embedding of a point of the cell given by its witness data.
RatVector embed(const StableMapType& t, const CellWitness& w, int ambient_dim);

/// Vertex map sigma -> tau if tau is a face of sigma (tau obtained by
/// contracting edges, with compatible cells), otherwise nullopt.
std::optional<std::vector<int>> face_map(const StableMapType& sigma, const StableMapType& tau, const TargetCurve& l);

struct ModuliCell {
  StableMapType type;
  int dimension = 0;
  bool maximal = false;
  Rational weight;  // meaningful for cells of top dimension
  CellWitness witness;
};

struct ModuliComplex {
  TargetCurve target;
  DegreeSpec degree;
  int covering_degree = 0;
  int expected_dimension = 0;
  std::vector<ModuliCell> cells;
  /// (face, cell) pairs with dimensions differing by one.
  std::vector<std::pair<int, int>> facets;
  bool pure = false;

  int dimension() const;
  std::vector<int> cells_of_dimension(int d) const;
};

struct BuildOptions {
  EnumerateOptions enumerate;
  HurwitzOptions hurwitz;
  bool parallel = true;
};

ModuliComplex build_complex(const TargetCurve& l, const DegreeSpec& sigma, const BuildOptions& opts = {});

struct BalanceEntry {
  int face = 0;
  bool balanced = false;
  std::vector<int> neighbors;
  RatVector residual;  // sum of weight * primitive normal
};

struct BalanceReport {
  bool balanced = true;
  std::vector<BalanceEntry> entries;
};

BalanceReport check_global_balancing(const ModuliComplex& m, bool parallel = true);

/// Primitive normal of sigma relative to its face tau, in embedding coordinates.
RatVector primitive_normal(const StableMapType& sigma, const StableMapType& tau, const TargetCurve& l);

}  // namespace msl
