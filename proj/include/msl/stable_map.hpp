#pragma once

// Combinatorial types of rational tropical stable maps with image in a smooth
// curve L: degree data, local numerology at vertices, and enumeration.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "msl/hurwitz.hpp"
#include "msl/target_curve.hpp"
#include "msl/tree_moduli.hpp"

namespace msl {

/// Directions of the N ends; the first n_contracted are zero.
struct DegreeSpec {
  int n_contracted = 0;
  std::vector<IntVector> directions;

  int size() const { return static_cast<int>(directions.size()); }
  /// Throws InputError on shape problems or if the directions do not sum to zero.
  void validate(int ambient_dim) const;
};

/// Total end weight covering each ray of L. Throws DomainError
/// ("degree incompatible with L") if ends are off the rays or coverage differs.
int covering_degree(const DegreeSpec& sigma, const TargetCurve& l);

int riemann_hurwitz(int n_v, int n_contracted_v, int d_v, int val_w);
/// r = 1 for a vertex over a vertex of L, 0 over an edge.
int rdim(int n_v, int d_v, int val_w, int r);
int classification_number(int n_v, int r);

/// |Sigma| - d * sum_W (val W - 2) - 2.
int expected_dimension(const DegreeSpec& sigma, const TargetCurve& l);

/// A half-edge at a vertex of the type: either an end (label > 0) or one side
/// of a bounded edge.
struct Flag {
  int label = 0;
  int edge = -1;
  int other = -1;
  IntVector direction;  // outgoing from the vertex
};

/// Vertex 0 is the vertex carrying leaf 1. Bounded edge k corresponds to
/// splits[k] and joins its child vertex k+1 to parent[k+1]; its direction
/// points from parent to child and equals the sum of the end directions in
/// the split.
struct StableMapType {
  int n_leaves = 0;
  int n_contracted = 0;
  std::vector<LabelSet> splits;
  std::vector<int> parent;
  std::vector<int> leaf_vertex;
  std::vector<IntVector> edge_direction;
  std::vector<IntVector> end_direction;
  std::vector<Cell> cell;

  int vertex_count() const { return static_cast<int>(parent.size()); }
  int edge_count() const { return static_cast<int>(splits.size()); }
  std::vector<Flag> flags(int v) const;
  std::vector<int> children(int v) const;
  bool is_pinned(int v) const { return cell[v].kind == CellKind::Vertex; }
  bool is_contracted(int e) const;
  /// Vertices in root-first order.
  std::vector<int> topological_order() const;

  bool operator==(const StableMapType& o) const { return splits == o.splits && cell == o.cell; }
  bool operator<(const StableMapType& o) const {
    return splits != o.splits ? splits < o.splits : cell < o.cell;
  }
};

/// The tree on splits (side without label 1, laminar, 2 <= |S| <= N-2) with
/// directions propagated from sigma. Cells default to vertex 0 of L.
StableMapType make_type(const DegreeSpec& sigma, std::vector<LabelSet> splits, std::vector<Cell> cells = {});

struct LocalDegree {
  int n_v = 0;            // N_V
  int n_contracted = 0;   // n_V
  int d_v = 0;
  int val_w = 2;
  bool pinned = false;
  /// Over a vertex of L: part sizes along each branch of W, in branch order.
  std::vector<std::vector<int>> profiles;
};

/// Throws DomainError if a direction at a pinned vertex is not along L or the
/// coverage is not constant.
LocalDegree local_degree(const StableMapType& t, const TargetCurve& l, int v);

/// H(Sigma_V) for a vertex over a vertex of L with rdim 0 after dropping contracted flags.
Rational hurwitz_for_local_degree(const LocalDegree& ld, const HurwitzOptions& opts = {});

/// Vertices over edge interiors plus contracted bounded edges at vertices of L.
int cell_dimension(const StableMapType& t);
bool is_maximal_type(const StableMapType& t, const TargetCurve& l);

/// A point of the open cell: h(V) for every vertex and all bounded edge lengths.
struct CellWitness {
  std::vector<RatVector> position;
  RatVector lengths;
};

/// Constructs a point in the relative interior of M(alpha) and verifies it
/// exactly, or returns nullopt if the placement constraints are inconsistent.
std::optional<CellWitness> feasibility_witness(const StableMapType& t, const TargetCurve& l);
bool verify_witness(const StableMapType& t, const TargetCurve& l, const CellWitness& w);

/// Checks the local cell rules of a fully assigned type: edges follow L,
/// ends run along rays, coverage is constant and RH >= 0 everywhere.
bool is_admissible(const StableMapType& t, const TargetCurve& l, std::string* why = nullptr);

struct EnumerateOptions {
  std::size_t max_cells = 200000;
  int max_leaves = 10;
  int max_degree = 6;
  std::optional<int> dimension;
  bool parallel = true;
  std::function<void(const std::string&)> log;
};

/// All admissible nonempty types, sorted canonically.
std::vector<StableMapType> enumerate_types(const TargetCurve& l, const DegreeSpec& sigma, const EnumerateOptions& opts = {});

std::string describe(const StableMapType& t);

}  // namespace msl
