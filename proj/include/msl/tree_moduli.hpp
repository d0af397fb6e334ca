#pragma once

// Coordinates on the moduli space of N-marked rational tropical curves:
// distance vectors in Q^{N choose 2}, split vectors v_I, the lineality space
// U_N = {x_ij = mu_i + mu_j} and the four-point forgetful projections.
//
// Labels are 1-based throughout. Pair coordinates are ordered
// lexicographically: (1,2), (1,3), ..., (1,N), (2,3), ..., (N-1,N).

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "msl/lattice.hpp"

namespace msl {

/// Bit (i-1) set <=> label i is in the set. Supports N <= 31.
using LabelSet = std::uint32_t;

constexpr int kMaxLabels = 31;

inline LabelSet label_bit(int label) { return LabelSet{1} << (label - 1); }
inline LabelSet all_labels(int n) { return n >= 32 ? ~LabelSet{0} : (LabelSet{1} << n) - 1; }
int label_count(LabelSet s);
std::vector<int> labels_of(LabelSet s);
LabelSet make_label_set(std::initializer_list<int> labels);

/// The representative of {I, I^c} that does not contain label 1.
LabelSet canonical_split(LabelSet side, int n);

std::size_t pair_count(int n);
/// Index of the coordinate {i, j}, i != j.
std::size_t pair_index(int i, int j, int n);

using Quad = std::array<int, 4>;
/// All 4-element label subsets in lexicographic order.
std::vector<Quad> four_subsets(int n);

/// Abstract N-marked tree with bounded edges of positive rational length.
/// Leaves are the labels 1..N; internal vertices are 0..vertex_count-1.
struct MarkedTree {
  struct Edge {
    int u;
    int v;
    Rational length;
  };
  int n_leaves = 0;
  int vertex_count = 0;
  std::vector<int> leaf_vertex;  // leaf_vertex[label - 1]
  std::vector<Edge> edges;

  /// Throws InputError unless connected, acyclic, every vertex 3-valent or
  /// more (counting leaves) and every length positive.
  void validate() const;
  /// Split (side without label 1) induced by each bounded edge.
  std::vector<LabelSet> edge_splits() const;
};

/// Sorted list of splits; the combinatorial type of a MarkedTree.
using TreeType = std::vector<LabelSet>;

TreeType tree_type(const MarkedTree& t);
bool splits_compatible(LabelSet a, LabelSet b);

/// Distances between leaves, summing bounded-edge lengths along each path.
RatVector distance_vector(const MarkedTree& t);

/// v_I: entry {i,j} is 1 iff exactly one of i, j lies in I.
/// Throws InputError("not a moduli split") unless 1 < |I| < N-1.
RatVector split_vector(LabelSet split, int n);
IntVector split_vector_int(LabelSet split, int n);

/// x in U_N, decided by solving x_ij = mu_i + mu_j exactly. Requires N >= 4.
bool is_zero_mod_UN(std::span<const Rational> x, int n);

/// Same question answered through all C(N,4) four-point projections.
bool is_zero_mod_UN_by_projections(std::span<const Rational> x, int n);

/// x_ij + x_kl == x_ik + x_jl == x_il + x_jk for a vector in Q^6.
bool is_zero_mod_U4(std::span<const Rational> x6);

/// Sub-vector of the coordinates with both labels in `quad`, in the
/// canonical Q^6 order (ij, ik, il, jk, jl, kl) for i<j<k<l.
RatVector forgetful_project(std::span<const Rational> x, int n, const Quad& quad);

/// The mu with x - (mu_i + mu_j) vanishing on (1,2), (1,3), (2,3) and (1,k) for k >= 4.
RatVector lineality_coefficients(std::span<const Rational> x, int n);

/// x minus the element of U_N selected by lineality_coefficients. Idempotent,
/// and two vectors have the same representative iff they differ by U_N.
RatVector canonical_rep_mod_UN(std::span<const Rational> x, int n);

/// A Q^6 vector modulo U_4 is either zero or a rational multiple c of one of
/// the three split vectors. `split` indexes {ij|kl, ik|jl, il|jk}.
struct FourPointClass {
  bool zero = false;
  int split = -1;
  Rational multiple;
};
std::optional<FourPointClass> classify_four_point(std::span<const Rational> x6);

}  // namespace msl
