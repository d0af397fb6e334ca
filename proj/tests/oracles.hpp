#pragma once

// Independent reference computations and fixtures shared by the unit tests
// and the acceptance binary.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "msl/io.hpp"

namespace oracle {

/// Leibniz expansion over all permutations.
msl::Integer leibniz_determinant(const msl::IntMatrix& m);
/// gcd of all maximal minors, each by leibniz_determinant.
msl::Integer brute_gcd_maximal_minors(const msl::IntMatrix& m);

/// Leaf-to-leaf path sums found by depth-first search.
msl::RatVector path_distance_vector(const msl::MarkedTree& t);

/// Marked Hurwitz number from every tuple of permutations in S_d with the
/// given cycle types (the last one forced by the product), no class fixing.
msl::Rational brute_hurwitz(const msl::HurwitzProblem& p);
/// All partitions of d in decreasing order.
std::vector<msl::Partition> partitions(int d);
/// Rigid problems (dimension 0) with degree <= max_d and at most max_profiles
/// profiles, profiles listed in non-increasing order.
std::vector<msl::HurwitzProblem> rigid_problems(int max_d, int max_profiles);

/// Case table of boundary multiplicities: value and split index into
/// {ij|kl, ik|jl, il|jk} of the sorted quad (split -1 when the value is 0).
struct TableEntry {
  msl::Integer value;
  int split = -1;
};
TableEntry boundary_multiplicity(const msl::Resolution& r, const msl::VertexStar& s, const msl::Quad& labels);

/// Every star over L^q_1 with q in qs, degree <= max_d, rdim 1, N_V <= max_nv
/// and n_V in {0, 1}: one partition of d per ray, end labels in ray order and
/// the contracted label at every position.
std::vector<msl::VertexStar> rdim_one_stars(const std::vector<int>& qs, int max_d, int max_nv);

/// |Sigma| - d * sum_W (val W - 2) - 2, counting valences from the edge and
/// ray lists and the degree from the ends along the first ray.
int formula_dimension(const msl::TargetCurve& l, const msl::DegreeSpec& sigma);

struct CorpusCase {
  std::string name;
  msl::JobConfig config;
};
/// Every *.json configuration in dir, sorted by name.
std::vector<CorpusCase> load_corpus(const std::filesystem::path& dir);

/// The two golden gluing configurations on the standard plane line: one
/// on-ray vertex joined to one (resp. two) rigid vertices over the vertex.
msl::StableMapType single_edge_configuration(int d1);
msl::StableMapType double_edge_configuration(int d1, int d2);

/// Random vector in U_N (x_ij = a_i + a_j with random rational a).
msl::RatVector random_in_UN(std::mt19937& rng, int n);
/// random_in_UN plus a nonzero multiple of one coordinate vector; never in U_N for N >= 4.
msl::RatVector random_outside_UN(std::mt19937& rng, int n);

/// Evaluation differences ev_f - ev_f' at a glued witness point, with every
/// bounded edge cut at fraction `cut`: rows of g applied to the local
/// coordinates (positions along L-cells, cut half-edge lengths) plus the
/// fixed coordinates of endpoints over vertices of L. Zero for the true matrix.
msl::RatVector gluing_residual(const msl::StableMapType& t, const msl::TargetCurve& l, const msl::CellWitness& w,
                               const msl::IntMatrix& g, const msl::Rational& cut);

}  // namespace oracle
