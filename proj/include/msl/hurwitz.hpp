#pragma once

// Marked genus-0 Hurwitz numbers via transitive factorizations of the identity
// in the symmetric group.

#include <cstdint>
#include <vector>

#include "msl/lattice.hpp"

namespace msl {

using Partition = std::vector<int>;

struct HurwitzProblem {
  int degree = 0;
  std::vector<Partition> profiles;  // one per branch point
};

struct HurwitzOptions {
  int max_degree = 6;
  bool parallel = true;
  bool use_cache = true;
};

/// Throws InputError unless every profile is a partition of the degree.
void validate(const HurwitzProblem& p);

/// 2d - 2 + (number of parts) - d * (number of profiles).
int genus_zero_dimension(const HurwitzProblem& p);

/// Size of the conjugacy class of the given cycle type in S_d.
Integer class_size(int d, const Partition& mu);

/// Tuples (s_0, ..., s_q) with cycle types mu_i, product the identity and
/// transitive action. The first permutation is fixed to a class
/// representative and the count multiplied by the class size.
std::uint64_t count_factorizations_serial(const HurwitzProblem& p);
std::uint64_t count_factorizations_parallel(const HurwitzProblem& p);
/// Same count without fixing the first permutation.
std::uint64_t count_factorizations_unfixed(const HurwitzProblem& p);

/// raw * prod_i prod_m mult_m(mu_i)! / d!. Throws DomainError("not a rigid
/// local problem") unless the dimension is 0 and BoundExceeded if the degree
/// exceeds opts.max_degree.
Rational hurwitz_number_marked(const HurwitzProblem& p, const HurwitzOptions& opts = {});

void clear_hurwitz_cache();
std::size_t hurwitz_cache_size();

}  // namespace msl
