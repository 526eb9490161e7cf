#pragma once

#include <optional>

#include "torus2/freeword.hpp"

namespace torus2 {

// Decomposition a = (hat(l) l)^s hat(l), b = (l hat(l))^r l.
struct E1Witness {
  FreeWord lambda;
  long long r = 0;
  long long s = 0;
};

// Decomposition w = (l hat(l))^l_exp.
struct E2Witness {
  FreeWord lambda;
  long long l = 0;
};

// Some lambda with lambda * hat(lambda) == g exactly, if one exists.
std::optional<FreeWord> solve_lambda_pair(const FreeWord& g);

// Witness iff w is conjugate to hat(w). Rank 2.
std::optional<E2Witness> is_hat_conjugate(const FreeWord& w);

// Witness iff a*b == hat(b)*hat(a). Requires the concatenation a*b to be
// reduced as written (no cancellation between a and b).
std::optional<E1Witness> solve_E1(const FreeWord& a, const FreeWord& b);

}  // namespace torus2
