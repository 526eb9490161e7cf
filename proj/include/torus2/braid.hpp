#pragma once

#include <array>
#include <string>
#include <vector>

#include "torus2/freeword.hpp"

namespace torus2 {

// Generator indices. Rank-2 words use {u,v} or {x,y}; rank-3 words use {u,v,B}.
inline constexpr int kGenU = 0;
inline constexpr int kGenV = 1;
inline constexpr int kGenB = 2;
inline constexpr int kGenX = 0;
inline constexpr int kGenY = 1;

// Element of P2(T^2) = F2(u,v) x Z^2.
struct P2Element {
  FreeWord free_part{2};
  std::array<long long, 2> lattice_part{0, 0};

  friend bool operator==(const P2Element&, const P2Element&) = default;
};

P2Element p2_identity();
P2Element p2_mul(const P2Element& g, const P2Element& h);
P2Element p2_inverse(const P2Element& g);

// Conjugation by the band generator:
// sigma (w,(x,y)) sigma^-1 = (u v^-1 hat(w) v u^-1, (x+|w|_u, y+|w|_v)).
P2Element sigma_conj(const P2Element& g);

// The element sigma^2 = ([u,v^-1], (0,0)).
P2Element sigma_squared();

// Element of B2(T^2) in the normal form g * sigma^eps.
struct B2Element {
  P2Element coset_rep;
  int epsilon = 0;  // 0 or 1

  friend bool operator==(const B2Element&, const B2Element&) = default;
};

B2Element b2_identity();
B2Element b2_sigma();
B2Element b2_mul(const B2Element& g, const B2Element& h);
B2Element b2_inverse(const B2Element& g);

// Element of P2(T^2 \ {1}) = F3(u,v,B) x| F2(x,y), pair (kernel, quotient).
struct PuncturedElement {
  FreeWord kernel_part{3};    // over {u,v,B}
  FreeWord quotient_part{2};  // over {x,y}

  friend bool operator==(const PuncturedElement&, const PuncturedElement&) = default;
};

PuncturedElement pp_identity();
// Image of k under the automorphism of F3 given by conjugation by t.
FreeWord pp_act(const FreeWord& t, const FreeWord& k);
PuncturedElement pp_mul(const PuncturedElement& g, const PuncturedElement& h);
PuncturedElement pp_inverse(const PuncturedElement& g);
PuncturedElement pp_pow(const PuncturedElement& g, long long e);

// Projection alpha: erase B, send x,y to the lattice.
P2Element alpha(const PuncturedElement& g);

struct RelationResult {
  std::string name;
  bool pass;
};

// Evaluates every relation of the three presentations (plus the derived
// conjugation identities) in the implemented arithmetic.
std::vector<RelationResult> check_relations();

}  // namespace torus2
