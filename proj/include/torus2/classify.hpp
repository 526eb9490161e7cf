#pragma once

#include "torus2/braid.hpp"

namespace torus2 {

// Canonical data of a commuting pair ((w^r,(a,b)), (w^s,(c,d))) in P2(T^2).
// w is the identity (with r = s = 0) or primitive with (r,s) != (0,0), and
// the sign representative of {w, w^-1} is fixed by canonicalization.
struct SplitMapClass {
  FreeWord w{2};
  long long r = 0, s = 0;
  long long a = 0, b = 0, c = 0, d = 0;

  friend bool operator==(const SplitMapClass&, const SplitMapClass&) = default;
};

// Extracts (w, r, s, a, b, c, d) from a commuting pair. Throws a domain
// error when the free parts do not commute (the pair then defines no map
// of the torus).
SplitMapClass canonical_pair(const P2Element& alpha, const P2Element& beta);

// Equality of ordered homotopy classes: same lattice data and conjugate
// roots with matching exponents up to a global sign.
bool free_equal(const SplitMapClass& c1, const SplitMapClass& c2);

// The other lift of the same unordered class.
SplitMapClass swap_class(const SplitMapClass& c);

// Equality of unordered classes: equal as ordered classes or after a swap.
bool unordered_equal(const SplitMapClass& c1, const SplitMapClass& c2);

}  // namespace torus2
