#pragma once

#include <optional>

#include "torus2/classify.hpp"

namespace torus2 {

// Root analogue of a SplitMapClass: images of the torus generators are
// (w^r,(a1,b)) and (w^s,(c,d1)) with a1 = a-1, d1 = d-1.
struct RootData {
  FreeWord w{2};
  long long r = 0, s = 0;
  long long a1 = 0, b = 0, c = 0, d1 = 0;

  friend bool operator==(const RootData&, const RootData&) = default;
};

// Homomorphism Z^2 -> P2(T^2 \ {1}) given by the images of the two
// generators; a root-free lift certificate.
struct PuncturedHom {
  PuncturedElement image_e1;
  PuncturedElement image_e2;
};

struct DeformVerdict {
  enum class Kind { yes, no, unknown };
  Kind kind = Kind::unknown;
  long long nielsen_number = 0;            // set when kind == no
  std::optional<PuncturedHom> certificate;  // set when kind == yes
};

// |det[[a-1,c],[b,d-1]]| + |det[[rm+a-1,sm+c],[rn+b,sn+d-1]]|, (m,n)=Ab(w).
long long nielsen(const SplitMapClass& c);

// Whether both branch maps can be deformed to fixed point free maps:
// (a) the vectors (a-1,b), (c,d-1), Ab(w) are pairwise collinear, or
// (b) s(a-1,b) = r(c,d-1).
bool individually_deformable(const SplitMapClass& c);

RootData fixed_to_root(const SplitMapClass& c);
SplitMapClass root_to_fixed(const RootData& rd);

// Root-free lift when s(a1,b) = r(c,d1) and (r,s) != (0,0): both images are
// powers of one element z projecting to (w^l, gamma), l = gcd(|r|,|s|).
PuncturedHom lift_proportional(const RootData& rd);

// Root-free lift for classes supported on a cyclic subgroup generated by
// (p,q) with p in {0,1} or q in {0,1}:
// image_ei = (u^p v^q)^{l3*{r,s}} (x^p y^q)^{l1,l2}.
PuncturedHom lift_cyclic_special(long long p, long long q, long long l1,
                                 long long l2, long long l3, long long r,
                                 long long s);

// True iff the images commute and project under alpha onto the targets.
bool verify_lift(const PuncturedHom& hom, const P2Element& target_e1,
                 const P2Element& target_e2);

// Target P2 elements of a root data set, for verify_lift.
P2Element root_target_e1(const RootData& rd);
P2Element root_target_e2(const RootData& rd);

DeformVerdict can_deform_fixed_point_free(const SplitMapClass& c);

}  // namespace torus2
