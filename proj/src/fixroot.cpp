#include "torus2/fixroot.hpp"

#include <cstdlib>
#include <numeric>

namespace torus2 {

namespace {

long long cross(long long x1, long long y1, long long x2, long long y2) {
  return checked_sub(checked_mul(x1, y2), checked_mul(y1, x2));
}

long long exact_div(long long x, long long y) {
  if (y == 0 || x % y != 0) fail(errc::internal, "expected exact integer division");
  return x / y;
}

// Rank-2 {u,v} word as a rank-3 {u,v,B} word (shared generator indices).
FreeWord embed_f3(const FreeWord& w) {
  return FreeWord(3, w.letters());
}

FreeWord xy_word(long long e1, long long e2) {
  FreeWord x(2, {{kGenX, 1}});
  FreeWord y(2, {{kGenY, 1}});
  return multiply(power(x, e1), power(y, e2));
}

FreeWord uv_word(long long p, long long q) {
  FreeWord u(2, {{kGenU, 1}});
  FreeWord v(2, {{kGenV, 1}});
  return multiply(power(u, p), power(v, q));
}

bool admissible(long long p, long long q) {
  return p == 0 || p == 1 || q == 0 || q == 1;
}

}  // namespace

long long nielsen(const SplitMapClass& c) {
  AbVector ab = abelianize(c.w);
  long long d1 = cross(checked_sub(c.a, 1), c.b, c.c, checked_sub(c.d, 1));
  long long d2 = cross(checked_add(checked_mul(c.r, ab.m), checked_sub(c.a, 1)),
                       checked_add(checked_mul(c.r, ab.n), c.b),
                       checked_add(checked_mul(c.s, ab.m), c.c),
                       checked_add(checked_mul(c.s, ab.n), checked_sub(c.d, 1)));
  return checked_add(std::llabs(d1), std::llabs(d2));
}

bool individually_deformable(const SplitMapClass& c) {
  AbVector ab = abelianize(c.w);
  long long a1 = checked_sub(c.a, 1), d1 = checked_sub(c.d, 1);
  bool cyclic = cross(a1, c.b, c.c, d1) == 0 && cross(a1, c.b, ab.m, ab.n) == 0 &&
                cross(c.c, d1, ab.m, ab.n) == 0;
  bool proportional = checked_mul(c.s, a1) == checked_mul(c.r, c.c) &&
                      checked_mul(c.s, c.b) == checked_mul(c.r, d1);
  return cyclic || proportional;
}

RootData fixed_to_root(const SplitMapClass& c) {
  return RootData{c.w, c.r, c.s, checked_sub(c.a, 1), c.b, c.c, checked_sub(c.d, 1)};
}

SplitMapClass root_to_fixed(const RootData& rd) {
  return SplitMapClass{rd.w,       rd.r, rd.s, checked_add(rd.a1, 1),
                       rd.b,       rd.c, checked_add(rd.d1, 1)};
}

P2Element root_target_e1(const RootData& rd) {
  return P2Element{power(rd.w, rd.r), {rd.a1, rd.b}};
}

P2Element root_target_e2(const RootData& rd) {
  return P2Element{power(rd.w, rd.s), {rd.c, rd.d1}};
}

bool verify_lift(const PuncturedHom& hom, const P2Element& target_e1,
                 const P2Element& target_e2) {
  if (!(pp_mul(hom.image_e1, hom.image_e2) == pp_mul(hom.image_e2, hom.image_e1)))
    return false;
  return alpha(hom.image_e1) == target_e1 && alpha(hom.image_e2) == target_e2;
}

PuncturedHom lift_proportional(const RootData& rd) {
  if (rd.r == 0 && rd.s == 0)
    fail(errc::domain, "root-free lift requires (r,s) != (0,0)");
  if (checked_mul(rd.s, rd.a1) != checked_mul(rd.r, rd.c) ||
      checked_mul(rd.s, rd.b) != checked_mul(rd.r, rd.d1))
    fail(errc::domain, "proportionality condition s(a,b) = r(c,d) violated");
  PuncturedHom hom;
  if (rd.r == 0) {
    hom.image_e2 = PuncturedElement{embed_f3(power(rd.w, rd.s)), xy_word(rd.c, rd.d1)};
  } else if (rd.s == 0) {
    hom.image_e1 = PuncturedElement{embed_f3(power(rd.w, rd.r)), xy_word(rd.a1, rd.b)};
  } else {
    long long l = std::gcd(rd.r, rd.s);
    long long rp = rd.r / l, sp = rd.s / l;
    // gcd(r', s') = 1 and s(a,b) = r(c,d) force r' | (a,b) componentwise.
    long long g1 = exact_div(rd.a1, rp), g2 = exact_div(rd.b, rp);
    PuncturedElement z{embed_f3(power(rd.w, l)), xy_word(g1, g2)};
    hom.image_e1 = pp_pow(z, rp);
    hom.image_e2 = pp_pow(z, sp);
  }
  if (!verify_lift(hom, root_target_e1(rd), root_target_e2(rd)))
    fail(errc::internal, "proportional lift failed its own certificate check");
  return hom;
}

PuncturedHom lift_cyclic_special(long long p, long long q, long long l1,
                                 long long l2, long long l3, long long r,
                                 long long s) {
  if (!admissible(p, q))
    fail(errc::domain, "generator (p,q) must have p in {0,1} or q in {0,1}");
  FreeWord upq = embed_f3(uv_word(p, q));
  FreeWord xpyq = multiply(power(FreeWord(2, {{kGenX, 1}}), p),
                           power(FreeWord(2, {{kGenY, 1}}), q));
  PuncturedHom hom{
      PuncturedElement{power(upq, checked_mul(l3, r)), power(xpyq, l1)},
      PuncturedElement{power(upq, checked_mul(l3, s)), power(xpyq, l2)}};
  P2Element t1{power(uv_word(p, q), checked_mul(l3, r)),
               {checked_mul(l1, p), checked_mul(l1, q)}};
  P2Element t2{power(uv_word(p, q), checked_mul(l3, s)),
               {checked_mul(l2, p), checked_mul(l2, q)}};
  if (!verify_lift(hom, t1, t2))
    fail(errc::internal, "cyclic lift failed its own certificate check");
  return hom;
}

DeformVerdict can_deform_fixed_point_free(const SplitMapClass& c) {
  long long n = nielsen(c);
  if (n > 0) return DeformVerdict{DeformVerdict::Kind::no, n, std::nullopt};

  long long a1 = checked_sub(c.a, 1), d1 = checked_sub(c.d, 1);
  AbVector ab = abelianize(c.w);
  bool proportional = checked_mul(c.s, a1) == checked_mul(c.r, c.c) &&
                      checked_mul(c.s, c.b) == checked_mul(c.r, d1);
  if (proportional && (c.r != 0 || c.s != 0)) {
    PuncturedHom hom = lift_proportional(fixed_to_root(c));
    return DeformVerdict{DeformVerdict::Kind::yes, 0, hom};
  }

  bool cyclic = cross(a1, c.b, c.c, d1) == 0 && cross(a1, c.b, ab.m, ab.n) == 0 &&
                cross(c.c, d1, ab.m, ab.n) == 0;
  if (cyclic) {
    // Primitive direction (p,q) of the common cyclic subgroup.
    long long p = 0, q = 0;
    for (auto [vx, vy] : {std::pair{a1, c.b}, {c.c, d1}, {ab.m, ab.n}}) {
      if (vx != 0 || vy != 0) {
        long long g = std::gcd(vx, vy);
        p = vx / g;
        q = vy / g;
        break;
      }
    }
    if (admissible(p, q) || admissible(-p, -q)) {
      if (!admissible(p, q)) {
        p = -p;
        q = -q;
      }
      auto coeff = [&](long long vx, long long vy) {
        return p != 0 ? exact_div(vx, p) : (q != 0 ? exact_div(vy, q) : 0);
      };
      long long lam1 = coeff(a1, c.b), lam2 = coeff(c.c, d1), lam3 = coeff(ab.m, ab.n);
      FreeWord wc = power(uv_word(p, q), lam3);
      SplitMapClass tc = canonical_pair(P2Element{power(wc, c.r), {c.a, c.b}},
                                        P2Element{power(wc, c.s), {c.c, c.d}});
      if (unordered_equal(c, tc)) {
        PuncturedHom hom = lift_cyclic_special(p, q, lam1, lam2, lam3, c.r, c.s);
        if (!verify_lift(hom, P2Element{power(wc, c.r), {a1, c.b}},
                         P2Element{power(wc, c.s), {c.c, d1}}))
          fail(errc::internal, "cyclic certificate failed against its target class");
        return DeformVerdict{DeformVerdict::Kind::yes, 0, hom};
      }
    }
  }
  return DeformVerdict{DeformVerdict::Kind::unknown, 0, std::nullopt};
}

}  // namespace torus2
