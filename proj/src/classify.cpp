#include "torus2/classify.hpp"

namespace torus2 {

namespace {

// Prefer the representative of {w, w^-1} whose first letter is positive;
// when both or neither start positive, take the lexicographically smaller.
bool prefer_inverse(const FreeWord& w) {
  if (w.is_identity()) return false;
  FreeWord wi = w.inverse();
  bool pos = w[0].sign > 0, pos_i = wi[0].sign > 0;
  if (pos != pos_i) return pos_i;
  return wi < w;
}

void canonicalize_sign(SplitMapClass& c) {
  if (prefer_inverse(c.w)) {
    c.w = c.w.inverse();
    c.r = checked_sub(0, c.r);
    c.s = checked_sub(0, c.s);
  }
}

// Exponent e with z^e == g, where z is primitive and g is a power of z.
long long exponent_on(const FreeWord& z, const FreeWord& g) {
  if (g.is_identity()) return 0;
  auto pr = primitive_root(g);
  if (pr.root == z) return pr.exponent;
  if (pr.root == z.inverse()) return checked_sub(0, pr.exponent);
  fail(errc::internal, "commuting free parts with distinct primitive roots");
}

}  // namespace

SplitMapClass canonical_pair(const P2Element& alpha, const P2Element& beta) {
  if (!commute(alpha.free_part, beta.free_part))
    fail(errc::domain, "pair does not commute");
  SplitMapClass c;
  c.a = alpha.lattice_part[0];
  c.b = alpha.lattice_part[1];
  c.c = beta.lattice_part[0];
  c.d = beta.lattice_part[1];
  if (alpha.free_part.is_identity() && beta.free_part.is_identity()) return c;
  const FreeWord& base =
      alpha.free_part.is_identity() ? beta.free_part : alpha.free_part;
  c.w = primitive_root(base).root;
  c.r = exponent_on(c.w, alpha.free_part);
  c.s = exponent_on(c.w, beta.free_part);
  canonicalize_sign(c);
  return c;
}

bool free_equal(const SplitMapClass& c1, const SplitMapClass& c2) {
  if (c1.a != c2.a || c1.b != c2.b || c1.c != c2.c || c1.d != c2.d) return false;
  if (c1.w.is_identity() || c2.w.is_identity())
    return c1.w.is_identity() && c2.w.is_identity();
  for (int eps : {1, -1}) {
    FreeWord w2 = eps == 1 ? c2.w : c2.w.inverse();
    if (c1.r == eps * c2.r && c1.s == eps * c2.s && are_conjugate(c1.w, w2))
      return true;
  }
  return false;
}

SplitMapClass swap_class(const SplitMapClass& c) {
  AbVector ab = abelianize(c.w);
  FreeWord wh = hat(c.w);
  P2Element alpha{power(wh, c.r),
                  {checked_add(c.a, checked_mul(c.r, ab.m)),
                   checked_add(c.b, checked_mul(c.r, ab.n))}};
  P2Element beta{power(wh, c.s),
                 {checked_add(c.c, checked_mul(c.s, ab.m)),
                  checked_add(c.d, checked_mul(c.s, ab.n))}};
  return canonical_pair(alpha, beta);
}

bool unordered_equal(const SplitMapClass& c1, const SplitMapClass& c2) {
  return free_equal(c1, c2) || free_equal(c1, swap_class(c2));
}

}  // namespace torus2
