#include "torus2/braid.hpp"

namespace torus2 {

namespace {

// Word builder: entries are 1-based generator indices, negative = inverse.
FreeWord fw(int rank, std::initializer_list<int> gens) {
  std::vector<Letter> raw;
  for (int g : gens) {
    int idx = (g > 0 ? g : -g) - 1;
    raw.push_back({idx, g > 0 ? 1 : -1});
  }
  return FreeWord(rank, raw);
}

FreeWord comm(const FreeWord& a, const FreeWord& b) {
  return multiply(multiply(a, b), multiply(a.inverse(), b.inverse()));
}

const int U = 1, V = 2, Bg = 3;  // F3(u,v,B)

FreeWord b12_word() {
  // B12 = B^-1 [u, v^-1]
  return multiply(fw(3, {-Bg}), comm(fw(3, {U}), fw(3, {-V})));
}

struct ActionTable {
  // images[gen] for gen in {u,v,B}
  std::array<FreeWord, 3> x_img{FreeWord(3), FreeWord(3), FreeWord(3)};
  std::array<FreeWord, 3> y_img{FreeWord(3), FreeWord(3), FreeWord(3)};
  std::array<FreeWord, 3> xinv_img{FreeWord(3), FreeWord(3), FreeWord(3)};
  std::array<FreeWord, 3> yinv_img{FreeWord(3), FreeWord(3), FreeWord(3)};
};

FreeWord apply_images(const std::array<FreeWord, 3>& img, const FreeWord& k) {
  FreeWord out(3);
  for (const Letter& l : k.letters()) {
    const FreeWord& w = img[l.gen];
    out = multiply(out, l.sign > 0 ? w : w.inverse());
  }
  return out;
}

const ActionTable& action_table() {
  static const ActionTable table = [] {
    ActionTable t;
    FreeWord u = fw(3, {U}), v = fw(3, {V}), B = fw(3, {Bg});
    FreeWord cvu = comm(fw(3, {-V}), u);   // [v^-1, u]
    FreeWord cuv = comm(u, fw(3, {-V}));   // [u, v^-1]
    FreeWord b12 = b12_word();

    t.x_img[0] = u;
    t.x_img[1] = multiply(multiply(v, cvu), multiply(B.inverse(), cuv));
    t.x_img[2] = multiply(multiply(u, cvu), multiply(B, multiply(cuv, u.inverse())));

    t.y_img[0] = multiply(multiply(v, cvu), multiply(B, multiply(u, v.inverse())));
    t.y_img[1] = v;
    t.y_img[2] = multiply(multiply(u, v), multiply(u.inverse(), multiply(B, multiply(u, multiply(v.inverse(), u.inverse())))));

    // Inverse actions: the u,v images come from eq. (5.2); the B images
    // follow from B = [u,v^-1] B12^-1 together with the invariance of B12.
    t.xinv_img[0] = u;
    t.xinv_img[1] = multiply(multiply(u.inverse(), v), multiply(b12.inverse(), u));
    t.yinv_img[0] = multiply(b12, multiply(v.inverse(), multiply(u, v)));
    t.yinv_img[1] = v;
    auto derive_b = [&](const std::array<FreeWord, 3>& img) {
      return multiply(comm(img[0], img[1].inverse()), b12.inverse());
    };
    t.xinv_img[2] = derive_b(t.xinv_img);
    t.yinv_img[2] = derive_b(t.yinv_img);
    return t;
  }();
  return table;
}

}  // namespace

P2Element p2_identity() { return P2Element{}; }

P2Element p2_mul(const P2Element& g, const P2Element& h) {
  return P2Element{multiply(g.free_part, h.free_part),
                   {checked_add(g.lattice_part[0], h.lattice_part[0]),
                    checked_add(g.lattice_part[1], h.lattice_part[1])}};
}

P2Element p2_inverse(const P2Element& g) {
  return P2Element{g.free_part.inverse(),
                   {checked_sub(0, g.lattice_part[0]), checked_sub(0, g.lattice_part[1])}};
}

P2Element sigma_conj(const P2Element& g) {
  FreeWord uvinv = fw(2, {1, -2});  // u v^-1
  FreeWord w = multiply(multiply(uvinv, hat(g.free_part)), uvinv.inverse());
  AbVector ab = abelianize(g.free_part);
  return P2Element{w,
                   {checked_add(g.lattice_part[0], ab.m), checked_add(g.lattice_part[1], ab.n)}};
}

P2Element sigma_squared() {
  return P2Element{comm(fw(2, {1}), fw(2, {-2})), {0, 0}};
}

B2Element b2_identity() { return B2Element{}; }
B2Element b2_sigma() { return B2Element{p2_identity(), 1}; }

B2Element b2_mul(const B2Element& g, const B2Element& h) {
  // (g1 s^e1)(g2 s^e2) = g1 (s^e1 g2 s^-e1) s^(e1+e2), with s^2 a P2 element.
  P2Element moved = g.epsilon == 1 ? sigma_conj(h.coset_rep) : h.coset_rep;
  P2Element rep = p2_mul(g.coset_rep, moved);
  int e = g.epsilon + h.epsilon;
  if (e == 2) rep = p2_mul(rep, sigma_squared());
  return B2Element{rep, e % 2};
}

B2Element b2_inverse(const B2Element& g) {
  if (g.epsilon == 0) return B2Element{p2_inverse(g.coset_rep), 0};
  // (g s)^-1 = s^-2 * s g^-1 s^-1 * s
  return B2Element{p2_mul(p2_inverse(sigma_squared()), sigma_conj(p2_inverse(g.coset_rep))), 1};
}

PuncturedElement pp_identity() { return PuncturedElement{}; }

FreeWord pp_act(const FreeWord& t, const FreeWord& k) {
  if (t.rank() != 2) fail(errc::domain, "action words live in F2(x,y)");
  if (k.rank() != 3) fail(errc::domain, "acted-on words live in F3(u,v,B)");
  const ActionTable& tab = action_table();
  FreeWord out = k;
  for (auto it = t.letters().rbegin(); it != t.letters().rend(); ++it) {
    const auto& img = it->gen == kGenX ? (it->sign > 0 ? tab.x_img : tab.xinv_img)
                                       : (it->sign > 0 ? tab.y_img : tab.yinv_img);
    out = apply_images(img, out);
  }
  return out;
}

PuncturedElement pp_mul(const PuncturedElement& g, const PuncturedElement& h) {
  return PuncturedElement{multiply(g.kernel_part, pp_act(g.quotient_part, h.kernel_part)),
                          multiply(g.quotient_part, h.quotient_part)};
}

PuncturedElement pp_inverse(const PuncturedElement& g) {
  FreeWord tinv = g.quotient_part.inverse();
  return PuncturedElement{pp_act(tinv, g.kernel_part.inverse()), tinv};
}

PuncturedElement pp_pow(const PuncturedElement& g, long long e) {
  PuncturedElement base = e < 0 ? pp_inverse(g) : g;
  long long n = e < 0 ? -e : e;
  PuncturedElement acc = pp_identity();
  for (long long i = 0; i < n; ++i) acc = pp_mul(acc, base);
  return acc;
}

P2Element alpha(const PuncturedElement& g) {
  std::vector<Letter> raw;
  for (const Letter& l : g.kernel_part.letters())
    if (l.gen != 2) raw.push_back(l);
  AbVector ab{0, 0};
  for (const Letter& l : g.quotient_part.letters()) {
    if (l.gen == kGenX)
      ab.m = checked_add(ab.m, l.sign);
    else
      ab.n = checked_add(ab.n, l.sign);
  }
  return P2Element{FreeWord(2, raw), {ab.m, ab.n}};
}

namespace {

PuncturedElement pe_k(const FreeWord& k) { return PuncturedElement{k, FreeWord(2)}; }
PuncturedElement pe_t(const FreeWord& t) { return PuncturedElement{FreeWord(3), t}; }

PuncturedElement pp_conj(const PuncturedElement& g, const PuncturedElement& h) {
  return pp_mul(pp_mul(g, h), pp_inverse(g));
}

P2Element p2_conj(const P2Element& g, const P2Element& h) {
  return p2_mul(p2_mul(g, h), p2_inverse(g));
}

B2Element b2_conj(const B2Element& g, const B2Element& h) {
  return b2_mul(b2_mul(g, h), b2_inverse(g));
}

}  // namespace

std::vector<RelationResult> check_relations() {
  std::vector<RelationResult> out;
  auto add = [&](const std::string& name, bool pass) { out.push_back({name, pass}); };

  FreeWord u3 = fw(3, {U}), v3 = fw(3, {V}), B3 = fw(3, {Bg});
  FreeWord cvu = comm(fw(3, {-V}), u3), cuv = comm(u3, fw(3, {-V}));
  FreeWord b12 = b12_word();
  PuncturedElement pU = pe_k(u3), pV = pe_k(v3), pB = pe_k(B3), pB12 = pe_k(b12);
  PuncturedElement pX = pe_t(fw(2, {1})), pY = pe_t(fw(2, {2}));

  // Semidirect presentation of P2(T^2 \ {1}), relations (a)-(f).
  add("punctured (a): x u x^-1 = u", pp_conj(pX, pU) == pU);
  add("punctured (b): x v x^-1 = v[v^-1,u]B^-1[u,v^-1]",
      pp_conj(pX, pV) == pe_k(multiply(multiply(v3, cvu), multiply(B3.inverse(), cuv))));
  add("punctured (c): x B x^-1 = u[v^-1,u]B[u,v^-1]u^-1",
      pp_conj(pX, pB) == pe_k(multiply(multiply(u3, cvu), multiply(B3, multiply(cuv, u3.inverse())))));
  add("punctured (d): y u y^-1 = v[v^-1,u]Buv^-1",
      pp_conj(pY, pU) == pe_k(multiply(multiply(v3, cvu), multiply(B3, multiply(u3, v3.inverse())))));
  add("punctured (e): y v y^-1 = v", pp_conj(pY, pV) == pV);
  FreeWord ybyi_1 = multiply(multiply(v3, cvu), multiply(B3, multiply(cuv, v3.inverse())));
  FreeWord ybyi_2 = multiply(multiply(u3, v3),
                             multiply(u3.inverse(), multiply(B3, multiply(u3, multiply(v3.inverse(), u3.inverse())))));
  add("punctured (f): y B y^-1 = v[v^-1,u]B[u,v^-1]v^-1", pp_conj(pY, pB) == pe_k(ybyi_1));
  add("punctured (f'): y B y^-1 = uvu^-1Buv^-1u^-1", pp_conj(pY, pB) == pe_k(ybyi_2));
  add("F3 identity: v[v^-1,u]B[u,v^-1]v^-1 = uvu^-1Buv^-1u^-1", ybyi_1 == ybyi_2);

  // Derived conjugation identities, eq. (5.2) and B12 invariance.
  add("derived: y u y^-1 = vB12^-1uv^-1",
      pp_conj(pY, pU) == pe_k(multiply(v3, multiply(b12.inverse(), multiply(u3, v3.inverse())))));
  add("derived: x v x^-1 = uvu^-1B12",
      pp_conj(pX, pV) == pe_k(multiply(u3, multiply(v3, multiply(u3.inverse(), b12)))));
  add("derived: y^-1 u y = B12v^-1uv",
      pp_conj(pp_inverse(pY), pU) == pe_k(multiply(b12, multiply(v3.inverse(), multiply(u3, v3)))));
  add("derived: x^-1 v x = u^-1vB12^-1u",
      pp_conj(pp_inverse(pX), pV) == pe_k(multiply(u3.inverse(), multiply(v3, multiply(b12.inverse(), u3)))));
  add("derived: x B12 x^-1 = B12", pp_conj(pX, pB12) == pB12);
  add("derived: y B12 y^-1 = B12", pp_conj(pY, pB12) == pB12);

  // P2(T^2) presentation (A)-(C).
  P2Element qU{fw(2, {1}), {0, 0}}, qV{fw(2, {2}), {0, 0}};
  P2Element qX{FreeWord(2), {1, 0}}, qY{FreeWord(2), {0, 1}};
  add("P2 (A): x u x^-1 = u", p2_conj(qX, qU) == qU);
  add("P2 (A): y u y^-1 = u", p2_conj(qY, qU) == qU);
  add("P2 (B): x v x^-1 = v", p2_conj(qX, qV) == qV);
  add("P2 (B): y v y^-1 = v", p2_conj(qY, qV) == qV);
  add("P2 (C): x y x^-1 = y", p2_conj(qX, qY) == qY);

  // B2(T^2) presentation (a)-(f).
  auto lift = [](const P2Element& g) { return B2Element{g, 0}; };
  B2Element s = b2_sigma();
  add("B2 (a): x u x^-1 = u", b2_conj(lift(qX), lift(qU)) == lift(qU));
  add("B2 (a): y u y^-1 = u", b2_conj(lift(qY), lift(qU)) == lift(qU));
  add("B2 (b): x v x^-1 = v", b2_conj(lift(qX), lift(qV)) == lift(qV));
  add("B2 (b): y v y^-1 = v", b2_conj(lift(qY), lift(qV)) == lift(qV));
  add("B2 (c): x y x^-1 = y", b2_conj(lift(qX), lift(qY)) == lift(qY));
  add("B2 (d): sigma^2 = [u,v^-1]", b2_mul(s, s) == lift(sigma_squared()));
  add("B2 (e): sigma x sigma^-1 = x", b2_conj(s, lift(qX)) == lift(qX));
  add("B2 (e): sigma y sigma^-1 = y", b2_conj(s, lift(qY)) == lift(qY));
  P2Element fu{multiply(comm(fw(2, {1}), fw(2, {-2})), fw(2, {-1})), {1, 0}};
  P2Element fv{multiply(comm(fw(2, {1}), fw(2, {-2})), fw(2, {-2})), {0, 1}};
  add("B2 (f): sigma u sigma^-1 = [u,v^-1]u^-1x", b2_conj(s, lift(qU)) == lift(fu));
  add("B2 (f): sigma v sigma^-1 = [u,v^-1]v^-1y", b2_conj(s, lift(qV)) == lift(fv));

  // First presentation of P2(T^2 \ {1}) in the rho generators, via the
  // change of variables u=r11, v=r12, x=r11 B12^-1 r21, y=r12 B12^-1 r22.
  PuncturedElement r11 = pU, r12 = pV;
  PuncturedElement r21 = pp_mul(pB12, pp_mul(pp_inverse(pU), pX));
  PuncturedElement r22 = pp_mul(pB12, pp_mul(pp_inverse(pV), pY));
  auto pcomm = [](const PuncturedElement& a, const PuncturedElement& b) {
    return pp_mul(pp_mul(a, b), pp_mul(pp_inverse(a), pp_inverse(b)));
  };
  PuncturedElement Bp = pp_mul(pp_inverse(pB12), pcomm(r21, pp_inverse(r22)));

  add("rho (a): r21 r11 r21^-1 = B12 r11 B12^-1", pp_conj(r21, r11) == pp_conj(pB12, r11));
  add("rho (b): r21 r12 r21^-1 = B12 r12 r11^-1 B12 r11 B12^-1",
      pp_conj(r21, r12) ==
          pp_mul(pB12, pp_mul(r12, pp_mul(pp_inverse(r11),
                                          pp_mul(pB12, pp_mul(r11, pp_inverse(pB12)))))));
  add("rho (c): r22 r11 r22^-1 = r11 B12^-1",
      pp_conj(r22, r11) == pp_mul(r11, pp_inverse(pB12)));
  add("rho (d): r22 r12 r22^-1 = B12 r12 B12^-1", pp_conj(r22, r12) == pp_conj(pB12, r12));
  add("rho (e): r21 B r21^-1 = B", pp_conj(r21, pB) == pB);
  add("rho (e): r22 B r22^-1 = B", pp_conj(r22, pB) == pB);
  add("rho (f): r21 B12 r21^-1 = B12 r11^-1 B12 r11 B12^-1",
      pp_conj(r21, pB12) ==
          pp_mul(pB12, pp_mul(pp_inverse(r11), pp_mul(pB12, pp_mul(r11, pp_inverse(pB12))))));
  add("rho (f): r22 B12 r22^-1 = B12 r12^-1 B12 r12 B12^-1",
      pp_conj(r22, pB12) ==
          pp_mul(pB12, pp_mul(pp_inverse(r12), pp_mul(pB12, pp_mul(r12, pp_inverse(pB12))))));
  add("rho (g): B' r11 B'^-1 = r11", pp_conj(Bp, r11) == r11);
  add("rho (g): B' r12 B'^-1 = r12", pp_conj(Bp, r12) == r12);
  add("rho (h): B' B12 B'^-1 = B12^-1 B^-1 B12 B B12",
      pp_conj(Bp, pB12) ==
          pp_mul(pp_inverse(pB12),
                 pp_mul(pp_inverse(pB), pp_mul(pB12, pp_mul(pB, pB12)))));
  add("rho (h): B' B B'^-1 = B12^-1 B B12",
      pp_conj(Bp, pB) == pp_mul(pp_inverse(pB12), pp_mul(pB, pB12)));
  add("rho (i): [r11, r12^-1] = B B12",
      pcomm(r11, pp_inverse(r12)) == pp_mul(pB, pB12));
  add("rho (i): [r21, r22^-1] = B12 B'",
      pcomm(r21, pp_inverse(r22)) == pp_mul(pB12, Bp));

  // Derived relations from the remark following the first presentation.
  add("rho derived: r21^-1 r11 r21 = r11 B12^-1 r11 B12 r11^-1",
      pp_conj(pp_inverse(r21), r11) ==
          pp_mul(r11, pp_mul(pp_inverse(pB12), pp_mul(r11, pp_mul(pB12, pp_inverse(r11))))));
  add("rho derived: r21^-1 r12 r21 = r11 B12^-1 r11^-1 r12 B12^-1 r11 B12 r11^-1",
      pp_conj(pp_inverse(r21), r12) ==
          pp_mul(r11, pp_mul(pp_inverse(pB12),
                             pp_mul(pp_inverse(r11),
                                    pp_mul(r12, pp_mul(pp_inverse(pB12),
                                                       pp_mul(r11, pp_mul(pB12, pp_inverse(r11)))))))));
  add("rho derived: r22^-1 r11 r22 = r11 r12 B12 r12^-1",
      pp_conj(pp_inverse(r22), r11) ==
          pp_mul(r11, pp_mul(r12, pp_mul(pB12, pp_inverse(r12)))));
  add("rho derived: r22^-1 r12 r22 = r12 B12^-1 r12 B12 r12^-1",
      pp_conj(pp_inverse(r22), r12) ==
          pp_mul(r12, pp_mul(pp_inverse(pB12), pp_mul(r12, pp_mul(pB12, pp_inverse(r12))))));
  add("rho derived: r21^-1 B12 r21 = r11 B12 r11^-1",
      pp_conj(pp_inverse(r21), pB12) == pp_conj(r11, pB12));
  add("rho derived: r22^-1 B12 r22 = r12 B12 r12^-1",
      pp_conj(pp_inverse(r22), pB12) == pp_conj(r12, pB12));

  return out;
}

}  // namespace torus2
