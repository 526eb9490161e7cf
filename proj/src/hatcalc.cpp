#include "torus2/hatcalc.hpp"

#include <vector>

namespace torus2 {

namespace {

// True if concatenating a and b causes no free cancellation.
bool concat_reduced(const FreeWord& a, const FreeWord& b) {
  if (a.is_identity() || b.is_identity()) return true;
  return !a[a.length() - 1].cancels(b[0]);
}

bool starts_with(const FreeWord& w, const FreeWord& prefix) {
  if (prefix.length() > w.length()) return false;
  for (std::size_t i = 0; i < prefix.length(); ++i)
    if (!(w[i] == prefix[i])) return false;
  return true;
}

bool ends_with(const FreeWord& w, const FreeWord& suffix) {
  if (suffix.length() > w.length()) return false;
  std::size_t off = w.length() - suffix.length();
  for (std::size_t i = 0; i < suffix.length(); ++i)
    if (!(w[off + i] == suffix[i])) return false;
  return true;
}

// Exponent t with z^t == mu, where z is primitive.
std::optional<long long> power_of(const FreeWord& z, const FreeWord& mu) {
  if (mu.is_identity()) return 0;
  auto pr = primitive_root(mu);
  if (pr.root == z) return pr.exponent;
  if (pr.root == z.inverse()) return -pr.exponent;
  return std::nullopt;
}

std::optional<E1Witness> solve_e1_rec(const FreeWord& a, const FreeWord& b, int depth);

}  // namespace

std::optional<FreeWord> solve_lambda_pair(const FreeWord& g) {
  const std::size_t n = g.length();
  if (n == 0) return FreeWord(g.rank());
  if (n % 2 != 0) return std::nullopt;
  // No-cancellation shape: g = lambda hat(lambda) with the halves intact.
  FreeWord half = g.subword(0, n / 2);
  if (hat(half) == g.subword(n / 2, n)) return half;
  // Cancellation shape: g = x (mu hat(mu)) x^-1, lambda = x mu x.
  if (g[0] == g[n - 1].inverse()) {
    if (auto mu = solve_lambda_pair(g.subword(1, n - 1))) {
      std::vector<Letter> raw;
      raw.push_back(g[0]);
      raw.insert(raw.end(), mu->letters().begin(), mu->letters().end());
      raw.push_back(g[0]);
      FreeWord lambda(g.rank(), raw);
      if (multiply(lambda, hat(lambda)) == g) return lambda;
    }
  }
  return std::nullopt;
}

std::optional<E2Witness> is_hat_conjugate(const FreeWord& w) {
  if (w.rank() != 2) fail(errc::domain, "hat-conjugacy is defined on rank-2 words");
  if (w.is_identity()) return E2Witness{FreeWord(2), 0};
  if (!(abelianize(w) == AbVector{0, 0})) return std::nullopt;
  if (!are_conjugate(w, hat(w))) return std::nullopt;
  auto [z, k] = primitive_root(w);
  // lambda*hat(lambda) commutes with w, so it is z^j; try small |j| first,
  // which keeps lambda*hat(lambda) primitive whenever possible.
  for (long long j = 1; j <= k; ++j) {
    if (k % j != 0) continue;
    for (long long sj : {j, -j}) {
      if (auto lambda = solve_lambda_pair(power(z, sj))) {
        long long l = k / sj;
        if (power(multiply(*lambda, hat(*lambda)), l) == w) return E2Witness{*lambda, l};
        fail(errc::internal, "hat decomposition failed recomposition");
      }
    }
  }
  fail(errc::internal, "w conjugate to hat(w) but no (lambda, l) decomposition found");
}

namespace {

std::optional<E1Witness> solve_e1_rec(const FreeWord& a, const FreeWord& b, int depth) {
  if (depth < 0) fail(errc::internal, "E1 recursion exceeded its length bound");
  if (a.is_identity() && b.is_identity()) return E1Witness{FreeWord(2), 0, 0};
  if (a.is_identity() || b.is_identity())
    fail(errc::internal, "E1 recursion reached a one-sided trivial state");
  if (a.length() == b.length()) {
    if (!(b == hat(a))) fail(errc::internal, "equal-length E1 case without b = hat(a)");
    return E1Witness{b, 0, 0};
  }
  if (a.length() > b.length()) {
    // Apply hat to both sides: (hat(b), hat(a)) satisfies the same equation
    // with the roles of the exponents swapped.
    auto sub = solve_e1_rec(hat(b), hat(a), depth - 1);
    if (!sub) return std::nullopt;
    return E1Witness{sub->lambda, sub->s, sub->r};
  }
  FreeWord ahat = hat(a);
  if (2 * a.length() <= b.length()) {
    // b = hat(a) b1 hat(a); the inner equation is hat(a) b1 = hat(b1) a.
    if (!starts_with(b, ahat) || !ends_with(b, ahat))
      fail(errc::internal, "E1 case A: b does not start and end with hat(a)");
    FreeWord b1 = b.subword(a.length(), b.length() - a.length());
    auto sub = solve_e1_rec(ahat, b1, depth - 1);
    if (!sub) return std::nullopt;
    return E1Witness{hat(sub->lambda), 2 * sub->s + sub->r + 1, sub->s};
  }
  // b = hat(a) b1 with b1 != 1; then hat(a) b1 hat(a)^-1 = hat(b1), an E2
  // instance, and hat(lambda)^-1 hat(a) lies in the centraliser of
  // lambda*hat(lambda).
  if (!starts_with(b, ahat)) fail(errc::internal, "E1 case B: b does not start with hat(a)");
  FreeWord b1 = b.subword(a.length(), b.length());
  auto e2 = is_hat_conjugate(b1);
  if (!e2) return std::nullopt;
  FreeWord z = multiply(e2->lambda, hat(e2->lambda));
  if (primitive_root(z).exponent != 1)
    fail(errc::internal, "E1 case B: lambda*hat(lambda) is not primitive");
  FreeWord mu = multiply(hat(e2->lambda).inverse(), ahat);
  auto t = power_of(z, mu);
  if (!t) fail(errc::internal, "E1 case B: residual is not a power of lambda*hat(lambda)");
  return E1Witness{hat(e2->lambda), *t + e2->l, *t};
}

}  // namespace

std::optional<E1Witness> solve_E1(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != 2 || b.rank() != 2) fail(errc::domain, "E1 is defined on rank-2 words");
  if (!concat_reduced(a, b))
    fail(errc::domain, "E1 requires the concatenation a*b to be reduced as written");
  if (!(multiply(a, b) == multiply(hat(b), hat(a)))) return std::nullopt;
  int depth = static_cast<int>(a.length() + b.length()) + 4;
  auto wit = solve_e1_rec(a, b, depth);
  if (!wit) return std::nullopt;
  FreeWord zl = multiply(wit->lambda, hat(wit->lambda));
  FreeWord zr = multiply(hat(wit->lambda), wit->lambda);
  if (!(multiply(power(zr, wit->s), hat(wit->lambda)) == a) ||
      !(multiply(power(zl, wit->r), wit->lambda) == b))
    fail(errc::internal, "E1 witness failed recomposition");
  return wit;
}

}  // namespace torus2
