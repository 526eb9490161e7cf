#include "torus2/freeword.hpp"

#include <atomic>
#include <numeric>

namespace torus2 {

namespace {
std::atomic<std::size_t> g_max_word_length{100000};

void check_length(std::size_t n) {
  if (n > g_max_word_length.load()) fail(errc::resource, "word length limit exceeded");
}
}  // namespace

std::size_t max_word_length() { return g_max_word_length.load(); }
void set_max_word_length(std::size_t n) { g_max_word_length.store(n); }

FreeWord::FreeWord(int rank, const std::vector<Letter>& raw) : rank_(rank) {
  letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.gen < 0 || l.gen >= rank) fail(errc::domain, "letter index out of range for alphabet");
    if (l.sign != 1 && l.sign != -1) fail(errc::domain, "letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  check_length(letters_.size());
}

FreeWord reduce(int rank, const std::vector<Letter>& raw) { return FreeWord(rank, raw); }

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  FreeWord w(rank_);
  w.letters_ = std::move(out);  // reversal of a reduced word is reduced
  return w;
}

FreeWord FreeWord::subword(std::size_t begin, std::size_t end) const {
  FreeWord w(rank_);
  w.letters_.assign(letters_.begin() + begin, letters_.begin() + end);
  return w;
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) fail(errc::domain, "rank mismatch in word multiplication");
  std::vector<Letter> raw = a.letters();
  raw.insert(raw.end(), b.letters().begin(), b.letters().end());
  return FreeWord(a.rank(), raw);
}

FreeWord power(const FreeWord& w, long long e) {
  FreeWord base = e < 0 ? w.inverse() : w;
  long long n = e < 0 ? -e : e;
  FreeWord acc(w.rank());
  for (long long i = 0; i < n; ++i) acc = multiply(acc, base);
  return acc;
}

FreeWord conjugate(const FreeWord& g, const FreeWord& w) {
  return multiply(multiply(g, w), g.inverse());
}

FreeWord hat(const FreeWord& w) {
  if (w.rank() != 2) fail(errc::domain, "hat involution is defined on rank-2 words");
  std::vector<Letter> raw;
  raw.reserve(w.length());
  for (const Letter& l : w.letters()) raw.push_back({l.gen, -l.sign});
  return FreeWord(2, raw);
}

AbVector abelianize(const FreeWord& w) {
  if (w.rank() != 2) fail(errc::domain, "abelianization is defined on rank-2 words");
  AbVector ab;
  for (const Letter& l : w.letters()) {
    if (l.gen == 0)
      ab.m = checked_add(ab.m, l.sign);
    else
      ab.n = checked_add(ab.n, l.sign);
  }
  return ab;
}

CyclicDecomposition cyclic_reduce(const FreeWord& w) {
  std::size_t lo = 0, hi = w.length();
  while (hi - lo >= 2 && w[lo].cancels(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return {w.subword(0, lo), w.subword(lo, hi)};
}

namespace {
bool rotation_equal(const FreeWord& a, const FreeWord& b, std::size_t k) {
  const std::size_t n = a.length();
  for (std::size_t i = 0; i < n; ++i)
    if (!(a[(i + k) % n] == b[i])) return false;
  return true;
}
}  // namespace

std::optional<FreeWord> are_conjugate(const FreeWord& a, const FreeWord& b) {
  if (a.rank() != b.rank()) fail(errc::domain, "rank mismatch in conjugacy test");
  auto da = cyclic_reduce(a);
  auto db = cyclic_reduce(b);
  if (da.core.length() != db.core.length()) return std::nullopt;
  if (da.core.is_identity()) return FreeWord(a.rank());
  for (std::size_t k = 0; k < da.core.length(); ++k) {
    if (rotation_equal(da.core, db.core, k)) {
      // rot_k(core_a) = core_b with core_b = alpha^-1 core_a alpha,
      // alpha the length-k prefix of core_a; so g = p_b alpha^-1 p_a^-1.
      FreeWord alpha = da.core.subword(0, k);
      FreeWord g = multiply(multiply(db.prefix, alpha.inverse()), da.prefix.inverse());
      if (!(conjugate(g, a) == b)) fail(errc::internal, "conjugacy witness failed recomposition");
      return g;
    }
  }
  return std::nullopt;
}

PrimitiveRoot primitive_root(const FreeWord& w) {
  if (w.is_identity()) fail(errc::domain, "identity word has no primitive root");
  auto [prefix, core] = cyclic_reduce(w);
  const std::size_t n = core.length();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      if (!(core[i] == core[i - d])) periodic = false;
    if (periodic) {
      FreeWord root = conjugate(prefix, core.subword(0, d));
      return {root, static_cast<long long>(n / d)};
    }
  }
  fail(errc::internal, "period detection fell through");
}

bool commute(const FreeWord& a, const FreeWord& b) {
  return multiply(a, b) == multiply(b, a);
}

}  // namespace torus2
