#pragma once

#include <stdexcept>
#include <string>

namespace torus2 {

// Error categories; the CLI maps these to exit codes (parse -> 2, rest -> 1).
enum class errc {
  parse,     // malformed input text
  domain,    // precondition violated (non-commuting pair, cancellation, ...)
  resource,  // word-length limit exceeded
  overflow,  // integer overflow in exponents / lattice arithmetic
  internal   // invariant broken; indicates a bug
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

// Checked 64-bit arithmetic. All exponent and lattice computations go
// through these so overflow is an error, never wraparound.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in addition");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in subtraction");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace torus2
