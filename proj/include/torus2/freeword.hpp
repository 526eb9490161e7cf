#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "torus2/error.hpp"

namespace torus2 {

// One generator occurrence: generator index into the alphabet, sign +1 / -1.
struct Letter {
  int gen;
  int sign;

  Letter inverse() const { return {gen, -sign}; }
  bool cancels(const Letter& o) const { return gen == o.gen && sign == -o.sign; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Exponent sums (|w|_u, |w|_v).
struct AbVector {
  long long m = 0;
  long long n = 0;

  friend bool operator==(const AbVector&, const AbVector&) = default;
  AbVector operator+(const AbVector& o) const { return {checked_add(m, o.m), checked_add(n, o.n)}; }
  AbVector operator-() const { return {checked_sub(0, m), checked_sub(0, n)}; }
};

// Upper bound on reduced word length; exceeding it raises errc::resource.
std::size_t max_word_length();
void set_max_word_length(std::size_t n);

// A freely reduced word over an alphabet of `rank` generators.
class FreeWord {
 public:
  explicit FreeWord(int rank) : rank_(rank) {}
  // Reduces the raw letter sequence. Letter indices must be < rank.
  FreeWord(int rank, const std::vector<Letter>& raw);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  FreeWord inverse() const;
  // Contiguous subword [begin, end).
  FreeWord subword(std::size_t begin, std::size_t end) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_;
  std::vector<Letter> letters_;  // always freely reduced
};

FreeWord reduce(int rank, const std::vector<Letter>& raw);
FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord power(const FreeWord& w, long long e);
FreeWord conjugate(const FreeWord& g, const FreeWord& w);  // g w g^-1

// The involution u -> u^-1, v -> v^-1 (rank 2 only).
FreeWord hat(const FreeWord& w);
AbVector abelianize(const FreeWord& w);

// w = prefix * core * prefix^-1 with core cyclically reduced.
struct CyclicDecomposition {
  FreeWord prefix;
  FreeWord core;
};
CyclicDecomposition cyclic_reduce(const FreeWord& w);

// Some g with g a g^-1 = b, or nullopt if a and b are not conjugate.
std::optional<FreeWord> are_conjugate(const FreeWord& a, const FreeWord& b);

// w = root^exponent with root primitive (not a proper power). w != 1.
struct PrimitiveRoot {
  FreeWord root;
  long long exponent;
};
PrimitiveRoot primitive_root(const FreeWord& w);

bool commute(const FreeWord& a, const FreeWord& b);

}  // namespace torus2
