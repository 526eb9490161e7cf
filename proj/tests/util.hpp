#pragma once

#include <random>
#include <vector>

#include "torus2/classify.hpp"
#include "torus2/textio.hpp"

namespace testutil {

using namespace torus2;

inline FreeWord uv(const std::string& text) { return parse_word(text, Alphabet::uv); }
inline FreeWord uvB(const std::string& text) { return parse_word(text, Alphabet::uvB); }
inline FreeWord xy(const std::string& text) { return parse_word(text, Alphabet::xy); }

// Uniformly random reduced word of exactly len letters.
inline FreeWord random_word(std::mt19937& rng, int rank, int len) {
  std::vector<Letter> raw;
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  while (static_cast<int>(raw.size()) < len) {
    Letter l{gen(rng), coin(rng) ? 1 : -1};
    if (!raw.empty() && raw.back().cancels(l)) continue;
    raw.push_back(l);
  }
  return FreeWord(rank, raw);
}

// All reduced words over rank generators with length in [0, max_len].
inline std::vector<FreeWord> all_reduced_words(int rank, int max_len) {
  std::vector<FreeWord> out{FreeWord(rank)};
  std::vector<std::vector<Letter>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& seq : frontier) {
      for (int g = 0; g < rank; ++g) {
        for (int sign : {1, -1}) {
          Letter l{g, sign};
          if (!seq.empty() && seq.back().cancels(l)) continue;
          auto ext = seq;
          ext.push_back(l);
          out.push_back(FreeWord(rank, ext));
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

inline SplitMapClass random_canonical_class(std::mt19937& rng, int max_wlen) {
  std::uniform_int_distribution<int> len(0, max_wlen);
  std::uniform_int_distribution<long long> exp(-2, 2);
  std::uniform_int_distribution<long long> lat(-3, 3);
  for (;;) {
    FreeWord w = random_word(rng, 2, len(rng));
    long long r = exp(rng), s = exp(rng);
    if (!w.is_identity() && r == 0 && s == 0) continue;
    if (w.is_identity()) r = s = 0;
    return canonical_pair(P2Element{power(w, r), {lat(rng), lat(rng)}},
                          P2Element{power(w, s), {lat(rng), lat(rng)}});
  }
}

}  // namespace testutil
