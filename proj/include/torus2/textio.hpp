#pragma once

#include <string>
#include <vector>

#include "torus2/classify.hpp"
#include "torus2/confmetric.hpp"
#include "torus2/fixroot.hpp"

namespace torus2 {

// Generator alphabets shared by the word grammar.
enum class Alphabet { uv, uvB, xy };

// Grammar: whitespace-separated tokens, each a generator name optionally
// followed by ^<signed int>; "1" is the identity. Output coalesces runs
// into exponents, e.g. "u^2 v^-1".
FreeWord parse_word(const std::string& text, Alphabet alphabet);
std::string print_word(const FreeWord& w, Alphabet alphabet);

// Picks the alphabet from the generator names appearing in the text;
// plain {u,v} words parse at rank 2.
struct ParsedWord {
  FreeWord word;
  Alphabet alphabet;
};
ParsedWord parse_word_auto(const std::string& text);

// Element literals:
//   P2        (<word> ; <int>,<int>)
//   B2        (<word> ; <int>,<int>) s^<0|1>
//   punctured [<word over u,v,B> | <word over x,y>]
P2Element parse_p2(const std::string& text);
std::string print_p2(const P2Element& g);
B2Element parse_b2(const std::string& text);
std::string print_b2(const B2Element& g);
PuncturedElement parse_punctured(const std::string& text);
std::string print_punctured(const PuncturedElement& g);

// Class literal, as a token sequence:
//   class w=<word> r=<int> s=<int> A=<int>,<int>,<int>,<int>
// Root data uses the prefix "root" with A = a',b,c,d'.
SplitMapClass parse_class_tokens(const std::vector<std::string>& tokens,
                                 std::size_t& pos);
std::string print_class(const SplitMapClass& c);
RootData parse_root_tokens(const std::vector<std::string>& tokens, std::size_t& pos);
std::string print_root(const RootData& rd);

// Configuration literal: {(x,y);(x,y);...} with decimal coordinates.
Configuration parse_configuration(const std::string& text);
std::string print_configuration(const Configuration& c);

long long parse_int(const std::string& text);
std::string format_real(double value);

}  // namespace torus2
