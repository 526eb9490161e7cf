#include "torus2/textio.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace torus2 {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

const char* alphabet_names(Alphabet a) {
  switch (a) {
    case Alphabet::uv: return "uv";
    case Alphabet::uvB: return "uvB";
    case Alphabet::xy: return "xy";
  }
  return "";
}

double parse_real(const std::string& text) {
  std::string t = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    fail(errc::parse, "expected a decimal number, got '" + t + "'");
  return value;
}

}  // namespace

long long parse_int(const std::string& text) {
  std::string t = trim(text);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    fail(errc::parse, "expected an integer, got '" + t + "'");
  return value;
}

FreeWord parse_word(const std::string& text, Alphabet alphabet) {
  const std::string names = alphabet_names(alphabet);
  std::vector<Letter> raw;
  std::size_t index = 0;
  for (const std::string& tok : tokens_of(text)) {
    ++index;
    if (tok == "1") continue;
    std::size_t gen = names.find(tok[0]);
    if (gen == std::string::npos)
      fail(errc::parse, "unknown generator in token " + std::to_string(index) +
                            ": '" + tok + "'");
    long long exp = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^')
        fail(errc::parse, "malformed token " + std::to_string(index) + ": '" + tok + "'");
      exp = parse_int(tok.substr(2));
    }
    int sign = exp < 0 ? -1 : 1;
    for (long long i = 0; i < (exp < 0 ? -exp : exp); ++i)
      raw.push_back({static_cast<int>(gen), sign});
    if (raw.size() > max_word_length())
      fail(errc::resource, "word length limit exceeded while parsing");
  }
  return FreeWord(static_cast<int>(names.size()), raw);
}

std::string print_word(const FreeWord& w, Alphabet alphabet) {
  if (w.is_identity()) return "1";
  const std::string names = alphabet_names(alphabet);
  std::string out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w[j] == w[i]) ++j;
    long long exp = static_cast<long long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += names[w[i].gen];
    if (exp != 1) out += '^' + std::to_string(exp);
    i = j;
  }
  return out;
}

ParsedWord parse_word_auto(const std::string& text) {
  bool has_xy = text.find_first_of("xy") != std::string::npos;
  bool has_b = text.find('B') != std::string::npos;
  Alphabet a = has_xy ? Alphabet::xy : (has_b ? Alphabet::uvB : Alphabet::uv);
  return ParsedWord{parse_word(text, a), a};
}

P2Element parse_p2(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    fail(errc::parse, "P2 literal must look like (<word> ; <int>,<int>)");
  auto parts = split(t.substr(1, t.size() - 2), ';');
  if (parts.size() != 2) fail(errc::parse, "P2 literal needs exactly one ';'");
  auto nums = split(parts[1], ',');
  if (nums.size() != 2) fail(errc::parse, "P2 lattice part needs two integers");
  return P2Element{parse_word(parts[0], Alphabet::uv),
                   {parse_int(nums[0]), parse_int(nums[1])}};
}

std::string print_p2(const P2Element& g) {
  return "(" + print_word(g.free_part, Alphabet::uv) + " ; " +
         std::to_string(g.lattice_part[0]) + "," + std::to_string(g.lattice_part[1]) + ")";
}

B2Element parse_b2(const std::string& text) {
  std::string t = trim(text);
  std::size_t close = t.rfind(')');
  if (close == std::string::npos)
    fail(errc::parse, "B2 literal must look like (<word> ; <int>,<int>) s^<0|1>");
  std::string tail = trim(t.substr(close + 1));
  if (tail != "s^0" && tail != "s^1")
    fail(errc::parse, "B2 literal must end in s^0 or s^1");
  return B2Element{parse_p2(t.substr(0, close + 1)), tail == "s^1" ? 1 : 0};
}

std::string print_b2(const B2Element& g) {
  return print_p2(g.coset_rep) + " s^" + std::to_string(g.epsilon);
}

PuncturedElement parse_punctured(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    fail(errc::parse, "punctured literal must look like [<word> | <word>]");
  auto parts = split(t.substr(1, t.size() - 2), '|');
  if (parts.size() != 2) fail(errc::parse, "punctured literal needs exactly one '|'");
  return PuncturedElement{parse_word(parts[0], Alphabet::uvB),
                          parse_word(parts[1], Alphabet::xy)};
}

std::string print_punctured(const PuncturedElement& g) {
  return "[" + print_word(g.kernel_part, Alphabet::uvB) + " | " +
         print_word(g.quotient_part, Alphabet::xy) + "]";
}

namespace {

struct ClassFields {
  FreeWord w{2};
  long long r = 0, s = 0, a = 0, b = 0, c = 0, d = 0;
};

ClassFields parse_class_fields(const std::vector<std::string>& tokens, std::size_t& pos,
                               const std::string& prefix) {
  if (pos >= tokens.size() || tokens[pos] != prefix)
    fail(errc::parse, "expected '" + prefix + "' literal");
  ++pos;
  if (pos >= tokens.size() || !tokens[pos].starts_with("w="))
    fail(errc::parse, prefix + " literal: expected w=<word>");
  std::string word_text = tokens[pos].substr(2);
  ++pos;
  while (pos < tokens.size() && !tokens[pos].starts_with("r=")) {
    word_text += ' ' + tokens[pos];
    ++pos;
  }
  if (pos >= tokens.size()) fail(errc::parse, prefix + " literal: expected r=<int>");
  long long r = parse_int(tokens[pos].substr(2));
  ++pos;
  if (pos >= tokens.size() || !tokens[pos].starts_with("s="))
    fail(errc::parse, prefix + " literal: expected s=<int>");
  long long s = parse_int(tokens[pos].substr(2));
  ++pos;
  if (pos >= tokens.size() || !tokens[pos].starts_with("A="))
    fail(errc::parse, prefix + " literal: expected A=<int>,<int>,<int>,<int>");
  auto nums = split(tokens[pos].substr(2), ',');
  if (nums.size() != 4) fail(errc::parse, prefix + " literal: A= needs four integers");
  ++pos;
  return ClassFields{parse_word(word_text, Alphabet::uv), r, s,
                     parse_int(nums[0]), parse_int(nums[1]), parse_int(nums[2]),
                     parse_int(nums[3])};
}

}  // namespace

SplitMapClass parse_class_tokens(const std::vector<std::string>& tokens,
                                 std::size_t& pos) {
  ClassFields f = parse_class_fields(tokens, pos, "class");
  return SplitMapClass{f.w, f.r, f.s, f.a, f.b, f.c, f.d};
}

std::string print_class(const SplitMapClass& c) {
  return "class w=" + print_word(c.w, Alphabet::uv) + " r=" + std::to_string(c.r) +
         " s=" + std::to_string(c.s) + " A=" + std::to_string(c.a) + "," +
         std::to_string(c.b) + "," + std::to_string(c.c) + "," + std::to_string(c.d);
}

RootData parse_root_tokens(const std::vector<std::string>& tokens, std::size_t& pos) {
  ClassFields f = parse_class_fields(tokens, pos, "root");
  return RootData{f.w, f.r, f.s, f.a, f.b, f.c, f.d};
}

std::string print_root(const RootData& rd) {
  return "root w=" + print_word(rd.w, Alphabet::uv) + " r=" + std::to_string(rd.r) +
         " s=" + std::to_string(rd.s) + " A=" + std::to_string(rd.a1) + "," +
         std::to_string(rd.b) + "," + std::to_string(rd.c) + "," + std::to_string(rd.d1);
}

Configuration parse_configuration(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    fail(errc::parse, "configuration literal must look like {(x,y);(x,y);...}");
  std::vector<TorusPoint> points;
  for (const std::string& part : split(t.substr(1, t.size() - 2), ';')) {
    std::string p = trim(part);
    if (p.size() < 2 || p.front() != '(' || p.back() != ')')
      fail(errc::parse, "configuration point must look like (x,y)");
    auto nums = split(p.substr(1, p.size() - 2), ',');
    if (nums.size() != 2) fail(errc::parse, "configuration point needs two coordinates");
    points.push_back(make_torus_point(parse_real(nums[0]), parse_real(nums[1])));
  }
  return make_configuration(std::move(points));
}

std::string print_configuration(const Configuration& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    if (i) out += ';';
    out += "(" + format_real(c.points[i].x) + "," + format_real(c.points[i].y) + ")";
  }
  return out + "}";
}

std::string format_real(double value) {
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

}  // namespace torus2
