#include "torus2/cli.hpp"

#include <ostream>

#include <json.hpp>

#include "torus2/hatcalc.hpp"
#include "torus2/textio.hpp"

namespace torus2 {

namespace {

using json = nlohmann::ordered_json;

const char* kind_name(errc k) {
  switch (k) {
    case errc::parse: return "parse";
    case errc::domain: return "domain";
    case errc::resource: return "resource";
    case errc::overflow: return "overflow";
    case errc::internal: return "internal";
  }
  return "internal";
}

std::string join(const std::vector<std::string>& args, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < args.size(); ++i) {
    if (i > from) out += ' ';
    out += args[i];
  }
  return out;
}

void need_args(const std::vector<std::string>& args, std::size_t count,
               const char* shape) {
  if (args.size() != count)
    fail(errc::parse, std::string("expected arguments: ") + shape);
}

// Words given as separate arguments may mix {u,v} with {u,v,B}; promote the
// plain pair to rank 3 so they share an alphabet.
std::pair<FreeWord, FreeWord> parse_same_alphabet(const std::string& t1,
                                                  const std::string& t2,
                                                  Alphabet& alphabet) {
  ParsedWord a = parse_word_auto(t1), b = parse_word_auto(t2);
  if (a.alphabet == b.alphabet) {
    alphabet = a.alphabet;
    return {a.word, b.word};
  }
  bool promotable = (a.alphabet == Alphabet::uv && b.alphabet == Alphabet::uvB) ||
                    (a.alphabet == Alphabet::uvB && b.alphabet == Alphabet::uv);
  if (!promotable) fail(errc::domain, "words live over different alphabets");
  alphabet = Alphabet::uvB;
  return {parse_word(t1, Alphabet::uvB), parse_word(t2, Alphabet::uvB)};
}

// Class literals are re-canonicalized so the library preconditions
// (primitive w, sign rule, w = 1 forcing r = s = 0) hold for any input.
SplitMapClass read_class(const std::vector<std::string>& args, std::size_t& pos) {
  SplitMapClass c = parse_class_tokens(args, pos);
  return canonical_pair(P2Element{power(c.w, c.r), {c.a, c.b}},
                        P2Element{power(c.w, c.s), {c.c, c.d}});
}

json hom_json(const PuncturedHom& hom) {
  return json{{"e1", print_punctured(hom.image_e1)},
              {"e2", print_punctured(hom.image_e2)}};
}

struct Output {
  std::ostream& out;
  bool as_json;
  json doc;

  void text(const std::string& line) {
    if (!as_json) out << line << '\n';
  }
  void result(const json& value) { doc["result"] = value; }
  void flush() {
    if (as_json) out << doc.dump() << '\n';
  }
};

int dispatch(const std::string& cmd, const std::vector<std::string>& args, Output& o) {
  if (cmd == "reduce") {
    ParsedWord p = parse_word_auto(join(args, 0));
    std::string s = print_word(p.word, p.alphabet);
    o.result(s);
    o.text(s);
  } else if (cmd == "mul") {
    need_args(args, 2, "mul <word> <word>");
    Alphabet alpha;
    auto [a, b] = parse_same_alphabet(args[0], args[1], alpha);
    std::string s = print_word(multiply(a, b), alpha);
    o.result(s);
    o.text(s);
  } else if (cmd == "hat") {
    std::string s = print_word(hat(parse_word(join(args, 0), Alphabet::uv)), Alphabet::uv);
    o.result(s);
    o.text(s);
  } else if (cmd == "conj") {
    need_args(args, 2, "conj <g> <w>");
    Alphabet alpha;
    auto [g, w] = parse_same_alphabet(args[0], args[1], alpha);
    std::string s = print_word(conjugate(g, w), alpha);
    o.result(s);
    o.text(s);
  } else if (cmd == "root") {
    ParsedWord p = parse_word_auto(join(args, 0));
    PrimitiveRoot pr = primitive_root(p.word);
    std::string s = print_word(pr.root, p.alphabet);
    o.result(json{{"root", s}, {"exponent", pr.exponent}});
    o.text("root: " + s);
    o.text("exponent: " + std::to_string(pr.exponent));
  } else if (cmd == "hatdec") {
    auto wit = is_hat_conjugate(parse_word(join(args, 0), Alphabet::uv));
    if (!wit) {
      o.result(nullptr);
      o.text("none");
    } else {
      std::string s = print_word(wit->lambda, Alphabet::uv);
      o.result(json{{"lambda", s}, {"l", wit->l}});
      o.text("lambda: " + s);
      o.text("l: " + std::to_string(wit->l));
    }
  } else if (cmd == "e1dec") {
    need_args(args, 2, "e1dec <a> <b>");
    auto wit = solve_E1(parse_word(args[0], Alphabet::uv), parse_word(args[1], Alphabet::uv));
    if (!wit) {
      o.result(nullptr);
      o.text("none");
    } else {
      std::string s = print_word(wit->lambda, Alphabet::uv);
      o.result(json{{"lambda", s}, {"r", wit->r}, {"s", wit->s}});
      o.text("lambda: " + s);
      o.text("r: " + std::to_string(wit->r));
      o.text("s: " + std::to_string(wit->s));
    }
  } else if (cmd == "p2mul") {
    need_args(args, 2, "p2mul <p2> <p2>");
    std::string s = print_p2(p2_mul(parse_p2(args[0]), parse_p2(args[1])));
    o.result(s);
    o.text(s);
  } else if (cmd == "b2mul") {
    need_args(args, 2, "b2mul <b2> <b2>");
    std::string s = print_b2(b2_mul(parse_b2(args[0]), parse_b2(args[1])));
    o.result(s);
    o.text(s);
  } else if (cmd == "sigmaconj") {
    need_args(args, 1, "sigmaconj <p2>");
    std::string s = print_p2(sigma_conj(parse_p2(args[0])));
    o.result(s);
    o.text(s);
  } else if (cmd == "ppmul") {
    need_args(args, 2, "ppmul <punctured> <punctured>");
    std::string s =
        print_punctured(pp_mul(parse_punctured(args[0]), parse_punctured(args[1])));
    o.result(s);
    o.text(s);
  } else if (cmd == "ppact") {
    need_args(args, 2, "ppact <word over x,y> <word over u,v,B>");
    std::string s = print_word(
        pp_act(parse_word(args[0], Alphabet::xy), parse_word(args[1], Alphabet::uvB)),
        Alphabet::uvB);
    o.result(s);
    o.text(s);
  } else if (cmd == "alpha") {
    need_args(args, 1, "alpha <punctured>");
    std::string s = print_p2(alpha(parse_punctured(args[0])));
    o.result(s);
    o.text(s);
  } else if (cmd == "relcheck") {
    json rows = json::array();
    int failures = 0;
    for (const auto& r : check_relations()) {
      rows.push_back(json{{"name", r.name}, {"pass", r.pass}});
      o.text(std::string(r.pass ? "ok   " : "FAIL ") + r.name);
      if (!r.pass) ++failures;
    }
    o.result(rows);
    if (failures > 0) {
      o.flush();
      return 1;
    }
  } else if (cmd == "canon") {
    need_args(args, 2, "canon <p2> <p2>");
    std::string s = print_class(canonical_pair(parse_p2(args[0]), parse_p2(args[1])));
    o.result(s);
    o.text(s);
  } else if (cmd == "eq" || cmd == "uneq") {
    std::size_t pos = 0;
    SplitMapClass c1 = read_class(args, pos);
    SplitMapClass c2 = read_class(args, pos);
    if (pos != args.size()) fail(errc::parse, "trailing arguments after class literals");
    bool v = cmd == "eq" ? free_equal(c1, c2) : unordered_equal(c1, c2);
    o.result(v);
    o.text(v ? "true" : "false");
  } else if (cmd == "swap") {
    std::size_t pos = 0;
    SplitMapClass c = read_class(args, pos);
    if (pos != args.size()) fail(errc::parse, "trailing arguments after class literal");
    std::string s = print_class(swap_class(c));
    o.result(s);
    o.text(s);
  } else if (cmd == "nielsen") {
    std::size_t pos = 0;
    SplitMapClass c = read_class(args, pos);
    if (pos != args.size()) fail(errc::parse, "trailing arguments after class literal");
    long long n = nielsen(c);
    o.result(n);
    o.text(std::to_string(n));
  } else if (cmd == "deform") {
    std::size_t pos = 0;
    SplitMapClass c = read_class(args, pos);
    if (pos != args.size()) fail(errc::parse, "trailing arguments after class literal");
    DeformVerdict v = can_deform_fixed_point_free(c);
    if (v.kind == DeformVerdict::Kind::no) {
      o.result(json{{"verdict", "No"}, {"nielsen", v.nielsen_number}});
      o.text("No (nielsen=" + std::to_string(v.nielsen_number) + ")");
    } else if (v.kind == DeformVerdict::Kind::yes) {
      o.result(json{{"verdict", "Yes"}});
      o.doc["certificate"] = hom_json(*v.certificate);
      o.text("Yes");
      o.text("e1: " + print_punctured(v.certificate->image_e1));
      o.text("e2: " + print_punctured(v.certificate->image_e2));
    } else {
      o.result(json{{"verdict", "Unknown"}});
      o.text("Unknown");
    }
  } else if (cmd == "fix2root") {
    std::size_t pos = 0;
    SplitMapClass c = read_class(args, pos);
    if (pos != args.size()) fail(errc::parse, "trailing arguments after class literal");
    std::string s = print_root(fixed_to_root(c));
    o.result(s);
    o.text(s);
  } else if (cmd == "liftprop") {
    std::size_t pos = 0;
    RootData rd = parse_root_tokens(args, pos);
    if (pos != args.size()) fail(errc::parse, "trailing arguments after root literal");
    PuncturedHom hom = lift_proportional(rd);
    o.result(hom_json(hom));
    o.doc["certificate"] = hom_json(hom);
    o.text("e1: " + print_punctured(hom.image_e1));
    o.text("e2: " + print_punctured(hom.image_e2));
  } else if (cmd == "liftspec") {
    need_args(args, 7, "liftspec <p> <q> <l1> <l2> <l3> <r> <s>");
    PuncturedHom hom = lift_cyclic_special(parse_int(args[0]), parse_int(args[1]),
                                           parse_int(args[2]), parse_int(args[3]),
                                           parse_int(args[4]), parse_int(args[5]),
                                           parse_int(args[6]));
    o.result(hom_json(hom));
    o.doc["certificate"] = hom_json(hom);
    o.text("e1: " + print_punctured(hom.image_e1));
    o.text("e2: " + print_punctured(hom.image_e2));
  } else if (cmd == "verify") {
    need_args(args, 4, "verify <punctured> <punctured> <p2> <p2>");
    bool v = verify_lift(PuncturedHom{parse_punctured(args[0]), parse_punctured(args[1])},
                         parse_p2(args[2]), parse_p2(args[3]));
    o.result(v);
    o.text(v ? "true" : "false");
  } else if (cmd == "dist") {
    need_args(args, 2, "dist (x,y) (x,y)");
    auto point = [](const std::string& t) {
      return parse_configuration("{" + t + "}").points.at(0);
    };
    std::string s = format_real(torus_dist(point(args[0]), point(args[1])));
    o.result(json::parse(s));
    o.text(s);
  } else if (cmd == "hausdorff") {
    need_args(args, 2, "hausdorff <configuration> <configuration>");
    std::string s =
        format_real(hausdorff(parse_configuration(args[0]), parse_configuration(args[1])));
    o.result(json::parse(s));
    o.text(s);
  } else {
    fail(errc::parse, "unknown command '" + cmd + "'");
  }
  o.flush();
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  bool as_json = false;
  std::string cmd;
  std::vector<std::string> positional;
  Output o{out, false, json::object()};
  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (a == "--json") {
        as_json = true;
      } else if (a == "--max-word-len") {
        if (++i == args.size()) fail(errc::parse, "--max-word-len needs a value");
        long long n = parse_int(args[i]);
        if (n <= 0) fail(errc::parse, "--max-word-len must be positive");
        set_max_word_length(static_cast<std::size_t>(n));
      } else if (cmd.empty() && a.starts_with("--")) {
        fail(errc::parse, "unknown flag '" + a + "'");
      } else if (cmd.empty()) {
        cmd = a;
      } else {
        positional.push_back(a);
      }
    }
    o.as_json = as_json;
    o.doc["command"] = cmd;
    o.doc["inputs"] = positional;
    if (cmd.empty()) fail(errc::parse, "no command given");
    return dispatch(cmd, positional, o);
  } catch (const error& e) {
    if (as_json) {
      o.doc["error"] = json{{"kind", kind_name(e.kind())}, {"message", e.what()}};
      out << o.doc.dump() << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return e.kind() == errc::parse ? 2 : 1;
  }
}

}  // namespace torus2
