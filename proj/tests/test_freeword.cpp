#include <doctest.h>

#include "util.hpp"

using namespace torus2;
using testutil::uv;

TEST_CASE("free reduction") {
  CHECK(uv("u u^-1 v") == uv("v"));
  CHECK(uv("u v v^-1 u") == uv("u^2"));
  CHECK(uv("").is_identity());
  CHECK(reduce(2, {{0, 1}, {0, -1}}).is_identity());
}

TEST_CASE("multiplication and inverses") {
  CHECK(multiply(uv("u v"), uv("v^-1 u")) == uv("u^2"));
  CHECK(multiply(uv("u"), uv("u^-1")).is_identity());
  CHECK(multiply(uv("u v^-1"), uv("v u")) == uv("u^2"));
  FreeWord w = uv("u v^2 u^-1");
  CHECK(multiply(w, w.inverse()).is_identity());
  CHECK(w.inverse().inverse() == w);
  CHECK(power(uv("u v"), 3) == uv("u v u v u v"));
  CHECK(power(uv("u"), -2) == uv("u^-2"));
}

TEST_CASE("hat involution") {
  CHECK(hat(uv("u")) == uv("u^-1"));
  CHECK(hat(uv("u v^2")) == uv("u^-1 v^-2"));
  CHECK(hat(hat(uv("u v^2"))) == uv("u v^2"));
  CHECK(multiply(uv("u v"), hat(uv("u v"))) == uv("u v u^-1 v^-1"));
  CHECK_THROWS_AS(hat(FreeWord(3)), error);
}

TEST_CASE("hat is an involutive homomorphism on all short words") {
  auto words = testutil::all_reduced_words(2, 6);
  for (const auto& w : words) {
    CHECK(hat(hat(w)) == w);
    CHECK(hat(w).length() == w.length());
    AbVector ab = abelianize(w);
    CHECK(abelianize(hat(w)) == -ab);
  }
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    FreeWord a = testutil::random_word(rng, 2, 8), b = testutil::random_word(rng, 2, 8);
    CHECK(hat(multiply(a, b)) == multiply(hat(a), hat(b)));
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianize(uv("u v u^-1 v^-1")) == AbVector{0, 0});
  CHECK(abelianize(uv("u^2 v^-1")) == AbVector{2, -1});
  CHECK(abelianize(hat(uv("u^2 v"))) == AbVector{-2, -1});
}

TEST_CASE("conjugacy with witness") {
  auto g = are_conjugate(uv("u v"), uv("v u"));
  REQUIRE(g);
  CHECK(conjugate(*g, uv("u v")) == uv("v u"));
  CHECK(!are_conjugate(uv("u"), uv("v")));
  CHECK(!are_conjugate(uv("u v u^-1 v^-1"), uv("v u v^-1 u^-1")));
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    FreeWord w = testutil::random_word(rng, 2, 10);
    FreeWord t = testutil::random_word(rng, 2, 6);
    auto wit = are_conjugate(w, conjugate(t, w));
    REQUIRE(wit);
    CHECK(conjugate(*wit, w) == conjugate(t, w));
  }
}

TEST_CASE("primitive roots") {
  auto pr = primitive_root(power(uv("u v"), 3));
  CHECK(pr.root == uv("u v"));
  CHECK(pr.exponent == 3);
  pr = primitive_root(uv("u^4"));
  CHECK(pr.root == uv("u"));
  CHECK(pr.exponent == 4);
  pr = primitive_root(uv("u v^2"));
  CHECK(pr.root == uv("u v^2"));
  CHECK(pr.exponent == 1);
  CHECK_THROWS_AS(primitive_root(FreeWord(2)), error);

  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    FreeWord z = testutil::random_word(rng, 2, 5);
    if (z.is_identity()) continue;
    FreeWord w = power(z, 3);
    auto [root, k] = primitive_root(w);
    CHECK(power(root, k) == w);
    CHECK(primitive_root(root).exponent == 1);
  }
}

TEST_CASE("commutation matches common primitive roots") {
  CHECK(commute(uv("u^2"), uv("u^5")));
  CHECK(!commute(uv("u"), uv("v")));
  CHECK(commute(power(uv("u v"), 2), power(uv("u v"), 3)));

  auto words = testutil::all_reduced_words(2, 5);
  for (const auto& a : words) {
    if (a.is_identity()) continue;
    for (const auto& b : words) {
      if (b.is_identity()) continue;
      auto ra = primitive_root(a).root, rb = primitive_root(b).root;
      bool same_root = ra == rb || ra == rb.inverse();
      CHECK(commute(a, b) == same_root);
    }
  }
}

TEST_CASE("word length limit") {
  std::size_t saved = max_word_length();
  set_max_word_length(8);
  CHECK_THROWS_AS(power(uv("u v"), 5), error);
  set_max_word_length(saved);
  CHECK(power(uv("u v"), 5).length() == 10);
}
