#include <doctest.h>

#include <map>

#include "f2fix/words.hpp"
#include "support/naive.hpp"

using namespace f2fix;

namespace {
  Word w(char const* s) {
    return parse_word(s);
  }
}  // namespace

TEST_CASE("reduce cancels inverse pairs") {
  CHECK(naive::word("aA").is_identity());
  CHECK(naive::word("aBbA").is_identity());
  Word abba = naive::word("abba");
  REQUIRE(abba.num_syllables() == 3);
  CHECK(abba.syllables()[1] == Syllable{Gen::b, 2});
  CHECK(abba.length() == 4);
}

TEST_CASE("multiply, invert, power") {
  CHECK(multiply(w("ab"), w("B")) == w("a"));
  CHECK(naive::str(invert(w("a^2b"))) == "BAA");
  CHECK(naive::str(power(w("ab"), 2)) == "abab");
  CHECK(power(w("ab"), -1) == w("BA"));
  CHECK(power(w("ab"), 0).is_identity());
}

TEST_CASE("parse and print") {
  CHECK(w("a^2B^3") == naive::word("aaBBB"));
  CHECK(w(" a b ") == w("ab"));
  CHECK(w("1").is_identity());
  CHECK(w("").is_identity());
  CHECK(w("a^-2") == w("AA"));
  CHECK(w("A^2") == w("AA"));
  CHECK(w("aA") == w("1"));
  CHECK(to_string(w("aaBBB")) == "a^2B^3");
  CHECK(to_string(Word()) == "1");
  CHECK(to_string(w("abA")) == "abA");
  CHECK_THROWS_AS(w("a^"), ParseError);
  CHECK_THROWS_AS(w("a^x"), ParseError);
  CHECK_THROWS_AS(w("c"), ParseError);
  CHECK_THROWS_AS(w("^2"), ParseError);
  try {
    w("ab^q");
    FAIL("no exception");
  } catch (ParseError const& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("apply, compose, power of endomorphisms") {
  Endomorphism psi1{w("a"), w("baba^2")};
  CHECK(naive::str(apply(psi1, w("ab"))) == "ababaa");
  CHECK(apply(Endomorphism::identity(), w("aBBa")) == w("aBBa"));
  CHECK(apply(Endomorphism{w("ab"), Word()}, w("b")).is_identity());
  CHECK(compose(Endomorphism::identity(), psi1) == psi1);
  CHECK(endo_power({w("a"), w("b^2")}, 2) == Endomorphism{w("a"), w("b^4")});
  CHECK(compose({w("a"), w("ab")}, inner(w("a"))).image_b == w("ba"));
}

TEST_CASE("cyclic reduction and conjugacy") {
  auto [c1, g1] = cyclic_reduce(w("abA"));
  CHECK(c1.rep() == w("b"));
  CHECK(g1 == w("A"));
  CHECK(multiply({invert(g1), c1.rep(), g1}) == w("abA"));

  auto [c2, g2] = cyclic_reduce(w("ab"));
  CHECK(c2.rep() == w("ab"));
  CHECK(g2.is_identity());

  // a^2 b a b^-1 a^-2 is a conjugate of a; the conjugator is found by search.
  Word x        = w("a^2baBA^2");
  auto [c3, g3] = cyclic_reduce(x);
  CHECK(c3.rep() == w("a"));
  CHECK(multiply({invert(g3), c3.rep(), g3}) == x);
  std::int64_t shortest = -1;
  for (auto const& s : naive::all_words(0, static_cast<int>(x.length()))) {
    Word g = naive::word(s);
    if (multiply({invert(g), w("a"), g}) == x) {
      shortest = g.length();
      break;
    }
  }
  CHECK(g3.length() == shortest);

  auto g4 = conjugacy_witness(w("ab"), w("ba"));
  REQUIRE(g4.has_value());
  CHECK(multiply({invert(*g4), w("ab"), *g4}) == w("ba"));
  CHECK_FALSE(conjugacy_witness(w("ab"), w("AB")).has_value());
  CHECK(conjugacy_witness(w("a"), w("a")) == Word());
}

TEST_CASE("roots") {
  CHECK(root(w("abab")) == std::pair{w("ab"), std::int64_t{2}});
  CHECK(root(w("a^6")) == std::pair{w("a"), std::int64_t{6}});
  CHECK(root(w("a^2b")) == std::pair{w("a^2b"), std::int64_t{1}});
  CHECK(root(w("Ba^2b")) == std::pair{w("Bab"), std::int64_t{2}});
  CHECK_THROWS_AS(root(Word()), std::invalid_argument);
}

TEST_CASE("syllable statistics") {
  SyllableStats s = stats(w("a^2bAb^3"));
  CHECK(s.s == 4);
  CHECK(s.s_a == 2);
  CHECK(s.s_b == 2);
  CHECK(s.s_a2 == 1);
  CHECK(s.s_b2 == 1);
  CHECK(s.t_a == 3);
  CHECK(s.t_b == 4);
  CHECK(s.sigma_a == 1);
  CHECK(s.sigma_b == 4);
  CHECK(stats(Word()) == SyllableStats{});
  SyllableStats t = stats(w("bab"));
  CHECK(t.s == 3);
  CHECK(t.s_b == 2);
  CHECK(t.s_a == 1);
  CHECK(t.sigma_a == 1);
  CHECK(t.sigma_b == 2);
}

TEST_CASE("shortlex order and enumeration") {
  std::vector<Word> seen;
  for_each_word(0, 3, [&](Word const& x) {
    seen.push_back(x);
    return true;
  });
  auto expected = naive::all_words(0, 3);
  REQUIRE(seen.size() == expected.size());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    CHECK(shortlex_compare(seen[i - 1], seen[i]) < 0);
  }
  CHECK(ShortlexLess{}(w("B"), w("aa")));
  CHECK(ShortlexLess{}(w("a"), w("A")));
  CHECK(ShortlexLess{}(w("A"), w("b")));
}

TEST_CASE("property: reduction, inversion and homomorphism law") {
  naive::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Word         u   = naive::random_word_upto(rng, 12);
    Word         v   = naive::random_word_upto(rng, 12);
    Endomorphism phi = naive::random_endo(rng, 5);
    std::string  su = naive::str(u), sv = naive::str(v);

    CHECK(naive::str(multiply(u, v)) == naive::reduce(su + sv));
    CHECK(naive::reduce(naive::str(multiply(u, v))) == naive::str(multiply(u, v)));
    CHECK(invert(invert(u)) == u);
    CHECK(multiply(u, invert(u)).is_identity());
    CHECK(apply(phi, multiply(u, v)) == multiply(apply(phi, u), apply(phi, v)));
    CHECK(naive::str(apply(phi, u))
          == naive::apply(naive::str(phi.image_a), naive::str(phi.image_b), su));
    CHECK(parse_word(to_string(u)) == u);
  }
}

TEST_CASE("property: conjugacy witnesses are exact and match the naive test") {
  naive::Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    Word u = naive::random_word_upto(rng, 8);
    Word g = naive::random_word_upto(rng, 5);
    Word v = multiply({invert(g), u, g});
    auto h = conjugacy_witness(u, v);
    REQUIRE(h.has_value());
    CHECK(multiply({invert(*h), u, *h}) == v);

    Word x = naive::random_word_upto(rng, 6);
    CHECK(is_conjugate(u, x) == naive::conjugate(naive::str(u), naive::str(x)));
    if (auto k = conjugacy_witness(u, x)) {
      CHECK(multiply({invert(*k), u, *k}) == x);
    }

    // Transitivity.
    Word e = naive::random_word_upto(rng, 4);
    Word y = multiply({invert(e), v, e});
    CHECK(is_conjugate(v, y));
    CHECK(is_conjugate(u, y));
    CHECK(is_conjugate(y, u));
  }
}

TEST_CASE("property: roots against enumerated powers") {
  // Largest m with w = r^m, over every r up to length 9.
  std::map<std::string, std::int64_t> best;
  for (auto const& t : naive::all_words(1, 9)) {
    std::string p = t;
    for (std::int64_t m = 2; m <= 10; ++m) {
      p = naive::reduce(p + t);
      if (p.size() <= 10) {
        best[p] = std::max(best[p], m);
      }
    }
  }
  for (auto const& s : naive::all_words(1, 10)) {
    Word x      = naive::word(s);
    auto [r, n] = root(x);
    CHECK(power(r, n) == x);
    auto it = best.find(s);
    CHECK(n == (it == best.end() ? 1 : it->second));
  }
}
