#include <doctest.h>

#include <set>

#include "f2fix/stallings.hpp"
#include "support/naive.hpp"

using namespace f2fix;

namespace {
  Word w(char const* s) {
    return parse_word(s);
  }

  // Reduced products of at most n generators or inverses.
  std::set<std::string> products(std::vector<Word> const& gens, int n) {
    std::set<std::string> out{""};
    std::set<std::string> layer{""};
    for (int i = 0; i < n; ++i) {
      std::set<std::string> next;
      for (auto const& x : layer) {
        for (auto const& g : gens) {
          next.insert(naive::reduce(x + naive::str(g)));
          next.insert(naive::reduce(x + naive::str(invert(g))));
        }
      }
      out.insert(next.begin(), next.end());
      layer.swap(next);
    }
    return out;
  }
}  // namespace

TEST_CASE("fold and rank") {
  CHECK(rank(fold({w("ab"), w("ab")})) == 1);
  FoldedGraph rose = fold({w("a"), w("b")});
  CHECK(rank(rose) == 2);
  CHECK(rose.num_vertices() == 1);
  CHECK(rose.is_rose());
  CHECK(rank(fold({w("a^2"), w("ab")})) == 2);
  CHECK_FALSE(fold({w("a^2"), w("ab")}).is_rose());
  CHECK(rank(fold({})) == 0);
  CHECK(subgroup_basis(fold({})).empty());
  CHECK(subgroup_basis(fold({w("ab"), w("ab")})) == std::vector<Word>{w("ab")});
  CHECK(subgroup_basis(fold({w("ab"), w("abab")})) == std::vector<Word>{w("ab")});
  CHECK(rank(fold({w("abA")})) == 1);
  CHECK(fold({w("abA")}).num_vertices() == 2);
}

TEST_CASE("membership") {
  CHECK(contains(fold({w("ab")}), w("abab")));
  CHECK_FALSE(contains(fold({w("ab")}), w("a")));
  // b^2 is not in <a^2, ab>: its elements of length <= 2 are listed by
  // enumeration.
  FoldedGraph g     = fold({w("a^2"), w("ab")});
  auto        elems = products({w("a^2"), w("ab")}, 4);
  CHECK(elems.count("bb") == 0);
  CHECK_FALSE(contains(g, w("b^2")));
  CHECK(contains(g, w("Ba")));
  CHECK(elems.count("Ba") == 1);
}

TEST_CASE("injectivity and surjectivity") {
  CHECK(is_injective({w("a"), w("b^2")}));
  CHECK_FALSE(is_surjective({w("a"), w("b^2")}));
  CHECK(is_injective(Endomorphism::identity()));
  CHECK(is_surjective(Endomorphism::identity()));
  CHECK_FALSE(is_injective({w("ab"), w("abab")}));
  CHECK(is_surjective({w("ab"), w("b")}));
  CHECK(is_surjective({w("ab"), w("bab")}));
  CHECK_FALSE(is_surjective({w("Bab"), w("b^3ab^-2")}));
}

TEST_CASE("property: membership agrees with short products") {
  naive::Rng rng(21);
  for (int i = 0; i < 150; ++i) {
    std::vector<Word> gens;
    int               n = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j) {
      gens.push_back(naive::random_word(rng, 1 + static_cast<std::int64_t>(rng() % 5)));
    }
    FoldedGraph g = fold(gens);
    for (auto const& s : products(gens, 3)) {
      CHECK(contains(g, naive::word(s)));
    }
    // For a cyclic subgroup a word of length <= 4 in it is a power g^m
    // with |m| <= 4, so the converse can be checked exactly.
    if (n == 1) {
      std::vector<std::string> gs{naive::str(gens[0])};
      for (auto const& s : naive::all_words(0, 4)) {
        CHECK(contains(g, naive::word(s)) == naive::in_subgroup_bfs(gs, s, 4));
      }
    }
  }
}

TEST_CASE("property: basis round trip") {
  naive::Rng rng(22);
  auto       words = naive::all_words(0, 6);
  for (int i = 0; i < 80; ++i) {
    std::vector<Word> gens;
    int               n = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j) {
      gens.push_back(naive::random_word_upto(rng, 6));
    }
    FoldedGraph g     = fold(gens);
    auto        basis = subgroup_basis(g);
    CHECK(static_cast<std::int64_t>(basis.size()) == rank(g));
    FoldedGraph h = fold(basis);
    CHECK(rank(h) == rank(g));
    for (auto const& s : words) {
      Word x = naive::word(s);
      CHECK(contains(g, x) == contains(h, x));
    }
    for (auto const& b : basis) {
      CHECK(contains(g, b));
    }
  }
}

TEST_CASE("property: surjective implies injective") {
  naive::Rng rng(23);
  for (int i = 0; i < 2000; ++i) {
    Endomorphism phi = naive::random_endo(rng, 4);
    if (is_surjective(phi)) {
      CHECK(is_injective(phi));
      CHECK(contains(fold({phi.image_a, phi.image_b}), w("a")));
      CHECK(contains(fold({phi.image_a, phi.image_b}), w("b")));
    }
  }
}
