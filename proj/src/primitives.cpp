#include "f2fix/primitives.hpp"

#include <numeric>
#include <stdexcept>

namespace f2fix {

  namespace {
    std::int64_t sign(std::int64_t x) {
      return x < 0 ? -1 : 1;
    }

    // a -> a, b -> b a^s and its inverse.
    Endomorphism right_a(std::int64_t s) {
      return {Word::a(), multiply(Word::b(), Word::a(s))};
    }
    // a -> a b^s.
    Endomorphism right_b(std::int64_t s) {
      return {multiply(Word::a(), Word::b(s)), Word::b()};
    }
    // a -> a, b -> a^s b.
    Endomorphism left_a(std::int64_t s) {
      return {Word::a(), multiply(Word::a(s), Word::b())};
    }

    // Replace t by a shorter t x^{±1} or x^{±1} t while possible, then
    // orient t to start with a positive letter.
    void shorten_partner(BasisPair& B) {
      bool progress = true;
      while (progress) {
        progress = false;
        for (std::int64_t e : {1, -1}) {
          Word right = multiply(B.t, power(B.x, e));
          if (right.length() < B.t.length()) {
            B.t         = right;
            B.alpha     = compose(B.alpha, right_a(e));
            B.alpha_inv = compose(right_a(-e), B.alpha_inv);
            progress    = true;
            break;
          }
          Word left = multiply(power(B.x, e), B.t);
          if (left.length() < B.t.length()) {
            B.t         = left;
            B.alpha     = compose(B.alpha, left_a(e));
            B.alpha_inv = compose(left_a(-e), B.alpha_inv);
            progress    = true;
            break;
          }
        }
      }
      if (!B.t.is_identity() && B.t.syllables().front().exp < 0) {
        Endomorphism flip{Word::a(), Word::b(-1)};
        B.t         = invert(B.t);
        B.alpha     = compose(B.alpha, flip);
        B.alpha_inv = compose(flip, B.alpha_inv);
      }
    }
  }  // namespace

  BasisPair construct_basis(std::int64_t p, std::int64_t q) {
    if (std::gcd(p, q) != 1) {
      throw std::invalid_argument("construct_primitive: (" + std::to_string(p)
                                  + ", " + std::to_string(q)
                                  + ") is not a coprime pair");
    }
    // Each step is recorded as the automorphism applied on the outside.
    std::vector<std::pair<Endomorphism, Endomorphism>> steps;
    while (p != 0 && q != 0) {
      std::int64_t s = sign(p) * sign(q);
      if ((p < 0 ? -p : p) >= (q < 0 ? -q : q)) {
        steps.emplace_back(right_a(s), right_a(-s));
        p -= s * q;
      } else {
        steps.emplace_back(right_b(s), right_b(-s));
        q -= s * p;
      }
    }
    BasisPair B;
    if (q == 0) {
      B.alpha     = {Word::a(p), Word::b()};
      B.alpha_inv = B.alpha;
    } else {
      B.alpha     = {Word::b(q), Word::a()};
      B.alpha_inv = {Word::b(), Word::a(q)};
    }
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      B.alpha     = compose(it->first, B.alpha);
      B.alpha_inv = compose(B.alpha_inv, it->second);
    }
    B.x = B.alpha.image_a;
    B.t = B.alpha.image_b;
    return B;
  }

  Word construct_primitive(std::int64_t p, std::int64_t q) {
    return construct_basis(p, q).x;
  }

  bool is_primitive(Word const& w) {
    SyllableStats st = stats(w);
    if (std::gcd(st.sigma_a, st.sigma_b) != 1) {
      return false;
    }
    return is_conjugate(w, construct_primitive(st.sigma_a, st.sigma_b));
  }

  BasisPair complete_to_basis(Word const& x) {
    if (!is_primitive(x)) {
      throw std::invalid_argument("complete_to_basis: " + to_string(x)
                                  + " is not primitive");
    }
    SyllableStats st = stats(x);
    BasisPair     B  = construct_basis(st.sigma_a, st.sigma_b);
    Word          g  = *conjugacy_witness(B.x, x);
    B.alpha          = compose(inner(g), B.alpha);
    B.alpha_inv      = compose(B.alpha_inv, inner(invert(g)));
    B.x              = B.alpha.image_a;
    B.t              = B.alpha.image_b;
    shorten_partner(B);
    return B;
  }

  BasisPair basis_from_pair(Word const& x, Word const& t) {
    if (!is_primitive(x)) {
      throw std::invalid_argument("basis_from_pair: " + to_string(x)
                                  + " is not primitive");
    }
    BasisPair   B   = complete_to_basis(x);
    Word        w   = apply(B.alpha_inv, t);
    auto const& syl = w.syllables();
    // {a, w} is a basis iff w = a^i b^{±1} a^j.
    std::size_t k = (!syl.empty() && syl[0].gen == Gen::a) ? 1 : 0;
    bool        ok
        = k < syl.size() && syl[k].gen == Gen::b
          && (syl[k].exp == 1 || syl[k].exp == -1) && syl.size() <= k + 2;
    if (!ok) {
      throw std::invalid_argument("basis_from_pair: {" + to_string(x) + ", "
                                  + to_string(t) + "} is not a free basis");
    }
    std::int64_t i   = w.leading_exp(Gen::a);
    std::int64_t j   = w.trailing_exp(Gen::a);
    std::int64_t eps = syl[k].exp;
    Endomorphism mu{Word::a(), w};
    Endomorphism mu_inv{Word::a(),
                        power(multiply({Word::a(-i), Word::b(), Word::a(-j)}),
                              eps)};
    B.alpha     = compose(B.alpha, mu);
    B.alpha_inv = compose(mu_inv, B.alpha_inv);
    B.x         = x;
    B.t         = t;
    return B;
  }

  Endomorphism change_basis(Endomorphism const& phi, BasisPair const& B) {
    return compose(B.alpha_inv, compose(phi, B.alpha));
  }

}  // namespace f2fix
