#include "f2fix/mofix.hpp"

#include <algorithm>
#include <stdexcept>

#include "f2fix/abelianization.hpp"
#include "f2fix/primitives.hpp"
#include "f2fix/stallings.hpp"

namespace f2fix {

  namespace {
    // Iterates longer than this are dropped from the identity search.
    constexpr std::int64_t max_iterate_length = std::int64_t{1} << 16;
    // Letters of iterates produced over one identity search.
    constexpr std::int64_t max_search_letters = std::int64_t{1} << 24;
    // Powers of psi whose images exceed this are not formed.
    constexpr std::int64_t max_power_length = std::int64_t{1} << 22;

    void require_mono(Endomorphism const& psi, char const* who) {
      if (!is_injective(psi)) {
        throw std::invalid_argument(std::string(who) + ": " + to_string(psi)
                                    + " is not injective");
      }
      if (is_surjective(psi)) {
        throw std::invalid_argument(std::string(who) + ": " + to_string(psi)
                                    + " is surjective");
      }
    }

    bool unimodular(Endomorphism const& psi) {
      std::int64_t d = det(matrix_of(psi));
      return d == 1 || d == -1;
    }

    void add_class(std::vector<CyclicWord>& classes, Word const& w) {
      CyclicWord c = class_up_to_inversion(w);
      if (std::find(classes.begin(), classes.end(), c) == classes.end()) {
        classes.push_back(c);
      }
      std::sort(classes.begin(), classes.end());
    }

    Word slice(std::vector<Letter> const& s, std::size_t from, std::size_t to) {
      return Word::from_letters(
          std::vector<Letter>(s.begin() + from, s.begin() + to));
    }

    // Strip the leading and trailing a-syllables.
    Word strip_a(Word const& w) {
      auto const& syl   = w.syllables();
      std::size_t begin = (!syl.empty() && syl.front().gen == Gen::a) ? 1 : 0;
      std::size_t end   = syl.size();
      if (end > begin && syl.back().gen == Gen::a) {
        --end;
      }
      Word out;
      for (std::size_t i = begin; i < end; ++i) {
        out.push(syl[i]);
      }
      return out;
    }

    // C = L c R with c the middle b-letter.
    struct Centre {
      Word   left;
      Word   right;
      Letter centre;
    };

    std::optional<Centre> split_at_centre(Word const& C) {
      std::int64_t tb = stats(C).t_b;
      if (tb % 2 == 0) {
        return std::nullopt;
      }
      auto         l    = C.letters();
      std::int64_t seen = 0;
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (letter::gen(l[i]) == Gen::b && ++seen == (tb + 1) / 2) {
          return Centre{slice(l, 0, i), slice(l, i + 1, l.size()), l[i]};
        }
      }
      return std::nullopt;
    }

    // C = a^{-j} W^-1 a^p c a^q W a^{j-m} letter-exactly, with W non-empty
    // and starting and ending with b-syllables.
    struct Peeled {
      Word         W;
      std::int64_t j, p, q, m;
    };

    std::optional<Peeled> peel(Word const& C, Letter want) {
      auto split = split_at_centre(C);
      if (!split || split->centre != want) {
        return std::nullopt;
      }
      Word Winv = strip_a(split->left);
      Word W    = strip_a(split->right);
      if (W.is_identity() || !(invert(Winv) == W)) {
        return std::nullopt;
      }
      // Interior a-syllables of left/right are the same as the outer ones
      // when W is empty; that case was excluded above.
      Peeled out;
      out.W = W;
      out.j = -split->left.leading_exp(Gen::a);
      out.p = split->left.trailing_exp(Gen::a);
      out.q = split->right.leading_exp(Gen::a);
      out.m = out.j - split->right.trailing_exp(Gen::a);
      Word rebuilt = multiply({Word::a(-out.j), invert(W), Word::a(out.p)});
      rebuilt.push(letter::gen(want), letter::sign(want));
      rebuilt.push(multiply({Word::a(out.q), W, Word::a(out.j - out.m)}));
      if (!(rebuilt == C)
          || rebuilt.length() != 2 * W.length() + std::abs(out.j)
                                     + std::abs(out.p) + 1 + std::abs(out.q)
                                     + std::abs(out.j - out.m)) {
        return std::nullopt;
      }
      return out;
    }

    Endomorphism checked_power(Endomorphism const& psi, std::int64_t n) {
      Endomorphism result = psi;
      for (std::int64_t i = 1; i < n; ++i) {
        result = compose(psi, result);
        if (result.image_a.length() + result.image_b.length()
            > max_power_length) {
          throw std::length_error("power of endomorphism too long");
        }
      }
      return result;
    }
  }  // namespace

  MOFixReport mofix_case1(Endomorphism const& psi) {
    require_mono(psi, "mofix_case1");
    if (unimodular(psi)) {
      throw std::invalid_argument("mofix_case1: determinant is ±1");
    }
    MOFixReport report;
    auto        v = solve_fixed_vector(matrix_of(psi));
    if (v) {
      Word x = construct_primitive(v->first, v->second);
      if (is_conjugate(apply(psi, x), x)) {
        add_class(report.classes, x);
      }
    }
    return report;
  }

  std::optional<BSIdentity> bs_identity_search(Endomorphism const& psi,
                                               SearchBudget        budget) {
    // Only the shortlex-least word of each hit set can be the first hit:
    // cyclically reduced, not a proper power, least rotation, and no larger
    // than the least rotation of its inverse.
    std::vector<Word> candidates;
    for_each_word(1, budget.max_len, [&](Word const& w) {
      if (CyclicWord(w).rep() == w && root(w).second == 1
          && class_up_to_inversion(w).rep() == w) {
        candidates.push_back(w);
      }
      return true;
    });
    std::vector<Word> iterate = candidates;
    std::vector<bool> alive(candidates.size(), true);
    std::int64_t      work = 0;
    for (std::int64_t p = 1; p <= budget.max_p; ++p) {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!alive[i]) {
          continue;
        }
        Word v = cyclic_reduce(apply(psi, iterate[i])).first.rep();
        work += v.length();
        if (work > max_search_letters) {
          return std::nullopt;
        }
        if (v.is_identity() || v.length() > max_iterate_length) {
          alive[i] = false;
          continue;
        }
        iterate[i]        = v;
        Word const& x     = candidates[i];
        auto [r, n]       = root(v);
        CyclicWord   rc(r);
        std::int64_t q = 0;
        if (rc == CyclicWord(x)) {
          q = n;
        } else if (rc == CyclicWord(invert(x))) {
          q = -n;
        } else {
          continue;
        }
        Word full = apply(checked_power(psi, p), x);
        Word g    = *conjugacy_witness(power(x, q), full);
        return BSIdentity{p, q, x, g};
      }
    }
    return std::nullopt;
  }

  std::optional<SecondMofpMatch> match_second_mofp(Endomorphism const& phi) {
    if (!(phi.image_a == Word::a())) {
      throw std::invalid_argument("classify_second_mofp: phi(a) != a");
    }
    require_mono(phi, "classify_second_mofp");
    if (!unimodular(phi)) {
      throw std::invalid_argument("classify_second_mofp: determinant is not ±1");
    }
    Word const& B = phi.image_b;

    for (std::int64_t eps : {1, -1}) {
      Word C  = eps == 1 ? B : invert(B);
      auto pm = peel(C, letter::make(Gen::b, static_cast<int>(eps)));
      if (pm && pm->m == 1 && pm->p + pm->q == 1) {
        SecondMofpMatch out{SecondMofpMatch::Form::I,
                            multiply(Word::a(), Word::b(eps)),
                            pm->W,
                            Word(),
                            pm->j,
                            pm->p,
                            pm->q,
                            eps,
                            0};
        return out;
      }
    }

    if (auto pm = peel(B, letter::b);
        pm && pm->m != 0 && pm->p + pm->q == pm->m) {
      std::int64_t eps = pm->m > 0 ? 1 : -1;
      return SecondMofpMatch{SecondMofpMatch::Form::II,
                             multiply(Word::b(), Word::a(pm->m)),
                             pm->W,
                             Word(),
                             pm->j,
                             pm->p,
                             pm->q,
                             eps,
                             eps * pm->m};
    }

    if (auto split = split_at_centre(B); split && split->centre == letter::b) {
      Word const& U = split->right;
      if (invert(split->left) == U && stats(U).t_b > 0
          && multiply({invert(U), Word::b(), U}).length()
                 == 2 * U.length() + 1) {
        SecondMofpMatch out;
        out.form = SecondMofpMatch::Form::III;
        out.y    = Word::b();
        out.U    = U;
        return out;
      }
    }
    return std::nullopt;
  }

  std::optional<Word> classify_second_mofp(Endomorphism const& phi) {
    auto m = match_second_mofp(phi);
    if (!m) {
      return std::nullopt;
    }
    if (!is_conjugate(apply(phi, m->y), m->y)) {
      throw std::logic_error("classify_second_mofp: matched " + to_string(m->y)
                             + " is not outer fixed");
    }
    return m->y;
  }

  MOFixReport mofix_case2(Endomorphism const& psi, SearchBudget budget) {
    require_mono(psi, "mofix_case2");
    if (!unimodular(psi)) {
      throw std::invalid_argument("mofix_case2: determinant is not ±1");
    }
    MOFixReport report;
    auto        id = bs_identity_search(psi, budget);
    report.witness = id;
    if (!id) {
      report.status = MOFixStatus::Inconclusive;
      return report;
    }
    if (id->q != 1 && id->q != -1) {
      return report;
    }
    Word const& x = id->x;

    // A power of psi with [x] as an outer fixed point.
    std::int64_t k = 2 * id->p;
    Endomorphism chi;
    try {
      chi = checked_power(psi, k);
      if (!is_conjugate(apply(chi, x), x)) {
        k *= 2;
        chi = checked_power(psi, k);
      }
    } catch (std::length_error const&) {
      report.status = MOFixStatus::Inconclusive;
      return report;
    }
    auto g = conjugacy_witness(x, apply(chi, x));
    if (!g) {
      throw std::logic_error("mofix_case2: no power of psi fixes [x]");
    }
    // phi(w) = g chi(w) g^-1 fixes x.
    Endomorphism phi = compose(inner(invert(*g)), chi);
    BasisPair    B   = complete_to_basis(x);
    Endomorphism phi_new = change_basis(phi, B);

    std::vector<Word> candidates{x};
    if (auto y = classify_second_mofp(phi_new)) {
      candidates.push_back(apply(B.alpha, *y));
    }
    for (auto const& z : candidates) {
      if (is_conjugate(apply(psi, z), z)) {
        add_class(report.classes, z);
      }
    }
    return report;
  }

  MOFixReport mofix(Endomorphism const& psi, SearchBudget budget) {
    require_mono(psi, "mofix");
    return unimodular(psi) ? mofix_case2(psi, budget) : mofix_case1(psi);
  }

  std::vector<CyclicWord> brute_mofix_oracle(Endomorphism const& psi,
                                             std::int64_t        max_len) {
    std::vector<CyclicWord> out;
    for_each_word(1, max_len, [&](Word const& w) {
      if (root(w).second == 1 && is_conjugate(apply(psi, w), w)) {
        CyclicWord c = class_up_to_inversion(w);
        if (std::find(out.begin(), out.end(), c) == out.end()) {
          out.push_back(c);
        }
      }
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace f2fix
