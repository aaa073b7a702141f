#include "f2fix/engine.hpp"

#include <array>
#include <stdexcept>

#include "f2fix/primitives.hpp"
#include "f2fix/stallings.hpp"

namespace f2fix {

  std::string_view to_string(EndoClass c) {
    switch (c) {
      case EndoClass::NonInjective:
        return "non-injective";
      case EndoClass::Automorphism:
        return "automorphism";
      case EndoClass::NonSurjectiveMono:
        return "non-surjective-mono";
    }
    return "";
  }

  std::string_view to_string(FixStatus s) {
    switch (s) {
      case FixStatus::Complete:
        return "complete";
      case FixStatus::Inconclusive:
        return "inconclusive";
      case FixStatus::AutFallbackIncomplete:
        return "aut-fallback-incomplete";
    }
    return "";
  }

  namespace {
    void assert_fixed(Endomorphism const& psi, std::vector<Word> const& basis) {
      for (auto const& z : basis) {
        if (!(apply(psi, z) == z)) {
          throw std::logic_error("fix: basis element " + to_string(z)
                                 + " is not fixed by " + to_string(psi));
        }
      }
    }

    FixResult automorphism_fallback(Endomorphism const& psi, std::int64_t max_len) {
      FixResult r;
      r.kind   = EndoClass::Automorphism;
      r.status = FixStatus::AutFallbackIncomplete;
      auto found = brute_fix_oracle(psi, max_len);
      if (!found.empty()) {
        r.basis = subgroup_basis(fold(found));
      }
      return r;
    }
  }  // namespace

  EndoClass classify_endo(Endomorphism const& psi) {
    if (!is_injective(psi)) {
      return EndoClass::NonInjective;
    }
    return is_surjective(psi) ? EndoClass::Automorphism
                              : EndoClass::NonSurjectiveMono;
  }

  FixResult fix_non_injective(Endomorphism const& psi) {
    if (is_injective(psi)) {
      throw std::invalid_argument("fix_non_injective: " + to_string(psi)
                                  + " is injective");
    }
    FixResult r;
    r.kind     = EndoClass::NonInjective;
    auto image = subgroup_basis(fold({psi.image_a, psi.image_b}));
    if (!image.empty() && apply(psi, image[0]) == image[0]) {
      r.basis.push_back(image[0]);
    }
    return r;
  }

  std::optional<Word> fix_from_mofp(Endomorphism const& psi,
                                    Word const&         x,
                                    ConjugatorSolution* solution) {
    if (classify_endo(psi) != EndoClass::NonSurjectiveMono) {
      throw std::invalid_argument("fix_from_mofp: " + to_string(psi)
                                  + " is not a non-surjective monomorphism");
    }
    if (!is_conjugate(apply(psi, x), x)) {
      throw std::invalid_argument("fix_from_mofp: [" + to_string(x)
                                  + "] is not an outer fixed point");
    }
    BasisPair    B       = complete_to_basis(x);
    Endomorphism psi_new = change_basis(psi, B);

    auto [c, P] = cyclic_reduce(psi_new.image_a);
    if (!(c.rep() == Word::a())
        || !(multiply({invert(P), Word::a(), P}) == psi_new.image_a)) {
      throw std::logic_error("fix_from_mofp: image of a is not P^-1 a P");
    }
    Word const& Q = psi_new.image_b;
    Word        Z = multiply({P, Q, invert(P)});

    auto sol = solve_conjugator_equation(P, Z);
    if (!sol) {
      return std::nullopt;
    }
    if (solution) {
      *solution = *sol;
    }
    Word const& W = sol->W;
    for (Word const& local : {multiply({W, Word::a(), invert(W)}),
                              multiply({invert(W), Word::a(), W})}) {
      Word z = apply(B.alpha, local);
      if (apply(psi, z) == z) {
        return z;
      }
    }
    throw std::logic_error("fix_from_mofp: neither orientation of the solution "
                           + to_string(W) + " is fixed");
  }

  FixResult fix(Endomorphism const& psi, SearchBudget budget) {
    FixResult r;
    switch (classify_endo(psi)) {
      case EndoClass::NonInjective:
        r = fix_non_injective(psi);
        break;
      case EndoClass::Automorphism:
        r = automorphism_fallback(psi, budget.max_len);
        break;
      case EndoClass::NonSurjectiveMono: {
        r.kind  = EndoClass::NonSurjectiveMono;
        r.mofix = mofix(psi, budget);
        if (r.mofix->status == MOFixStatus::Inconclusive) {
          r.status = FixStatus::Inconclusive;
          return r;
        }
        try {
          for (auto const& c : r.mofix->classes) {
            ConjugatorSolution sol;
            if (auto z = fix_from_mofp(psi, c.rep(), &sol)) {
              r.basis.push_back(*z);
              r.conjugator = sol;
              break;
            }
          }
        } catch (SearchExhausted const&) {
          r.basis.clear();
          r.conjugator.reset();
          r.status = FixStatus::Inconclusive;
        }
        break;
      }
    }
    assert_fixed(psi, r.basis);
    return r;
  }

  FixResult stable_image(Endomorphism const& psi, SearchBudget budget) {
    if (is_surjective(psi)) {
      FixResult r;
      r.kind  = EndoClass::Automorphism;
      r.basis = {Word::a(), Word::b()};
      return r;
    }
    return fix(endo_power(psi, 2), budget);
  }

  std::vector<Word> brute_fix_oracle(Endomorphism const& psi, std::int64_t max_len) {
    std::array<std::vector<Letter>, 4> images{
        psi.image_a.letters(), invert(psi.image_a).letters(),
        psi.image_b.letters(), invert(psi.image_b).letters()};
    std::vector<Word>   found;
    std::vector<Letter> w;
    std::vector<Letter> img;

    // Words of one length at a time, so the output is shortlex.
    auto search = [&](auto&& self, std::int64_t depth) -> void {
      if (depth == 0) {
        if (img == w) {
          found.push_back(Word::from_letters(w));
        }
        return;
      }
      for (Letter y = 0; y < 4; ++y) {
        if (!w.empty() && y == letter::inverse(w.back())) {
          continue;
        }
        std::vector<Letter> popped;
        std::size_t         pushed = 0;
        for (Letter z : images[y]) {
          if (pushed == 0 && !img.empty() && img.back() == letter::inverse(z)) {
            popped.push_back(img.back());
            img.pop_back();
          } else {
            img.push_back(z);
            ++pushed;
          }
        }
        w.push_back(y);
        self(self, depth - 1);
        w.pop_back();
        img.resize(img.size() - pushed);
        img.insert(img.end(), popped.rbegin(), popped.rend());
      }
    };
    for (std::int64_t len = 1; len <= max_len; ++len) {
      search(search, len);
    }
    return found;
  }

}  // namespace f2fix
