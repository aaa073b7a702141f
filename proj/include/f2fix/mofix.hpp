// Maximal outer fixed points of non-surjective monomorphisms of F(a,b).

#ifndef F2FIX_MOFIX_HPP_
#define F2FIX_MOFIX_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "f2fix/words.hpp"

namespace f2fix {

  struct SearchBudget {
    std::int64_t max_p   = 6;
    std::int64_t max_len = 8;
  };

  //! psi^p(x) = g^-1 x^q g.
  struct BSIdentity {
    std::int64_t p = 0;
    std::int64_t q = 0;
    Word         x;
    Word         g;
  };

  enum class MOFixStatus { Complete, Inconclusive };

  struct MOFixReport {
    //! One class per pair {[x], [x^-1]}, sorted shortlex.
    std::vector<CyclicWord>   classes;
    MOFixStatus               status = MOFixStatus::Complete;
    std::optional<BSIdentity> witness;
  };

  //! The three shapes of psi(b) that admit a second maximal outer fixed
  //! point when psi(a) = a.
  struct SecondMofpMatch {
    enum class Form { I, II, III };
    Form         form;
    Word         y;           // representative of the second class
    Word         W;           // forms I and II
    Word         U;           // form III
    std::int64_t j   = 0;
    std::int64_t p   = 0;
    std::int64_t q   = 0;
    std::int64_t eps = 1;
    std::int64_t n   = 0;     // form II
  };

  //! Case det != ±1.
  MOFixReport mofix_case1(Endomorphism const& psi);

  //! First hit of psi^p(x) ~ x^q over p = 1..max_p (outer) and x shortlex up
  //! to max_len (inner), or nothing when the budget is exhausted.
  std::optional<BSIdentity> bs_identity_search(Endomorphism const& psi,
                                               SearchBudget        budget = {});

  std::optional<SecondMofpMatch> match_second_mofp(Endomorphism const& phi);
  std::optional<Word>            classify_second_mofp(Endomorphism const& phi);

  //! Case det = ±1.
  MOFixReport mofix_case2(Endomorphism const& psi, SearchBudget budget = {});

  //! Throws std::invalid_argument unless psi is injective and not
  //! surjective.
  MOFixReport mofix(Endomorphism const& psi, SearchBudget budget = {});

  //! All classes [w], 1 <= |w| <= max_len, with psi(w) ~ w and w not a
  //! proper power, up to inversion and sorted shortlex.
  std::vector<CyclicWord> brute_mofix_oracle(Endomorphism const& psi,
                                             std::int64_t        max_len);

}  // namespace f2fix

#endif  // F2FIX_MOFIX_HPP_
