// Fixed subgroups and stable images of endomorphisms of F(a,b).

#ifndef F2FIX_ENGINE_HPP_
#define F2FIX_ENGINE_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "f2fix/mofix.hpp"
#include "f2fix/twisted.hpp"
#include "f2fix/words.hpp"

namespace f2fix {

  enum class EndoClass { NonInjective, Automorphism, NonSurjectiveMono };

  enum class FixStatus { Complete, Inconclusive, AutFallbackIncomplete };

  std::string_view to_string(EndoClass c);
  std::string_view to_string(FixStatus s);

  struct FixResult {
    std::vector<Word> basis;
    FixStatus         status = FixStatus::Complete;
    EndoClass         kind   = EndoClass::NonSurjectiveMono;
    //! Set when a maximal outer fixed point search ran.
    std::optional<MOFixReport> mofix;
    //! The solution (W, k) that produced the basis element, if any.
    std::optional<ConjugatorSolution> conjugator;
  };

  EndoClass classify_endo(Endomorphism const& psi);

  FixResult fix_non_injective(Endomorphism const& psi);

  //! A generator of Fix(psi) conjugate to x, if there is one. The solution of
  //! the twisted equation is stored in *solution when non-null.
  std::optional<Word> fix_from_mofp(Endomorphism const&  psi,
                                    Word const&          x,
                                    ConjugatorSolution*  solution = nullptr);

  FixResult fix(Endomorphism const& psi, SearchBudget budget = {});

  //! A basis of the intersection of the images psi^i(F).
  FixResult stable_image(Endomorphism const& psi, SearchBudget budget = {});

  //! All w with 1 <= |w| <= max_len and psi(w) = w, in shortlex order.
  std::vector<Word> brute_fix_oracle(Endomorphism const& psi, std::int64_t max_len);

}  // namespace f2fix

#endif  // F2FIX_ENGINE_HPP_
