// Twisted conjugacy P = phi_Z(W) a^k W^-1 for phi_Z : a -> a, b -> Z.

#ifndef F2FIX_TWISTED_HPP_
#define F2FIX_TWISTED_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "f2fix/words.hpp"

namespace f2fix {

  struct TwistedInstance {
    Word         P;
    Word         Z;
    std::int64_t k = 0;
  };

  //! Z = Z0^-1 Z1 Z0 a^q, reduced as written, with Z0^-1 Z1 Z0 beginning and
  //! ending in b-syllables. shift is the leading a-exponent q0 that was moved
  //! to the end.
  struct ZDecomposition {
    Word         Z0;
    Word         Z1;
    std::int64_t q     = 0;
    std::int64_t shift = 0;
  };

  //! Thrown when a search runs past its node budget.
  class SearchExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! The endomorphism a -> a, b -> Z.
  Endomorphism phi_Z(Word const& Z);

  //! (P, a^q0 Z', k) -> (a^-q0 P, Z' a^q0, k - q0). Solutions W are shared.
  //! Throws std::invalid_argument when Z is a power of a.
  std::pair<TwistedInstance, ZDecomposition> normalize_instance(Word const&  P,
                                                                Word const&  Z,
                                                                std::int64_t k);

  //! Bound on the number of syllables of a b-ending solution, for a
  //! normalized instance.
  std::int64_t syllable_count_bound(Word const&           P,
                                    ZDecomposition const& Z,
                                    std::int64_t          k);

  //! |Z|(s + 2) + |P|.
  std::int64_t syllable_length_bound(Word const& P, Word const& Z, std::int64_t s);

  bool check_twisted(Word const& P, Word const& Z, std::int64_t k, Word const& W);

  //! The solution ending in a b-syllable, or the empty word when P = a^k.
  //! Throws std::invalid_argument unless phi_Z is injective and not
  //! surjective, and SearchExhausted when max_nodes is reached.
  std::optional<Word> solve_twisted(Word const&  P,
                                    Word const&  Z,
                                    std::int64_t k,
                                    std::int64_t max_nodes = 4'000'000);

  struct ConjugatorSolution {
    Word         W;
    std::int64_t k = 0;
  };

  //! Some (W, k) with P = phi_Z(W) a^k W^-1.
  std::optional<ConjugatorSolution> solve_conjugator_equation(Word const& P,
                                                              Word const& Z);

  //! Shortlex-first W with |W| <= max_len and P = phi_Z(W) a^k W^-1.
  std::optional<Word> brute_twisted_oracle(Word const&  P,
                                           Word const&  Z,
                                           std::int64_t k,
                                           std::int64_t max_len);

}  // namespace f2fix

#endif  // F2FIX_TWISTED_HPP_
