// The action of an endomorphism on the abelianization Z^2.

#ifndef F2FIX_ABELIANIZATION_HPP_
#define F2FIX_ABELIANIZATION_HPP_

#include <cstdint>
#include <optional>
#include <utility>

#include "f2fix/words.hpp"

namespace f2fix {

  //! Row 1 holds the exponent sums of the image of a, row 2 those of the
  //! image of b. Vectors act on the left: (σa(w), σb(w)) M is the exponent
  //! vector of φ(w).
  struct IntMat2 {
    std::int64_t m11 = 0, m12 = 0, m21 = 0, m22 = 0;

    bool operator==(IntMat2 const&) const = default;
  };

  IntMat2      multiply(IntMat2 const& x, IntMat2 const& y);
  IntMat2      matrix_of(Endomorphism const& phi);
  std::int64_t det(IntMat2 const& m);

  //! Row vector times matrix.
  std::pair<std::int64_t, std::int64_t>
  act(std::pair<std::int64_t, std::int64_t> v, IntMat2 const& m);

  //! The normalized primitive solution (p, q) of (p, q)(M - I) = 0, or
  //! nothing when det(M - I) != 0. Throws std::invalid_argument when
  //! det(M) = ±1.
  std::optional<std::pair<std::int64_t, std::int64_t>>
  solve_fixed_vector(IntMat2 const& m);

}  // namespace f2fix

#endif  // F2FIX_ABELIANIZATION_HPP_
