// Primitive elements and changes of free basis in F(a,b).

#ifndef F2FIX_PRIMITIVES_HPP_
#define F2FIX_PRIMITIVES_HPP_

#include <cstdint>

#include "f2fix/words.hpp"

namespace f2fix {

  //! A free basis {x, t} together with the automorphism alpha : a -> x,
  //! b -> t and its inverse.
  struct BasisPair {
    Word         x;
    Word         t;
    Endomorphism alpha;
    Endomorphism alpha_inv;
  };

  //! A primitive word with exponent sums (p, q), obtained from a by the
  //! Nielsen moves of the subtractive Euclidean algorithm. Throws
  //! std::invalid_argument unless gcd(p, q) = 1.
  Word construct_primitive(std::int64_t p, std::int64_t q);

  //! The basis produced alongside construct_primitive(p, q).
  BasisPair construct_basis(std::int64_t p, std::int64_t q);

  bool is_primitive(Word const& w);

  //! A basis whose first element is exactly x. Throws std::invalid_argument
  //! when x is not primitive.
  BasisPair complete_to_basis(Word const& x);

  //! The basis {x, t}, with the inverse automorphism computed. Throws
  //! std::invalid_argument when {x, t} is not a free basis.
  BasisPair basis_from_pair(Word const& x, Word const& t);

  //! phi written in the coordinates of B: alpha_inv . phi . alpha.
  Endomorphism change_basis(Endomorphism const& phi, BasisPair const& B);

}  // namespace f2fix

#endif  // F2FIX_PRIMITIVES_HPP_
