#include "f2fix/abelianization.hpp"

#include <numeric>
#include <stdexcept>

namespace f2fix {

  IntMat2 multiply(IntMat2 const& x, IntMat2 const& y) {
    return {x.m11 * y.m11 + x.m12 * y.m21,
            x.m11 * y.m12 + x.m12 * y.m22,
            x.m21 * y.m11 + x.m22 * y.m21,
            x.m21 * y.m12 + x.m22 * y.m22};
  }

  IntMat2 matrix_of(Endomorphism const& phi) {
    SyllableStats sa = stats(phi.image_a), sb = stats(phi.image_b);
    return {sa.sigma_a, sa.sigma_b, sb.sigma_a, sb.sigma_b};
  }

  std::int64_t det(IntMat2 const& m) {
    return m.m11 * m.m22 - m.m12 * m.m21;
  }

  std::pair<std::int64_t, std::int64_t>
  act(std::pair<std::int64_t, std::int64_t> v, IntMat2 const& m) {
    return {v.first * m.m11 + v.second * m.m21,
            v.first * m.m12 + v.second * m.m22};
  }

  std::optional<std::pair<std::int64_t, std::int64_t>>
  solve_fixed_vector(IntMat2 const& m) {
    std::int64_t d = det(m);
    if (d == 1 || d == -1) {
      throw std::invalid_argument(
          "solve_fixed_vector: determinant is ±1, expected the other case");
    }
    IntMat2 shifted{m.m11 - 1, m.m12, m.m21, m.m22 - 1};
    if (det(shifted) != 0) {
      return std::nullopt;
    }
    std::int64_t p, q;
    if (m.m11 != 1 || m.m21 != 0) {
      p = -m.m21;
      q = m.m11 - 1;
    } else {
      p = m.m22 - 1;
      q = -m.m12;
    }
    // With det(M) != 1 the matrix M - I is nonzero, so one branch gives a
    // nonzero vector.
    if (p < 0 || (p == 0 && q < 0)) {
      p = -p;
      q = -q;
    }
    std::int64_t g = std::gcd(p, q);
    return std::make_pair(p / g, q / g);
  }

}  // namespace f2fix
