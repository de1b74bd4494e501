#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "degset/eps.hpp"

namespace degset::ff {

/// Dense polynomial over F_p, coefficients low degree first, no trailing
/// zeros (the zero polynomial is the empty vector).
using Coeffs = std::vector<Int>;

class PrimePolynomial {
 public:
  /// Coefficients are reduced mod p. Throws DomainError if p is not prime,
  /// ValidationError if the result is not monic of degree >= 1.
  PrimePolynomial(Int p, Coeffs low_first);

  Int p() const { return p_; }
  const Coeffs& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

 private:
  Int p_;
  Coeffs c_;
};

/// Reads either a coefficient list, highest degree first ("1,0,0,2,0,0,2"),
/// or an expression in x ("x^6 + 2x^3 + 2", "x^2-1"). Throws ParseError.
PrimePolynomial parse_polynomial(Int p, std::string_view text);

std::string to_string(const PrimePolynomial& f);

bool is_squarefree(const PrimePolynomial& f);

/// Degrees of the irreducible factors of a squarefree f, ascending, by
/// distinct-degree splitting. Throws DomainError if f is not squarefree.
std::vector<Int> factor_degrees(const PrimePolynomial& f);

}  // namespace degset::ff
