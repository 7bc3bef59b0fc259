#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfop {

/// Exact rational in lowest terms. All arithmetic in the library happens here.
using Scalar = mpq_class;

/// Integer counts (automorphisms, factorials) that may outgrow 64 bits.
using Integer = mpz_class;

/// Thrown for malformed textual input anywhere in the library.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "n", "-n" or "n/d" into a canonical rational.
Scalar parse_scalar(std::string_view text);

/// Always "num/den", denominator positive, e.g. "2/1", "-1/3".
std::string to_fraction_string(const Scalar& s);

/// "2", "-1/3": integers without the denominator.
std::string to_string(const Scalar& s);

Integer factorial(unsigned n);

}  // namespace hopfop
