#ifndef CONIKA_RATIONAL_HPP_
#define CONIKA_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace conika {

using Rational = boost::multiprecision::cpp_rational;

/// "num/den" in lowest terms, without "/1" for integers.
inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double rational_to_double(const Rational& r) {
  return r.convert_to<double>();
}

inline Rational rational_pow(Rational base, std::uint32_t e) {
  Rational r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace conika

#endif  // CONIKA_RATIONAL_HPP_
