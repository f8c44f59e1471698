#ifndef RANKCODES_NUMERIC_HPP
#define RANKCODES_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace rankcodes {

// Cardinalities like q^{m(n-d+1)} overflow 64 bits quickly; every exact count
// in this library is a BigInt and every exact ratio a BigRat.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// ceil(a/b) for positive b
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  return (a + b - 1) / b;
}

inline BigInt ceil_rat(const BigRat& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);  // always > 0
  if (num >= 0) return ceil_div(num, den);
  return -((-num) / den);
}

inline BigInt floor_rat(const BigRat& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  if (num >= 0) return num / den;
  return -ceil_div(-num, den);
}

}  // namespace rankcodes

#endif
