#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sumsetlab {

// All probability identities are evaluated in exact rational arithmetic;
// doubles appear only at the reporting boundary.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

inline BigInt ipow(const BigInt& base, unsigned k) {
  return boost::multiprecision::pow(base, k);
}

inline Rational rpow(const Rational& base, unsigned k) {
  return Rational(ipow(numerator(base), k), ipow(denominator(base), k));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rabs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace sumsetlab
