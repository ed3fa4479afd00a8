#pragma once

#include <stdexcept>

namespace sumsetlab {

// Argument outside the universe {0,...,n-1}.
class ElementOutOfRange : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Universe size not in [1, kMaxUniverse].
class BadUniverse : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Interval exceeds the valid value range for the pair-set kind.
class IntervalOutOfRange : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Distribution request whose pieces do not fit together.
class BadQuery : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Monte Carlo request with zero samples.
class ZeroSamples : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Work size exceeds the enumeration guard.
class TooLarge : public std::length_error {
  using std::length_error::length_error;
};

// Denominator of a closed form collapsed to zero; unreachable for valid k.
class DegenerateDenominator : public std::logic_error {
  using std::logic_error::logic_error;
};

// Bad flag combination or malformed flag value at the CLI boundary.
class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace sumsetlab
