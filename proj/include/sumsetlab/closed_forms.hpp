#pragma once

#include <vector>

#include "sumsetlab/errors.hpp"
#include "sumsetlab/rational.hpp"

namespace sumsetlab {

// F_1 = F_2 = 1.  Exact for any j >= 1; the integer type is unbounded.
BigInt fibonacci(int j);

// Probability that k lies in the sumset of a uniform random subset of the
// nonnegative integers (each element kept independently with probability
// 1/2).  Equals 1 - (3/4)^((k+1)/2) for odd k and 1 - (3/4)^(k/2)/2 for
// even k.
Rational prob_sum_infinite(int k);

// P(k-1 and k both lie in the sumset of a uniform random subset of
// {0,...,k}), by exhaustive enumeration of the 2^(k+1) membership choices
// for 0..k (elements above k cannot contribute to sums <= k).
// Throws TooLarge for k > 30.
Rational joint_event_prob_oracle(int k);

// Closed form for the same joint probability, via Fibonacci numbers:
//   T_k = 1 + F_{k+2}/2^{k+1} - 3^{floor(k/2)} (4 - (-1)^k) / 2^{k+1}.
Rational t_closed(int k);

// T_1..T_k computed by the two-term backward recursion with inhomogeneous
// term -(3 + (-1)^(k-i)) (3/4)^(floor((k-i)/2)) / 24 + 1/4 and base values
// T_1 = T_2 = 1/4.  values[j-1] holds T_j.
struct TSequence {
  std::vector<Rational> values;

  [[nodiscard]] const Rational& final() const { return values.back(); }
};

TSequence t_recursive(int k);

// P(k in sumset | k-1 in sumset) for the infinite random subset:
//   2 + (F_{k+2} + (-1)^k 3^{floor(k/2)} - 2^{k+1})
//       / (2 (2^k - 3^{floor(k/2)})).
// Throws DegenerateDenominator if the denominator vanishes (it cannot for
// k >= 1, since 2^k = 3^(floor(k/2)) has no solutions there).
Rational cond_prob_closed(int k);

}  // namespace sumsetlab
