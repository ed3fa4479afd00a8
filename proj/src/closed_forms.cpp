#include "sumsetlab/closed_forms.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sumsetlab/bitset_core.hpp"

namespace sumsetlab {

BigInt fibonacci(int j) {
  if (j < 1) throw std::invalid_argument("fibonacci index must be >= 1");
  BigInt a = 1, b = 1;  // F_1, F_2
  for (int i = 2; i < j; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return j == 1 ? a : b;
}

Rational prob_sum_infinite(int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const Rational q(3, 4);
  if (k % 2 == 1) {
    return 1 - rpow(q, static_cast<unsigned>((k + 1) / 2));
  }
  return 1 - rpow(q, static_cast<unsigned>(k / 2)) / 2;
}

Rational joint_event_prob_oracle(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > 30) {
    throw TooLarge("joint oracle enumerates 2^(k+1) subsets; k=" +
                   std::to_string(k) + " > 30");
  }
  const std::uint64_t total = 1ull << (k + 1);
  const std::uint64_t want = (1ull << k) | (1ull << (k - 1));
  std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(total); ++v) {
    const std::uint64_t s = sum_bits64(static_cast<std::uint64_t>(v));
    count += (s & want) == want;
  }
  return Rational(BigInt(count), pow2(static_cast<unsigned>(k + 1)));
}

Rational t_closed(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const BigInt f = fibonacci(k + 2);
  const BigInt p3 = ipow(3, static_cast<unsigned>(k / 2));
  const BigInt den = pow2(static_cast<unsigned>(k + 1));
  const int sign = (k % 2 == 0) ? 1 : -1;
  return 1 + Rational(f, den) - Rational(p3 * (4 - sign), den);
}

TSequence t_recursive(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  TSequence seq;
  seq.values.resize(static_cast<std::size_t>(k));
  const Rational quarter(1, 4);
  seq.values[0] = quarter;
  if (k == 1) return seq;
  seq.values[1] = quarter;
  const Rational q(3, 4);
  for (int j = 3; j <= k; ++j) {
    // T_j depends on T_{j-1}, T_{j-2} and the gap index j (= k - i).
    const int sign = (j % 2 == 0) ? 1 : -1;
    const Rational forcing =
        Rational(3 + sign, 24) * rpow(q, static_cast<unsigned>(j / 2));
    seq.values[static_cast<std::size_t>(j) - 1] =
        seq.values[static_cast<std::size_t>(j) - 2] / 2 +
        seq.values[static_cast<std::size_t>(j) - 3] / 4 - forcing + quarter;
  }
  return seq;
}

Rational cond_prob_closed(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const BigInt p3 = ipow(3, static_cast<unsigned>(k / 2));
  const int sign = (k % 2 == 0) ? 1 : -1;
  const BigInt num = fibonacci(k + 2) + sign * p3 - pow2(static_cast<unsigned>(k + 1));
  const BigInt den = 2 * (pow2(static_cast<unsigned>(k)) - p3);
  if (den == 0) {
    throw DegenerateDenominator("2^k == 3^(k/2) at k=" + std::to_string(k));
  }
  return 2 + Rational(num, den);
}

}  // namespace sumsetlab
