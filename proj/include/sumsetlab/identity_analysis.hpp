#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sumsetlab/exact_enum.hpp"
#include "sumsetlab/monte_carlo.hpp"

namespace sumsetlab {

enum class Method { Exact, Mc };

const char* method_name(Method m);

struct McParams {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
};

// The seven approximate factorization rules.  The two "a" rules compare a
// full-range missing count against the sum of two independent copies of its
// restriction to one half; the five "b" rules compare neighbouring ensembles,
// where forcing one more element removes a geometric(1/2) number of missing
// values, two at a time.
enum class ConvolutionRule { T2aR, T2aRpp, T2b1, T2b2, T2b3, T2b4, T2b5 };

const std::vector<ConvolutionRule>& all_rules();
const char* rule_name(ConvolutionRule r);
bool rule_from_name(std::string_view name, ConvolutionRule& out);

// Reading of the difference-range used by the difference rules (t2b-4/5):
// Full counts missing differences over [-(n-1),n-1], Half over [0,n-1].
// Full is the default; its gaps shrink with n while Half's stall.
enum class DiffRange { Full, Half };

struct RuleSpec {
  DistQuery lhs;
  DistQuery rhs;
  // false: full self-convolution of rhs.  true: geometric mixing
  // RHS(m) = sum_{i<=m/2} 2^{-(i+1)} P(rhs = m-2i).
  bool geometric_mix = false;
};

RuleSpec rule_queries(ConvolutionRule r, int n, DiffRange range = DiffRange::Full);

// Aligned per-m comparison of two (sub-)probability vectors.  `tail` is RHS
// mass beyond the table (nonzero only under geometric mixing) and is included
// in `tv`, the exact total-variation distance (half the L1 gap).
struct GapReport {
  std::string rule;
  int n = 0;
  Method method = Method::Exact;
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  Rational tail = 0;
  Rational tv = 0;

  [[nodiscard]] double tv_gap() const { return to_double(tv); }
  [[nodiscard]] std::vector<double> per_m_gaps() const;
};

GapReport convolution_check(ConvolutionRule r, int n,
                            Method method = Method::Exact,
                            const McParams& mc = {},
                            const EnumOptions& opts = {},
                            DiffRange range = DiffRange::Full);

// P(at least one missing sum in the middle window M) for free subsets,
// along with the union bound (2n - 2q - 1)(3/4)^(floor(q/2)), q = floor(n/8).
// The probability never exceeds min(1, bound).
struct MiddleMass {
  Rational prob;
  Rational bound;
};

MiddleMass middle_mass(int n, Method method = Method::Exact,
                       const McParams& mc = {}, const EnumOptions& opts = {});

// Max over cells of |P(m1,m2) - P(m1)P(m2)| for the Xs and Xl missing-sum
// counts of free subsets.  Exactly zero whenever the two windows depend on
// disjoint membership bits (all n with 2*floor(n/8) <= n), trivially zero
// when Xs is empty.
Rational independence_gap(int n, const EnumOptions& opts = {});

// Closed forms for the four topmost bins of the fundamental difference
// distribution: p_n(m) = P(zero-end subsets of {0..n-1} miss exactly m
// differences in [0,n-1]).
struct TailValues {
  int n = 0;
  Rational p_n2;  // p_n(n-2)
  Rational p_n3;  // p_n(n-3)
  Rational p_n4;  // p_n(n-4)
  Rational p_n5;  // p_n(n-5)
};

TailValues tail_closed_forms(int n);

// Monotonicity structure of a pmf after its mode.  The mode m_star is the
// smallest m attaining the maximum.  Witnesses are m > m_star with
// P(m) > P(m-1); ties additionally break strict decrease.  Trailing
// zero-probability bins beyond the support are ignored.
struct TailReport {
  int m_star = 0;
  std::vector<int> witnesses;
  bool nonincreasing_after_mode = true;
  bool strictly_decreasing_after_mode = true;
};

TailReport tail_report(const ExactPmf& pmf);

// Two half-line comparisons built from zero-end ensembles:
//   ShiftedWindow: missing differences in [0,n-1] at size n, versus missing
//                  differences in [n,2n-1] at size 2n (windows at the same
//                  distance from the forced endpoints).
//   LimitSeries:   missing differences in [0,n] at size 2n (a truncation of
//                  the half-line ensemble), versus the fundamental p_n.
enum class HalflineVariant { ShiftedWindow, LimitSeries };

GapReport halfline_check(int n, HalflineVariant variant,
                         Method method = Method::Exact,
                         const McParams& mc = {},
                         const EnumOptions& opts = {});

// Missing sums in [0,19] over all subsets of {0,...,19} containing 0 -- a
// faithful truncation of the half-line ensemble, since elements above 19
// cannot produce sums below 20.  The largest attainable missing count is 19,
// achieved only by the subset {0}.
ExactPmf halfline_sum_experiment(const EnumOptions& opts = {});

// A distribution family scanned for post-mode monotonicity.  witness_free_n
// lists every n <= verified_to whose tail has no post-mode rise (checked
// against exact enumeration); beyond verified_to the expectation falls back
// to the family's asymptotic behaviour, clean_for_large_n.
struct MonotonicityCase {
  std::string label;
  Ensemble ensemble;
  Kind kind;
  PresetName interval;
  std::vector<int> witness_free_n;
  int verified_to = 0;
  bool clean_for_large_n = false;

  [[nodiscard]] bool expected_blip(int n) const;
};

// Six families whose tails carry a blip for every n outside a short list:
// missing differences in [0,n-1] and missing sums in [0,2n-2], for each of
// the three ensembles.
const std::vector<MonotonicityCase>& decreasing_tail_cases();

// Three families of missing sums in [0,n-1].  The first two are blip-free
// once n leaves a small window; the third keeps a blip at the all-missing
// bin for every even n (2^(n/2) subsets miss everything, one fewer misses
// all but one value).
const std::vector<MonotonicityCase>& unimodal_sum_cases();

struct ScanRow {
  std::string label;
  int n = 0;
  TailReport report;
  bool expected_blip = false;
  bool agrees = false;  // witness present <=> blip expected
};

std::vector<ScanRow> scan_case(const MonotonicityCase& c, int n_lo, int n_hi,
                               const EnumOptions& opts = {});

// Acceptance tolerances for the asymptotic identities, frozen from exact
// calibration runs (rules at n in {10,14,20}; shifted window at n in
// {6,9,12}).  Never derived from the quantity under test at run time.
double frozen_tolerance(ConvolutionRule r);
double frozen_tolerance_shifted_window();

}  // namespace sumsetlab
