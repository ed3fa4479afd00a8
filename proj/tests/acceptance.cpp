// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failures.  Every exact claim is checked with rational arithmetic; the
// asymptotic gap checks use the frozen tolerances from identity_analysis.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <vector>

#include "sumsetlab/closed_forms.hpp"
#include "sumsetlab/identity_analysis.hpp"

using namespace sumsetlab;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void criterion(int index, const char* label, const std::function<bool()>& fn) {
  const auto start = Clock::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::printf("[FAIL] C%-2d %s (exception: %s)\n", index, label, e.what());
    ++g_failures;
    return;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::printf("[%s] C%-2d %s (%.0f ms)\n", ok ? "PASS" : "FAIL", index, label,
              ms);
  if (!ok) ++g_failures;
}

// P(value k attained as a pair sum) by enumerating the only membership bits
// that matter, 0..k.
Rational attainment_by_enumeration(int k) {
  const std::int64_t total = 1ll << (k + 1);
  std::int64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
  for (std::int64_t v = 0; v < total; ++v) {
    if ((sum_bits64(static_cast<std::uint64_t>(v)) >> k) & 1u) ++hits;
  }
  return Rational(BigInt(hits), BigInt(total));
}

ExactPmf fundamental_diff_pmf(int n) {
  return exact_pmf({Ensemble::ZeroEnd, Kind::Diff, PresetName::DiffHalf, n});
}

bool c1_single_value_closed_form() {
  for (int k = 0; k <= 24; ++k) {
    if (prob_sum_infinite(k) != attainment_by_enumeration(k)) return false;
  }
  return true;
}

bool c2_conditional_ratio() {
  if (cond_prob_closed(1) != Rational(1, 2)) return false;
  if (cond_prob_closed(2) != Rational(1)) return false;
  if (cond_prob_closed(3) != Rational(3, 5)) return false;
  for (int k = 1; k <= 24; ++k) {
    const Rational expected =
        joint_event_prob_oracle(k) / prob_sum_infinite(k - 1);
    if (cond_prob_closed(k) != expected) return false;
  }
  return true;
}

bool c3_recursion_equals_closed_form() {
  const TSequence seq = t_recursive(40);
  if (seq.values[0] != Rational(1, 4)) return false;
  if (seq.values[1] != Rational(1, 4)) return false;
  for (int k = 2; k <= 40; ++k) {
    if (seq.values[static_cast<std::size_t>(k) - 1] != t_closed(k)) {
      return false;
    }
  }
  return true;
}

bool c4_top_bin_closed_forms() {
  for (int n = 5; n <= 22; ++n) {
    const ExactPmf pmf = fundamental_diff_pmf(n);
    const TailValues tv = tail_closed_forms(n);
    if (tv.p_n2 != pmf.prob_rational(static_cast<std::size_t>(n - 2)) ||
        tv.p_n3 != pmf.prob_rational(static_cast<std::size_t>(n - 3)) ||
        tv.p_n4 != pmf.prob_rational(static_cast<std::size_t>(n - 4)) ||
        tv.p_n5 != pmf.prob_rational(static_cast<std::size_t>(n - 5))) {
      return false;
    }
  }
  return true;
}

bool c5_difference_tail_witnesses() {
  const std::vector<int> clean{1, 2, 3, 5, 9};
  for (int n = 1; n <= 22; ++n) {
    const ExactPmf pmf = fundamental_diff_pmf(n);
    const TailReport rep = tail_report(pmf);
    const bool expect_clean =
        std::find(clean.begin(), clean.end(), n) != clean.end();
    if (rep.witnesses.empty() != expect_clean) return false;
    if (n >= 11) {
      const int m = n - 4;
      if (std::find(rep.witnesses.begin(), rep.witnesses.end(), m) ==
          rep.witnesses.end()) {
        return false;
      }
      const Rational lift =
          pmf.prob_rational(static_cast<std::size_t>(m)) -
          pmf.prob_rational(static_cast<std::size_t>(m) - 1);
      if (lift < Rational(BigInt(n - 10),
                          pow2(static_cast<unsigned>(n - 1)))) {
        return false;
      }
    }
  }
  return true;
}

bool c6_extreme_window_independence() {
  return independence_gap(16) == Rational(0) &&
         independence_gap(24) == Rational(0);
}

bool c7_middle_window_decay() {
  // The decay factor steps down only at every other multiple of 8, so
  // consecutive checkpoints need not be monotone (exact values: 247/256,
  // 7649/8192, 15766073/16777216).  Later checkpoints must sit strictly
  // below the first.
  const MiddleMass a = middle_mass(8);
  const MiddleMass b = middle_mass(16);
  const MiddleMass c = middle_mass(24);
  for (const MiddleMass& mm : {a, b, c}) {
    const Rational cap = mm.bound < 1 ? mm.bound : Rational(1);
    if (mm.prob > cap) return false;
  }
  return b.prob < a.prob && c.prob < a.prob;
}

bool c8_convolution_rules() {
  for (ConvolutionRule r : all_rules()) {
    const GapReport at10 = convolution_check(r, 10);
    const GapReport at20 = convolution_check(r, 20);
    if (!(at20.tv < at10.tv)) return false;
    if (at20.tv_gap() > frozen_tolerance(r)) return false;
  }
  const ExactPmf minima = min_element_pmf(12);
  for (int i = 0; i < 12; ++i) {
    if (minima.prob_rational(static_cast<std::size_t>(i)) !=
        Rational(BigInt(1), pow2(static_cast<unsigned>(i + 1)))) {
      return false;
    }
  }
  return minima.counts[12] == 1;
}

bool c9_halfline_experiments() {
  EnumOptions one;
  one.workers = 1;
  EnumOptions three;
  three.workers = 3;
  const ExactPmf base = halfline_sum_experiment(one);
  const ExactPmf rerun = halfline_sum_experiment(one);
  const ExactPmf wide = halfline_sum_experiment(three);
  if (base.counts != rerun.counts || base.counts != wide.counts) return false;
  if (base.total() != (1ull << 19)) return false;
  // The maximal bin is hit only by {0}, whose sumset is {0}.
  if (base.max_support() != 19 || base.counts[19] != 1) return false;
  const std::array<int, 1> zero_elems{0};
  const int zero_only =
      missing_count(sumset(make_subset(zero_elems, 20)), {0, 19});
  if (zero_only != 19) return false;

  for (int n = 1; n <= 9; ++n) {
    const GapReport first =
        halfline_check(n, HalflineVariant::LimitSeries, Method::Exact, {},
                       one);
    const GapReport second =
        halfline_check(n, HalflineVariant::LimitSeries, Method::Exact, {},
                       three);
    if (first.lhs != second.lhs || first.rhs != second.rhs ||
        first.tv != second.tv) {
      return false;
    }
  }
  return true;
}

bool c10_shifted_window_gap() {
  const GapReport at6 = halfline_check(6, HalflineVariant::ShiftedWindow);
  const GapReport at12 = halfline_check(12, HalflineVariant::ShiftedWindow);
  if (!(at12.tv < at6.tv)) return false;
  return at12.tv_gap() <= frozen_tolerance_shifted_window();
}

bool c11_monte_carlo_fidelity() {
  const DistQuery q{Ensemble::Free, Kind::Sum, PresetName::All, 12};
  const std::uint64_t samples = 1'000'000;
  const std::uint64_t seed = 2026;
  const ExactPmf exact = exact_pmf(q);

  McOptions one;
  one.workers = 1;
  const EstimatedPmf base = mc_pmf(q, samples, seed, one);
  const EstimatedPmf rerun = mc_pmf(q, samples, seed, one);
  McOptions four;
  four.workers = 4;
  const EstimatedPmf split = mc_pmf(q, samples, seed, four);
  if (base.hits != rerun.hits || base.hits != split.hits) return false;

  for (std::size_t m = 0; m < exact.counts.size(); ++m) {
    const double p = exact.prob(m);
    if (exact.counts[m] == 0) {
      if (base.hits[m] != 0) return false;
      continue;
    }
    const double se_exact =
        std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    const double se = std::max(base.std_err(m), se_exact);
    if (std::abs(base.p_hat(m) - p) > 4.0 * se) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "single-value attainment closed form vs enumeration",
            c1_single_value_closed_form);
  criterion(2, "conditional attainment ratio identity", c2_conditional_ratio);
  criterion(3, "window recursion equals closed form",
            c3_recursion_equals_closed_form);
  criterion(4, "top-bin closed forms match exact enumeration",
            c4_top_bin_closed_forms);
  criterion(5, "difference tail witness lists and lift bound",
            c5_difference_tail_witnesses);
  criterion(6, "extreme windows exactly independent",
            c6_extreme_window_independence);
  criterion(7, "middle window mass decays under its bound",
            c7_middle_window_decay);
  criterion(8, "convolution rules shrink below frozen tolerances",
            c8_convolution_rules);
  criterion(9, "half-line truncation experiments deterministic",
            c9_halfline_experiments);
  criterion(10, "shifted-window gap shrinks below frozen tolerance",
            c10_shifted_window_gap);
  criterion(11, "monte carlo matches exact within four standard errors",
            c11_monte_carlo_fidelity);
  return g_failures;
}
