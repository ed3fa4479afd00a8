#include "sumsetlab/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>

#include "CLI11.hpp"
#include "sumsetlab/closed_forms.hpp"
#include "sumsetlab/io.hpp"

namespace sumsetlab::cli {

namespace {

using io::Json;

struct Options {
  std::string ensemble = "free";
  std::string kind = "sum";
  std::string interval = "all";
  int n = 0;
  std::string n_range;
  std::string method = "exact";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int workers = 0;
  std::string rule;
  std::string variant;
  std::string which;
  int k = -1;
  std::string format = "json";
  std::string out;
};

int guard_from_env() {
  const char* v = std::getenv("SUMSETLAB_GUARD_LOG2");
  if (v == nullptr || *v == '\0') return kDefaultGuardLog2;
  char* end = nullptr;
  const long g = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || g < 0 || g > 62) {
    throw UsageError("SUMSETLAB_GUARD_LOG2 must be an integer in [0,62]");
  }
  return static_cast<int>(g);
}

EnumOptions enum_options(const Options& o) {
  EnumOptions opts;
  opts.workers = o.workers;
  opts.guard_log2 = guard_from_env();
  return opts;
}

Ensemble parse_ensemble(const std::string& s) {
  if (s == "free") return Ensemble::Free;
  if (s == "zero") return Ensemble::Zero;
  if (s == "zero-end") return Ensemble::ZeroEnd;
  throw UsageError("unknown ensemble '" + s + "'");
}

Kind parse_kind(const std::string& s) {
  if (s == "sum") return Kind::Sum;
  if (s == "diff") return Kind::Diff;
  throw UsageError("unknown kind '" + s + "'");
}

std::variant<PresetName, IntervalSpec> parse_interval(const std::string& s) {
  if (s == "all") return PresetName::All;
  if (s == "s") return PresetName::S;
  if (s == "l") return PresetName::L;
  if (s == "xs") return PresetName::Xs;
  if (s == "ms") return PresetName::Ms;
  if (s == "ml") return PresetName::Ml;
  if (s == "xl") return PresetName::Xl;
  if (s == "m") return PresetName::M;
  if (s == "half") return PresetName::DiffHalf;
  if (s == "full") return PresetName::DiffFull;
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    try {
      std::size_t lo_len = 0, hi_len = 0;
      const int lo = std::stoi(s.substr(0, colon), &lo_len);
      const std::string hi_str = s.substr(colon + 1);
      const int hi = std::stoi(hi_str, &hi_len);
      if (lo_len == colon && hi_len == hi_str.size()) {
        return IntervalSpec{lo, hi};
      }
    } catch (const std::exception&) {
    }
  }
  throw UsageError("bad interval '" + s +
                   "' (preset name or LO:HI with integers)");
}

std::pair<int, int> parse_n_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    try {
      std::size_t lo_len = 0, hi_len = 0;
      const int lo = std::stoi(s.substr(0, colon), &lo_len);
      const std::string hi_str = s.substr(colon + 1);
      const int hi = std::stoi(hi_str, &hi_len);
      if (lo_len == colon && hi_len == hi_str.size() && lo >= 1 && hi >= lo) {
        return {lo, hi};
      }
    } catch (const std::exception&) {
    }
  }
  throw UsageError("bad n range '" + s + "' (want A:B with 1 <= A <= B)");
}

void require_seed_for_mc(const Options& o) {
  if (o.method == "mc" && !o.seed_given) {
    throw UsageError("--method mc requires an explicit --seed");
  }
}

Method parse_method(const std::string& s) {
  if (s == "exact") return Method::Exact;
  if (s == "mc") return Method::Mc;
  throw UsageError("unknown method '" + s + "'");
}

int emit_text(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot open output file '" + o.out + "'");
  f << text;
  return 0;
}

int emit_json(const Options& o, const Json& doc) {
  return emit_text(o, doc.dump(2) + "\n");
}

Json dist_inputs(const Options& o) {
  Json j{{"ensemble", o.ensemble}, {"kind", o.kind},
         {"interval", o.interval}, {"n", o.n},
         {"method", o.method},     {"workers", o.workers}};
  if (o.method == "mc") {
    j["samples"] = o.samples;
    j["seed"] = o.seed;
  }
  return j;
}

io::CsvHeader csv_echo(const std::string& command, const Json& inputs) {
  io::CsvHeader h{{"schema_version", "1"}, {"command", command}};
  for (const auto& [key, value] : inputs.items()) {
    h.emplace_back(key, value.is_string() ? value.get<std::string>()
                                          : value.dump());
  }
  return h;
}

int handle_dist(const Options& o) {
  if (o.n < 1) throw UsageError("dist requires --n");
  require_seed_for_mc(o);
  const DistQuery q{parse_ensemble(o.ensemble), parse_kind(o.kind),
                    parse_interval(o.interval), o.n};
  const Json inputs = dist_inputs(o);
  if (o.method == "exact") {
    const ExactPmf pmf = exact_pmf(q, enum_options(o));
    if (o.format == "csv") {
      std::ostringstream ss;
      io::write_csv(ss, csv_echo("dist", inputs), pmf);
      return emit_text(o, ss.str());
    }
    return emit_json(o, io::envelope("dist", inputs,
                                     Json{{"pmf", io::pmf_json(pmf)}}));
  }
  McOptions mopts;
  mopts.workers = o.workers;
  const EstimatedPmf est = mc_pmf(q, o.samples, o.seed, mopts);
  if (o.format == "csv") {
    std::ostringstream ss;
    io::write_csv(ss, csv_echo("dist", inputs), est);
    return emit_text(o, ss.str());
  }
  return emit_json(o, io::envelope("dist", inputs,
                                   Json{{"pmf", io::pmf_json(est)}}));
}

Json scalar_formula_result(int k, const Rational& value) {
  return Json{{"k", k},
              {"value_num", io::int_or_string(numerator(value))},
              {"value_den", io::int_or_string(denominator(value))},
              {"value", to_double(value)}};
}

int handle_formula(const Options& o) {
  if (o.k < 0) throw UsageError("formula requires --k");
  if (o.format == "csv") {
    throw UsageError("csv output is only available for dist and scan");
  }
  const Json inputs{{"which", o.which}, {"k", o.k}};
  Json results;
  if (o.which == "sum-inf") {
    results = scalar_formula_result(o.k, prob_sum_infinite(o.k));
  } else if (o.which == "cond") {
    results = scalar_formula_result(o.k, cond_prob_closed(o.k));
  } else if (o.which == "t-closed") {
    results = scalar_formula_result(o.k, t_closed(o.k));
  } else if (o.which == "joint-oracle") {
    results = scalar_formula_result(o.k, joint_event_prob_oracle(o.k));
  } else if (o.which == "fib") {
    if (o.k < 1) throw UsageError("fib requires --k >= 1");
    const BigInt f = fibonacci(o.k);
    results = Json{{"k", o.k},
                   {"value_num", io::int_or_string(f)},
                   {"value_den", 1}};
  } else if (o.which == "t-rec") {
    const TSequence seq = t_recursive(o.k);
    Json values = Json::array();
    for (std::size_t j = 0; j < seq.values.size(); ++j) {
      Json v = io::rational_json(seq.values[j]);
      v["j"] = j + 1;
      v["value"] = to_double(seq.values[j]);
      values.push_back(std::move(v));
    }
    results = scalar_formula_result(o.k, seq.final());
    results["values"] = std::move(values);
  } else {
    throw UsageError(
        "unknown formula '" + o.which +
        "' (want sum-inf, cond, t-closed, t-rec, joint-oracle or fib)");
  }
  return emit_json(o, io::envelope("formula", inputs, results));
}

// Brute-force tally of smallest elements; countr_zero(mask) is the smallest
// set bit, n for the empty mask.
ExactPmf min_element_by_enumeration(int n, int guard_log2) {
  if (n > guard_log2 || n > 62) {
    throw TooLarge("min-element enumeration of 2^" + std::to_string(n) +
                   " masks exceeds guard 2^" + std::to_string(guard_log2));
  }
  ExactPmf pmf;
  pmf.n_free = n;
  pmf.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int lowest = mask == 0 ? n : std::countr_zero(mask);
    ++pmf.counts[static_cast<std::size_t>(lowest)];
  }
  return pmf;
}

int handle_check(const Options& o) {
  if (o.format == "csv") {
    throw UsageError("csv output is only available for dist and scan");
  }
  require_seed_for_mc(o);
  const Method method = parse_method(o.method);
  const McParams mc{o.samples, o.seed};
  const EnumOptions opts = enum_options(o);
  Json inputs{{"rule", o.rule}, {"method", o.method}, {"workers", o.workers}};
  if (o.n > 0) inputs["n"] = o.n;
  if (!o.variant.empty()) inputs["variant"] = o.variant;
  if (o.method == "mc") {
    inputs["samples"] = o.samples;
    inputs["seed"] = o.seed;
  }

  bool pass = false;
  Json results;
  ConvolutionRule rule;
  if (rule_from_name(o.rule, rule)) {
    if (o.n < 1) throw UsageError("check --rule " + o.rule + " requires --n");
    DiffRange range = DiffRange::Full;
    if (!o.variant.empty()) {
      if (o.variant == "half") {
        range = DiffRange::Half;
      } else if (o.variant != "full") {
        throw UsageError("--variant for " + o.rule + " must be full or half");
      }
    }
    const GapReport rep = convolution_check(rule, o.n, method, mc, opts, range);
    pass = rep.tv_gap() <= frozen_tolerance(rule);
    results = Json{{"report", io::gap_report_json(rep)},
                   {"tolerance", frozen_tolerance(rule)}};
  } else if (o.rule == "halfline") {
    if (o.n < 1) throw UsageError("check --rule halfline requires --n");
    HalflineVariant variant = HalflineVariant::ShiftedWindow;
    if (o.variant == "series") {
      variant = HalflineVariant::LimitSeries;
    } else if (!o.variant.empty() && o.variant != "shifted") {
      throw UsageError("--variant for halfline must be shifted or series");
    }
    const GapReport rep = halfline_check(o.n, variant, method, mc, opts);
    if (variant == HalflineVariant::ShiftedWindow) {
      pass = rep.tv_gap() <= frozen_tolerance_shifted_window();
      results = Json{{"report", io::gap_report_json(rep)},
                     {"tolerance", frozen_tolerance_shifted_window()}};
    } else {
      pass = true;  // the series comparison is informational
      results = Json{{"report", io::gap_report_json(rep)}};
    }
  } else if (o.rule == "middle-mass") {
    if (o.n < 1) throw UsageError("check --rule middle-mass requires --n");
    const MiddleMass mm = middle_mass(o.n, method, mc, opts);
    const Rational cap = mm.bound < 1 ? mm.bound : Rational(1);
    pass = mm.prob <= cap;
    results = io::middle_mass_json(mm);
  } else if (o.rule == "independence") {
    if (o.n < 1) throw UsageError("check --rule independence requires --n");
    const Rational gap = independence_gap(o.n, opts);
    pass = gap == 0;
    results = Json{{"gap", io::rational_json(gap)}};
  } else if (o.rule == "tails") {
    if (o.n < 5) throw UsageError("check --rule tails requires --n >= 5");
    const TailValues tv = tail_closed_forms(o.n);
    const ExactPmf pmf = exact_pmf(
        {Ensemble::ZeroEnd, Kind::Diff, IntervalSpec{0, o.n - 1}, o.n}, opts);
    const bool m2 = tv.p_n2 == pmf.prob_rational(o.n - 2);
    const bool m3 = tv.p_n3 == pmf.prob_rational(o.n - 3);
    const bool m4 = tv.p_n4 == pmf.prob_rational(o.n - 4);
    const bool m5 = tv.p_n5 == pmf.prob_rational(o.n - 5);
    pass = m2 && m3 && m4 && m5;
    results = Json{{"closed_forms", io::tail_values_json(tv)},
                   {"pmf", io::pmf_json(pmf)},
                   {"matches",
                    Json{{"p_n2", m2}, {"p_n3", m3}, {"p_n4", m4},
                         {"p_n5", m5}}}};
  } else if (o.rule == "min-element") {
    if (o.n < 1) throw UsageError("check --rule min-element requires --n");
    const ExactPmf closed = min_element_pmf(o.n);
    const ExactPmf brute = min_element_by_enumeration(o.n, opts.guard_log2);
    pass = closed.counts == brute.counts && closed.n_free == brute.n_free;
    results = Json{{"pmf", io::pmf_json(closed)},
                   {"matches_enumeration", pass}};
  } else if (o.rule == "halfline-sums") {
    const ExactPmf pmf = halfline_sum_experiment(opts);
    const bool total_ok = pmf.total() == (1ull << 19);
    const bool top_ok = pmf.max_support() == 19 && pmf.counts[19] == 1;
    // The lone subset attaining 19 missing sums is {0}: its sumset is {0}.
    const int zero_only = missing_count(
        sumset(make_subset(std::array{0}, 20)), IntervalSpec{0, 19});
    pass = total_ok && top_ok && zero_only == 19;
    const std::size_t top = static_cast<std::size_t>(pmf.max_support());
    results = Json{{"pmf", io::pmf_json(pmf)},
                   {"total_is_2_19", total_ok},
                   {"max_bin", Json{{"m", pmf.max_support()},
                                    {"count", pmf.counts[top]}}},
                   {"achiever", Json::array({0})}};
  } else {
    throw UsageError("unknown check rule '" + o.rule + "'");
  }

  results["pass"] = pass;
  const int rc = emit_json(o, io::envelope("check", inputs, results));
  return rc != 0 ? rc : (pass ? 0 : 1);
}

int handle_scan(const Options& o) {
  if (o.n_range.empty()) throw UsageError("scan requires --n-range A:B");
  const auto [lo, hi] = parse_n_range(o.n_range);
  const EnumOptions opts = enum_options(o);
  const Json inputs{{"rule", o.rule}, {"n_range", o.n_range},
                    {"workers", o.workers}};

  std::vector<ScanRow> rows;
  Json extra = Json::array();
  if (o.rule == "blips") {
    for (const MonotonicityCase& c : decreasing_tail_cases()) {
      const auto part = scan_case(c, lo, hi, opts);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  } else if (o.rule == "small-window-sums") {
    for (const MonotonicityCase& c : unimodal_sum_cases()) {
      const auto part = scan_case(c, lo, hi, opts);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  } else if (o.rule == "limit-shape") {
    // The fundamental difference distribution: emit the head of the pmf and
    // the blip height so the approach to a decreasing limit is visible.
    const MonotonicityCase& c = decreasing_tail_cases().front();
    for (int n = lo; n <= hi; ++n) {
      const ExactPmf pmf =
          exact_pmf({c.ensemble, c.kind, c.interval, n}, opts);
      ScanRow row;
      row.label = c.label;
      row.n = n;
      row.report = tail_report(pmf);
      row.expected_blip = c.expected_blip(n);
      row.agrees = !row.report.witnesses.empty() == row.expected_blip;
      Json head = Json::array();
      for (std::size_t m = 0; m < pmf.counts.size() && m <= 8; ++m) {
        head.push_back(pmf.prob(m));
      }
      double blip = 0.0;
      for (int w : row.report.witnesses) {
        blip = std::max(blip, pmf.prob(static_cast<std::size_t>(w)) -
                                  pmf.prob(static_cast<std::size_t>(w) - 1));
      }
      extra.push_back(Json{{"n", n}, {"head_probs", std::move(head)},
                           {"blip_height", blip}});
      rows.push_back(std::move(row));
    }
  } else {
    throw UsageError("unknown scan rule '" + o.rule +
                     "' (want blips, small-window-sums or limit-shape)");
  }

  if (o.format == "csv") {
    std::ostringstream ss;
    io::write_scan_csv(ss, csv_echo("scan", inputs), rows);
    return emit_text(o, ss.str());
  }
  Json results{{"rows", io::scan_rows_json(rows)}};
  if (!extra.empty()) results["series"] = std::move(extra);
  return emit_json(o, io::envelope("scan", inputs, results));
}

int handle_tail(const Options& o) {
  if (o.format == "csv") {
    throw UsageError("csv output is only available for dist and scan");
  }
  int lo, hi;
  if (!o.n_range.empty()) {
    std::tie(lo, hi) = parse_n_range(o.n_range);
  } else if (o.n >= 1) {
    lo = hi = o.n;
  } else {
    throw UsageError("tail requires --n or --n-range");
  }
  const EnumOptions opts = enum_options(o);
  Json inputs{{"workers", o.workers}};
  if (!o.n_range.empty()) {
    inputs["n_range"] = o.n_range;
  } else {
    inputs["n"] = o.n;
  }

  Json rows = Json::array();
  bool all_match = true;
  for (int n = lo; n <= hi; ++n) {
    const ExactPmf pmf = exact_pmf(
        {Ensemble::ZeroEnd, Kind::Diff, IntervalSpec{0, n - 1}, n}, opts);
    Json row = io::tail_report_json(tail_report(pmf));
    row["n"] = n;
    if (n >= 2) {
      row["top_bins_zero"] = pmf.counts[static_cast<std::size_t>(n)] == 0 &&
                             pmf.counts[static_cast<std::size_t>(n) - 1] == 0;
    }
    if (n >= 5) {
      const TailValues tv = tail_closed_forms(n);
      const bool matches = tv.p_n2 == pmf.prob_rational(n - 2) &&
                           tv.p_n3 == pmf.prob_rational(n - 3) &&
                           tv.p_n4 == pmf.prob_rational(n - 4) &&
                           tv.p_n5 == pmf.prob_rational(n - 5);
      row["closed_forms"] = io::tail_values_json(tv);
      row["matches_exact"] = matches;
      all_match = all_match && matches;
    }
    rows.push_back(std::move(row));
  }
  const Json results{{"rows", std::move(rows)}, {"all_match", all_match}};
  return emit_json(o, io::envelope("tail", inputs, results));
}

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--workers", o.workers,
                  "worker threads (0 = all hardware threads)")
      ->check(CLI::Range(0, 4096));
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output path (default stdout)");
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "exact and Monte Carlo distributions of missing sums and differences "
      "of random subsets of {0,...,n-1}"};
  app.require_subcommand(1);
  Options o;

  CLI::App* dist =
      app.add_subcommand("dist", "missing-count distribution for one query");
  dist->add_option("--ensemble", o.ensemble, "subset ensemble")
      ->check(CLI::IsMember({"free", "zero", "zero-end"}));
  dist->add_option("--kind", o.kind, "pair sums or differences")
      ->check(CLI::IsMember({"sum", "diff"}));
  dist->add_option("--interval", o.interval,
                   "preset (all,s,l,xs,ms,ml,xl,m,half,full) or LO:HI");
  dist->add_option("--n", o.n, "universe size")->check(CLI::Range(1, 64));
  dist->add_option("--method", o.method, "exact enumeration or Monte Carlo")
      ->check(CLI::IsMember({"exact", "mc"}));
  dist->add_option("--samples", o.samples, "Monte Carlo sample count");
  auto* dist_seed = dist->add_option("--seed", o.seed, "Monte Carlo seed");
  add_common_flags(dist, o);

  CLI::App* formula =
      app.add_subcommand("formula", "closed-form probability values");
  formula->add_option("--which", o.which,
                      "sum-inf, cond, t-closed, t-rec, joint-oracle or fib")
      ->required();
  formula->add_option("--k", o.k, "index of the formula")->required();
  add_common_flags(formula, o);

  CLI::App* check =
      app.add_subcommand("check", "verify one identity; exit 1 on failure");
  check->add_option("--rule", o.rule,
                    "t2a-r, t2a-rpp, t2b-1..t2b-5, halfline, middle-mass, "
                    "independence, tails, min-element or halfline-sums")
      ->required();
  check->add_option("--variant", o.variant,
                    "halfline: shifted|series; t2b-4/5: full|half");
  check->add_option("--n", o.n, "universe size")->check(CLI::Range(1, 64));
  check->add_option("--method", o.method, "exact or mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  check->add_option("--samples", o.samples, "Monte Carlo sample count");
  auto* check_seed = check->add_option("--seed", o.seed, "Monte Carlo seed");
  add_common_flags(check, o);

  CLI::App* scan = app.add_subcommand(
      "scan", "tail monotonicity reports across a range of n");
  scan->add_option("--rule", o.rule,
                   "blips, small-window-sums or limit-shape")
      ->required();
  scan->add_option("--n-range", o.n_range, "A:B inclusive")->required();
  add_common_flags(scan, o);

  CLI::App* tail = app.add_subcommand(
      "tail", "closed-form tail bins and blip report of the fundamental "
              "difference distribution");
  tail->add_option("--n", o.n, "universe size")->check(CLI::Range(1, 64));
  tail->add_option("--n-range", o.n_range, "A:B inclusive");
  add_common_flags(tail, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the CLI11 diagnostic
    return 2;
  }

  o.seed_given = dist_seed->count() > 0 || check_seed->count() > 0;

  try {
    if (app.got_subcommand(dist)) return handle_dist(o);
    if (app.got_subcommand(formula)) return handle_formula(o);
    if (app.got_subcommand(check)) return handle_check(o);
    if (app.got_subcommand(scan)) return handle_scan(o);
    if (app.got_subcommand(tail)) return handle_tail(o);
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace sumsetlab::cli
