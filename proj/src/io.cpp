#include "sumsetlab/io.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace sumsetlab::io {

namespace {

constexpr auto kI64Max = std::numeric_limits<std::int64_t>::max();
constexpr auto kI64Min = std::numeric_limits<std::int64_t>::min();

}  // namespace

Json int_or_string(const BigInt& v) {
  if (v >= kI64Min && v <= kI64Max) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  return BigInt(j.get<std::int64_t>());
}

Json rational_json(const Rational& r) {
  return Json{{"num", int_or_string(numerator(r))},
              {"den", int_or_string(denominator(r))}};
}

Rational rational_from_json(const Json& j) {
  return Rational(bigint_from_json(j.at("num")), bigint_from_json(j.at("den")));
}

Json pmf_json(const ExactPmf& pmf) {
  Json bins = Json::array();
  for (std::size_t m = 0; m < pmf.counts.size(); ++m) {
    bins.push_back(Json{{"m", m}, {"count", pmf.counts[m]}, {"prob", pmf.prob(m)}});
  }
  return Json{{"denom_log2", pmf.n_free}, {"bins", std::move(bins)}};
}

ExactPmf pmf_from_json(const Json& j) {
  ExactPmf pmf;
  pmf.n_free = j.at("denom_log2").get<int>();
  const Json& bins = j.at("bins");
  pmf.counts.assign(bins.size(), 0);
  for (const Json& bin : bins) {
    pmf.counts.at(bin.at("m").get<std::size_t>()) =
        bin.at("count").get<std::uint64_t>();
  }
  return pmf;
}

Json pmf_json(const EstimatedPmf& est) {
  Json bins = Json::array();
  for (std::size_t m = 0; m < est.hits.size(); ++m) {
    bins.push_back(Json{{"m", m},
                        {"count", est.hits[m]},
                        {"prob", est.p_hat(m)},
                        {"stderr", est.std_err(m)}});
  }
  return Json{{"samples", est.samples}, {"seed", est.seed},
              {"bins", std::move(bins)}};
}

EstimatedPmf estimated_from_json(const Json& j) {
  EstimatedPmf est;
  est.samples = j.at("samples").get<std::uint64_t>();
  est.seed = j.at("seed").get<std::uint64_t>();
  const Json& bins = j.at("bins");
  est.hits.assign(bins.size(), 0);
  for (const Json& bin : bins) {
    est.hits.at(bin.at("m").get<std::size_t>()) =
        bin.at("count").get<std::uint64_t>();
  }
  return est;
}

Json gap_report_json(const GapReport& g) {
  Json bins = Json::array();
  const std::vector<double> gaps = g.per_m_gaps();
  for (std::size_t m = 0; m < gaps.size(); ++m) {
    bins.push_back(Json{{"m", m},
                        {"lhs", rational_json(g.lhs[m])},
                        {"rhs", rational_json(g.rhs[m])},
                        {"gap", gaps[m]}});
  }
  return Json{{"rule", g.rule},
              {"n", g.n},
              {"method", method_name(g.method)},
              {"tv", rational_json(g.tv)},
              {"tv_gap", g.tv_gap()},
              {"tail", rational_json(g.tail)},
              {"bins", std::move(bins)}};
}

Json tail_values_json(const TailValues& tv) {
  auto entry = [](const Rational& r) {
    Json j = rational_json(r);
    j["prob"] = to_double(r);
    return j;
  };
  return Json{{"n", tv.n},
              {"p_n2", entry(tv.p_n2)},
              {"p_n3", entry(tv.p_n3)},
              {"p_n4", entry(tv.p_n4)},
              {"p_n5", entry(tv.p_n5)}};
}

Json tail_report_json(const TailReport& r) {
  return Json{{"m_star", r.m_star},
              {"witnesses", r.witnesses},
              {"nonincreasing_after_mode", r.nonincreasing_after_mode},
              {"strictly_decreasing_after_mode",
               r.strictly_decreasing_after_mode}};
}

Json scan_rows_json(const std::vector<ScanRow>& rows) {
  Json out = Json::array();
  for (const ScanRow& row : rows) {
    Json j = tail_report_json(row.report);
    j["label"] = row.label;
    j["n"] = row.n;
    j["expected_blip"] = row.expected_blip;
    j["agrees"] = row.agrees;
    out.push_back(std::move(j));
  }
  return out;
}

Json middle_mass_json(const MiddleMass& mm) {
  Json j{{"prob", rational_json(mm.prob)},
         {"bound", rational_json(mm.bound)}};
  j["prob"]["value"] = to_double(mm.prob);
  j["bound"]["value"] = to_double(mm.bound);
  return j;
}

Json envelope(const std::string& command, Json inputs, Json results) {
  return Json{{"schema_version", 1},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)}};
}

namespace {

void write_header(std::ostream& os, const CsvHeader& header) {
  for (const auto& [key, value] : header) {
    os << "# " << key << "=" << value << "\n";
  }
}

std::string fmt_double(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

void write_csv(std::ostream& os, const CsvHeader& header, const ExactPmf& pmf) {
  write_header(os, header);
  os << "m,count,denom_log2,prob\n";
  for (std::size_t m = 0; m < pmf.counts.size(); ++m) {
    os << m << "," << pmf.counts[m] << "," << pmf.n_free << ","
       << fmt_double(pmf.prob(m)) << "\n";
  }
}

void write_csv(std::ostream& os, const CsvHeader& header,
               const EstimatedPmf& est) {
  write_header(os, header);
  os << "m,count,denom_log2,prob,stderr\n";
  for (std::size_t m = 0; m < est.hits.size(); ++m) {
    os << m << "," << est.hits[m] << ",," << fmt_double(est.p_hat(m)) << ","
       << fmt_double(est.std_err(m)) << "\n";
  }
}

void write_scan_csv(std::ostream& os, const CsvHeader& header,
                    const std::vector<ScanRow>& rows) {
  write_header(os, header);
  os << "label,n,m_star,witnesses,nonincreasing,strictly_decreasing,"
        "expected_blip,agrees\n";
  for (const ScanRow& row : rows) {
    os << row.label << "," << row.n << "," << row.report.m_star << ",";
    for (std::size_t i = 0; i < row.report.witnesses.size(); ++i) {
      if (i) os << ";";
      os << row.report.witnesses[i];
    }
    os << "," << (row.report.nonincreasing_after_mode ? 1 : 0) << ","
       << (row.report.strictly_decreasing_after_mode ? 1 : 0) << ","
       << (row.expected_blip ? 1 : 0) << "," << (row.agrees ? 1 : 0) << "\n";
  }
}

}  // namespace sumsetlab::io
