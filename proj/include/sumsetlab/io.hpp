#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sumsetlab/exact_enum.hpp"
#include "sumsetlab/identity_analysis.hpp"
#include "sumsetlab/monte_carlo.hpp"

namespace sumsetlab::io {

using Json = nlohmann::json;

// Exact integers serialize as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; parsing accepts both.
Json int_or_string(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json rational_json(const Rational& r);  // {"num":..., "den":...}
Rational rational_from_json(const Json& j);

// Dense bin tables; zero-count bins are kept so plots see the full range.
Json pmf_json(const ExactPmf& pmf);
ExactPmf pmf_from_json(const Json& j);
Json pmf_json(const EstimatedPmf& est);
EstimatedPmf estimated_from_json(const Json& j);

Json gap_report_json(const GapReport& g);
Json tail_values_json(const TailValues& tv);
Json tail_report_json(const TailReport& r);
Json scan_rows_json(const std::vector<ScanRow>& rows);
Json middle_mass_json(const MiddleMass& mm);

// {schema_version:1, command, inputs, results}
Json envelope(const std::string& command, Json inputs, Json results);

using CsvHeader = std::vector<std::pair<std::string, std::string>>;

// "# key=value" echo lines, a column row, then one row per bin:
//   m,count,denom_log2,prob        (exact)
//   m,count,,prob,stderr           (Monte Carlo; denominator is `samples`)
void write_csv(std::ostream& os, const CsvHeader& header, const ExactPmf& pmf);
void write_csv(std::ostream& os, const CsvHeader& header,
               const EstimatedPmf& est);
void write_scan_csv(std::ostream& os, const CsvHeader& header,
                    const std::vector<ScanRow>& rows);

}  // namespace sumsetlab::io
