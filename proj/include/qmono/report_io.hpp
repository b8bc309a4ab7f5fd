#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmono/fuzz.hpp"
#include "qmono/measures.hpp"
#include "qmono/monogamy.hpp"

namespace qmono {

/// Provenance block embedded verbatim in every output file.
struct RunManifest {
    std::string command_line;
    std::uint64_t seed = 0;
    std::string tolerance_version;
    std::string tool_version;
    std::string timestamp;
};

/// Manifest for the current run. The timestamp is wall-clock UTC unless
/// SOURCE_DATE_EPOCH is set, which pins it for byte-reproducible outputs.
RunManifest make_manifest(std::string command_line, std::uint64_t seed);

/// "# key: value" comment lines.
void write_manifest_comments(std::ostream& out, const RunManifest& manifest);

nlohmann::json manifest_json(const RunManifest& manifest);

/// Doubles in CSV cells: 12 significant digits, '.' decimal, NaN -> empty.
std::string csv_double(double value);

std::string verdict_name(Verdict verdict);

/// Flat check table: manifest comments, header, one row per CheckResult.
void write_check_csv(std::ostream& out, const std::vector<FuzzRow>& rows,
                     const RunManifest& manifest);

/// Campaign CSV: check table plus per-theorem summary and sign-witness
/// trailer comments.
void write_fuzz_csv(std::ostream& out, const FuzzOutcome& outcome,
                    const RunManifest& manifest);

/// Named scalar for the eval report.
struct MeasureEntry {
    std::string name;
    MeasureValue value;
};

nlohmann::json check_json(const CheckResult& check);

nlohmann::json report_json(const MonogamyReport& report,
                           const std::vector<MeasureEntry>& measures,
                           const RunManifest& manifest);

/// Two-or-three column figure table; cells may be NaN (emitted empty).
struct FigureTable {
    std::vector<std::string> columns;          // first is "alpha"
    std::vector<std::vector<double>> rows;
};

void write_figure_csv(std::ostream& out, const FigureTable& table,
                      const RunManifest& manifest);

} // namespace qmono
