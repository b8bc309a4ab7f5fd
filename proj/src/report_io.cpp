#include "qmono/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>

#include "qmono/tolerances.hpp"
#include "qmono/version.hpp"

namespace qmono {

namespace {

std::string iso8601_utc(std::time_t t) {
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string flags_of(const CheckResult& check) {
    std::string flags;
    auto add = [&](const char* name) {
        if (!flags.empty()) flags += ';';
        flags += name;
    };
    if (check.vacuous) add("vacuous");
    if (check.strict) add("strict");
    if (check.rank_flag) add("rank_gt2");
    return flags;
}

} // namespace

RunManifest make_manifest(std::string command_line, std::uint64_t seed) {
    RunManifest m;
    m.command_line = std::move(command_line);
    m.seed = seed;
    m.tolerance_version = tol::version;
    m.tool_version = kVersion;
    std::time_t t = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        const long long v = std::strtoll(epoch, &end, 10);
        if (end && *end == '\0') t = static_cast<std::time_t>(v);
    }
    m.timestamp = iso8601_utc(t);
    return m;
}

void write_manifest_comments(std::ostream& out, const RunManifest& manifest) {
    out << "# command: " << manifest.command_line << '\n';
    out << "# seed: " << manifest.seed << '\n';
    out << "# tolerance_table: " << manifest.tolerance_version << '\n';
    out << "# tool_version: " << manifest.tool_version << '\n';
    out << "# timestamp: " << manifest.timestamp << '\n';
}

nlohmann::json manifest_json(const RunManifest& manifest) {
    return {
        {"command", manifest.command_line},
        {"seed", manifest.seed},
        {"tolerance_table", manifest.tolerance_version},
        {"tool_version", manifest.tool_version},
        {"timestamp", manifest.timestamp},
    };
}

std::string csv_double(double value) {
    if (std::isnan(value)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::pass: return "pass";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::violation: return "violation";
    }
    return "violation";
}

void write_check_csv(std::ostream& out, const std::vector<FuzzRow>& rows,
                     const RunManifest& manifest) {
    write_manifest_comments(out, manifest);
    out << "state_id,theorem,alpha,lhs,rhs,margin,status,flags\n";
    for (const FuzzRow& row : rows) {
        const CheckResult& c = row.check;
        out << row.state_id << ',' << c.theorem_id << ',' << csv_double(c.alpha) << ','
            << csv_double(c.lhs) << ',' << csv_double(c.rhs) << ','
            << csv_double(c.margin) << ',' << verdict_name(c.verdict) << ','
            << flags_of(c) << '\n';
    }
}

void write_fuzz_csv(std::ostream& out, const FuzzOutcome& outcome,
                    const RunManifest& manifest) {
    write_check_csv(out, outcome.rows, manifest);
    for (const TheoremSummary& s : outcome.summaries) {
        out << "# summary: theorem=" << s.theorem_id << " evaluated=" << s.evaluated
            << " vacuous=" << s.vacuous << " skipped=" << s.skipped
            << " inconclusive=" << s.inconclusive << " violations=" << s.violations;
        if (s.evaluated > 0) {
            out << " min_margin=" << csv_double(s.min_margin) << " at_state=" << s.min_state;
            if (!std::isnan(s.min_alpha)) out << " alpha=" << csv_double(s.min_alpha);
        }
        out << '\n';
    }
    if (outcome.tau1_max.found) {
        out << "# tau1_max: state=" << outcome.tau1_max.state_id
            << " value=" << csv_double(outcome.tau1_max.value) << '\n';
        out << "# tau1_min: state=" << outcome.tau1_min.state_id
            << " value=" << csv_double(outcome.tau1_min.value) << '\n';
    }
}

nlohmann::json check_json(const CheckResult& check) {
    nlohmann::json j{
        {"theorem", check.theorem_id},
        {"lhs", check.lhs},
        {"rhs", check.rhs},
        {"margin", check.margin},
        {"tolerance", check.tolerance},
        {"status", verdict_name(check.verdict)},
        {"pass", check.pass},
        {"strict", check.strict},
        {"vacuous", check.vacuous},
        {"rank_gt2", check.rank_flag},
    };
    if (!std::isnan(check.alpha)) j["alpha"] = check.alpha;
    if (!check.witness.empty()) j["witness"] = check.witness;
    return j;
}

nlohmann::json report_json(const MonogamyReport& report,
                           const std::vector<MeasureEntry>& measures,
                           const RunManifest& manifest) {
    nlohmann::json j;
    j["manifest"] = manifest_json(manifest);
    j["state"] = report.state_descriptor;
    j["focus_qubit"] = report.focus_qubit;
    j["alpha_grid"] = report.alpha_grid;
    auto& ms = j["measures"] = nlohmann::json::array();
    for (const MeasureEntry& entry : measures) {
        const char* kind = nullptr;
        switch (entry.value.kind) {
            case MeasureKind::concurrence: kind = "concurrence"; break;
            case MeasureKind::coa: kind = "coa"; break;
            case MeasureKind::eof: kind = "eof"; break;
            case MeasureKind::eoa_bound: kind = "eoa_bound"; break;
            case MeasureKind::tangle: kind = "tangle"; break;
            case MeasureKind::residual: kind = "residual"; break;
        }
        nlohmann::json m{{"name", entry.name},
                         {"kind", kind},
                         {"value", entry.value.value},
                         {"exact", entry.value.exact},
                         {"in_regime", entry.value.in_regime}};
        ms.push_back(std::move(m));
    }
    auto& cs = j["checks"] = nlohmann::json::array();
    for (const CheckResult& check : report.results) {
        cs.push_back(check_json(check));
    }
    return j;
}

void write_figure_csv(std::ostream& out, const FigureTable& table,
                      const RunManifest& manifest) {
    write_manifest_comments(out, manifest);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << csv_double(row[c]);
        }
        out << '\n';
    }
}

} // namespace qmono
