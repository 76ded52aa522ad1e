#include "imlab/report.hpp"

#include "imlab/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

namespace imlab {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void AuditReport::add(const std::string& functional, double window_a, double window_b,
                      double cutoff, double s, double value) {
    rows_.push_back(AuditRow{functional, window_a, window_b, cutoff, s, value});
}

std::string AuditReport::to_csv() const {
    std::string out = "run_id,functional,window_a,window_b,N,s,value\n";
    for (const AuditRow& row : rows_) {
        out += run_id_;
        out += ',';
        out += row.functional;
        out += ',';
        out += format_double(row.window_a);
        out += ',';
        out += format_double(row.window_b);
        out += ',';
        out += format_double(row.cutoff);
        out += ',';
        out += format_double(row.s);
        out += ',';
        out += format_double(row.value);
        out += '\n';
    }
    return out;
}

std::string AuditReport::to_json(
    const std::vector<std::pair<std::string, std::string>>& config,
    const std::string& constants_text) const {
    nlohmann::ordered_json doc;
    doc["run_id"] = run_id_;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [key, value] : config) cfg[key] = value;
    doc["config"] = cfg;
    doc["constants"] = constants_text;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const AuditRow& row : rows_) {
        nlohmann::ordered_json r;
        r["functional"] = row.functional;
        r["window_a"] = row.window_a;
        r["window_b"] = row.window_b;
        r["N"] = row.cutoff;
        r["s"] = row.s;
        r["value"] = row.value;
        rows.push_back(r);
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << text;
    if (!out) throw ConfigError("write failed: " + path);
}

} // namespace

void AuditReport::write_csv(const std::string& path) const { write_text(path, to_csv()); }

void AuditReport::write_json(const std::string& path,
                             const std::vector<std::pair<std::string, std::string>>& config,
                             const std::string& constants_text) const {
    write_text(path, to_json(config, constants_text));
}

} // namespace imlab
