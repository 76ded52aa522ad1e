#include "imlab/constants.hpp"

#include "imlab/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace imlab {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

double CalibratedConstants::l6_bootstrap_threshold() const {
    return std::pow(16.0 * c_s * c_s, 1.0 / 6.0) + 1.0;
}

std::string CalibratedConstants::to_text() const {
    std::ostringstream out;
    out << "version = " << version << "\n";
    out << "c_s = " << format_double(c_s) << "\n";
    out << "k_hs = " << format_double(k_hs) << "\n";
    out << "k_morawetz = " << format_double(k_morawetz) << "\n";
    out << "c0 = " << format_double(c0) << "\n";
    out << "c1 = " << format_double(c1) << "\n";
    out << "c2 = " << format_double(c2) << "\n";
    out << "c_iter = " << format_double(c_iter) << "\n";
    out << "eps_plus = " << format_double(eps_plus) << "\n";
    out << "energy_drift_floor = " << format_double(energy_drift_floor) << "\n";
    return out.str();
}

CalibratedConstants CalibratedConstants::defaults() { return CalibratedConstants{}; }

CalibratedConstants CalibratedConstants::from_text(const std::string& text) {
    CalibratedConstants c = defaults();
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        try {
            if (key == "version") c.version = std::stoi(value);
            else if (key == "c_s") c.c_s = std::stod(value);
            else if (key == "k_hs") c.k_hs = std::stod(value);
            else if (key == "k_morawetz") c.k_morawetz = std::stod(value);
            else if (key == "c0") c.c0 = std::stod(value);
            else if (key == "c1") c.c1 = std::stod(value);
            else if (key == "c2") c.c2 = std::stod(value);
            else if (key == "c_iter") c.c_iter = std::stod(value);
            else if (key == "eps_plus") c.eps_plus = std::stod(value);
            else if (key == "energy_drift_floor") c.energy_drift_floor = std::stod(value);
            else throw ConfigError("constants: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw ConfigError("constants: bad value at line " + std::to_string(lineno));
        }
    }
    return c;
}

CalibratedConstants CalibratedConstants::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("constants: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

CalibratedConstants CalibratedConstants::load() {
    if (const char* path = std::getenv("IMLAB_CONSTANTS")) {
        return from_file(path);
    }
    return defaults();
}

} // namespace imlab
