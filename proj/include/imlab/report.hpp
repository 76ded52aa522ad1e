#ifndef IMLAB_REPORT_HPP
#define IMLAB_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace imlab {

// Flat audit row; the CSV schema is frozen (docs/output_formats.md).
struct AuditRow {
    std::string functional;
    double window_a = 0.0;
    double window_b = 0.0;
    double cutoff = 0.0; // N column; 0 when not applicable
    double s = 0.0;      // regularity column; 0 when not applicable
    double value = 0.0;
};

// Named scalar results with provenance.  Serialization is deterministic:
// fixed row order, %.17g floats, no timestamps.
class AuditReport {
  public:
    explicit AuditReport(std::string run_id) : run_id_(std::move(run_id)) {}

    void add(const std::string& functional, double window_a, double window_b, double cutoff,
             double s, double value);

    const std::vector<AuditRow>& rows() const { return rows_; }
    const std::string& run_id() const { return run_id_; }

    std::string to_csv() const;
    // JSON mirror embedding the resolved config (ordered key/value pairs)
    // and the constants-file text.
    std::string to_json(const std::vector<std::pair<std::string, std::string>>& config,
                        const std::string& constants_text) const;

    void write_csv(const std::string& path) const;
    void write_json(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& config,
                    const std::string& constants_text) const;

  private:
    std::string run_id_;
    std::vector<AuditRow> rows_;
};

std::string format_double(double v); // %.17g, shared by all writers

} // namespace imlab

#endif
