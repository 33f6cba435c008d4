#ifndef TRISPHERE_REPORT_HPP
#define TRISPHERE_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisphere/norm_solver.hpp"

namespace trisphere {

/// One sweep-output row: a (prime, ring) cell of the verification table.
struct ReportRow {
  Int p;
  Ring ring = Ring::Eisenstein;
  bool represented = false;
  std::optional<std::pair<Int, Int>> witness;
  std::size_t fixed_count = 0;
  std::size_t triangle_count = 0;
  std::size_t arc_count = 0;
  bool checks_passed = false;

  bool operator==(const ReportRow&) const = default;
};

/// Two rows per prime (eisenstein first), ascending p.
std::vector<ReportRow> report_rows(const VerificationReport& report);

/// Header "p,ring,status,a,b,fixed_count,triangle_count,arc_count,checks_passed"
/// followed by one line per row; witness cells are empty when absent.
std::string to_csv(const std::vector<ReportRow>& rows);

/// Inverse of to_csv; throws std::invalid_argument on malformed input.
std::vector<ReportRow> parse_csv(const std::string& csv);

/// JSON sweep summary: bounds, per-ring represented prime lists, failure
/// messages, aggregate pass flag.  Key order is fixed.
std::string summary_json(const VerificationReport& report);

/// Machine output for a single representation query:
/// {"p":…, "ring":…, "witness":[a,b]|null, "certificate":{…}|null,
///  "norm_check":true}.
std::string witness_json(const Int& p, Ring ring, const std::optional<NormWitness>& witness);

/// Machine output for a triangle listing; with orbits, adds the orbit
/// partition and per-fixed-triangle barycenters.
std::string triangles_json(const Int& p, bool orbits);

}  // namespace trisphere

#endif  // TRISPHERE_REPORT_HPP
