#include "trisphere/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace trisphere {

namespace {

using json = nlohmann::ordered_json;

// JSON numbers when the value fits 64 bits, decimal strings beyond.
json json_int(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json matrix_json(const UnimodularMatrix& m) {
  return json::array({json_int(m.a()), json_int(m.b()), json_int(m.c()), json_int(m.d())});
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

Ring parse_ring(const std::string& s) {
  if (s == "eisenstein") return Ring::Eisenstein;
  if (s == "gaussian") return Ring::Gaussian;
  throw std::invalid_argument("parse_csv: unknown ring '" + s + "'");
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("parse_csv: unknown boolean '" + s + "'");
}

std::size_t parse_size(const std::string& s) {
  return static_cast<std::size_t>(std::stoull(s));
}

constexpr const char* kCsvHeader =
    "p,ring,status,a,b,fixed_count,triangle_count,arc_count,checks_passed";

}  // namespace

std::vector<ReportRow> report_rows(const VerificationReport& report) {
  std::vector<ReportRow> rows;
  rows.reserve(report.primes.size() * 2);
  for (const PrimeVerification& pv : report.primes) {
    ReportRow eis;
    eis.p = pv.p;
    eis.ring = Ring::Eisenstein;
    eis.represented = pv.eisenstein.has_value();
    if (pv.eisenstein) eis.witness = pv.eisenstein->pair();
    eis.fixed_count = pv.fixed_count;
    eis.triangle_count = pv.triangle_count;
    eis.arc_count = pv.arc_count;
    eis.checks_passed = pv.eisenstein_ok && pv.counts_ok && pv.mod3_ok;
    rows.push_back(std::move(eis));

    ReportRow gau;
    gau.p = pv.p;
    gau.ring = Ring::Gaussian;
    gau.represented = pv.gaussian.has_value();
    if (pv.gaussian) gau.witness = pv.gaussian->pair();
    gau.fixed_count = pv.fixed_count;
    gau.triangle_count = pv.triangle_count;
    gau.arc_count = pv.arc_count;
    gau.checks_passed = pv.gaussian_ok && pv.counts_ok;
    rows.push_back(std::move(gau));
  }
  return rows;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const ReportRow& r : rows) {
    os << r.p.get_str() << "," << to_string(r.ring) << ","
       << (r.represented ? "REPRESENTED" : "NO_REPRESENTATION") << ",";
    if (r.witness) os << r.witness->first.get_str();
    os << ",";
    if (r.witness) os << r.witness->second.get_str();
    os << "," << r.fixed_count << "," << r.triangle_count << "," << r.arc_count << ","
       << (r.checks_passed ? "true" : "false") << "\n";
  }
  return os.str();
}

std::vector<ReportRow> parse_csv(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw std::invalid_argument("parse_csv: missing or unexpected header");
  std::vector<ReportRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line, ',');
    if (cells.size() != 9)
      throw std::invalid_argument("parse_csv: expected 9 cells, got line '" + line + "'");
    ReportRow r;
    r.p = Int(cells[0]);
    r.ring = parse_ring(cells[1]);
    if (cells[2] == "REPRESENTED")
      r.represented = true;
    else if (cells[2] == "NO_REPRESENTATION")
      r.represented = false;
    else
      throw std::invalid_argument("parse_csv: unknown status '" + cells[2] + "'");
    if (r.represented != (!cells[3].empty() && !cells[4].empty()))
      throw std::invalid_argument("parse_csv: status and witness cells disagree");
    if (r.represented) r.witness = std::make_pair(Int(cells[3]), Int(cells[4]));
    r.fixed_count = parse_size(cells[5]);
    r.triangle_count = parse_size(cells[6]);
    r.arc_count = parse_size(cells[7]);
    r.checks_passed = parse_bool(cells[8]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string summary_json(const VerificationReport& report) {
  json j;
  j["p_max"] = json_int(report.p_max);
  j["primes_checked"] = report.primes.size();
  j["all_passed"] = report.all_passed;
  j["failure_count"] = report.failure_count;

  json eis = json::array();
  json gau = json::array();
  json eis_w = json::array();
  json gau_w = json::array();
  json failures = json::array();
  const auto witness_entry = [](const PrimeVerification& pv, const NormWitness& w,
                                const std::optional<std::pair<Int, Int>>& canonical) {
    json entry;
    entry["p"] = json_int(pv.p);
    const auto [a, b] = w.pair();
    entry["witness"] = json::array({json_int(a), json_int(b)});
    if (canonical)
      entry["canonical"] = json::array({json_int(canonical->first), json_int(canonical->second)});
    else
      entry["canonical"] = nullptr;
    return entry;
  };
  for (const PrimeVerification& pv : report.primes) {
    if (pv.eisenstein) {
      eis.push_back(json_int(pv.p));
      eis_w.push_back(witness_entry(pv, *pv.eisenstein, pv.eisenstein_canonical));
    }
    if (pv.gaussian) {
      gau.push_back(json_int(pv.p));
      gau_w.push_back(witness_entry(pv, *pv.gaussian, pv.gaussian_canonical));
    }
    for (const std::string& msg : pv.failures) failures.push_back(msg);
  }
  j["eisenstein_represented"] = std::move(eis);
  j["gaussian_represented"] = std::move(gau);
  j["eisenstein_witnesses"] = std::move(eis_w);
  j["gaussian_witnesses"] = std::move(gau_w);
  j["failures"] = std::move(failures);
  return j.dump(2) + "\n";
}

std::string witness_json(const Int& p, Ring ring, const std::optional<NormWitness>& witness) {
  json j;
  j["p"] = json_int(p);
  j["ring"] = to_string(ring);
  if (witness) {
    const auto [a, b] = witness->pair();
    j["witness"] = json::array({json_int(a), json_int(b)});
    json cert;
    cert["k"] = json_int(witness->k);
    cert["stabilizer"] = matrix_json(witness->stabilizer);
    cert["conjugator"] = matrix_json(witness->conjugator);
    j["certificate"] = std::move(cert);
  } else {
    j["witness"] = nullptr;
    j["certificate"] = nullptr;
  }
  j["norm_check"] = !witness || witness->norm_value() == p;
  return j.dump(2) + "\n";
}

std::string triangles_json(const Int& p, bool orbits) {
  json j;
  j["p"] = json_int(p);
  const auto triangles = enumerate_triangles(p);
  j["triangle_count"] = triangles.size();

  const OrbitDecomposition od = orbit_decomposition(p);
  json rows = json::array();
  for (const CanonicalTriangle& t : triangles) {
    json row;
    row["k"] = json_int(t.k());
    json verts = json::array();
    json classes = json::array();
    for (const ExtendedRational& v : t.vertices()) {
      verts.push_back(v.str());
      classes.push_back(to_string(cusp_class(v)));
    }
    row["vertices"] = std::move(verts);
    row["cusp_classes"] = std::move(classes);
    const bool fixed = stabilizer_matrix(t).has_value();
    row["fixed"] = fixed;
    if (fixed) {
      const QuadraticPoint z = barycenter(t);
      json bc;
      bc["x"] = z.x.get_str();
      bc["y_coefficient"] = z.y.get_str();
      bc["radicand"] = z.radicand;
      row["barycenter"] = std::move(bc);
    } else {
      row["barycenter"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  j["triangles"] = std::move(rows);

  if (orbits) {
    json fixed = json::array();
    for (const CanonicalTriangle& t : od.fixed) fixed.push_back(json_int(t.k()));
    json cycles = json::array();
    for (const auto& cycle : od.three_cycles)
      cycles.push_back(json::array(
          {json_int(cycle[0].k()), json_int(cycle[1].k()), json_int(cycle[2].k())}));
    json o;
    o["fixed"] = std::move(fixed);
    o["three_cycles"] = std::move(cycles);
    j["orbits"] = std::move(o);
  }
  return j.dump(2) + "\n";
}

}  // namespace trisphere
