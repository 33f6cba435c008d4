#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trisphere/exact_core.hpp"
#include "trisphere/lambda_geometry.hpp"
#include "trisphere/norm_solver.hpp"
#include "trisphere/render.hpp"
#include "trisphere/report.hpp"
#include "trisphere/triangle_orbits.hpp"
#include "trisphere/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotRepresentable = 2;

using trisphere::Int;
using trisphere::Rat;
using trisphere::Ring;

Int parse_int(const std::string& text, const char* what) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(std::string(what) + " must be a decimal integer, got '" +
                               text + "'");
  }
}

Int require_prime(const std::string& text, bool odd_required) {
  const Int p = parse_int(text, "p");
  if (p < 2 || !trisphere::is_prime(p))
    throw CLI::ValidationError("p must be prime, got " + p.get_str());
  if (odd_required && p == 2)
    throw CLI::ValidationError("p must be an odd prime, got 2");
  return p;
}

Rat parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  try {
    Rat q;
    if (slash == std::string::npos) {
      q = Rat(Int(text));
    } else {
      const Int num(text.substr(0, slash));
      const Int den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      q = Rat(num, den);
    }
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("expected a rational like 3 or -1/2, got '" + text + "'");
  }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing: " +
                             std::strerror(errno));
  }
  out << contents;
  out.flush();
  if (!out)
    throw std::runtime_error("failed writing " + path.string() + ": " + std::strerror(errno));
}

std::string witness_line(const trisphere::NormWitness& w) {
  const auto [a, b] = w.pair();
  std::ostringstream os;
  if (w.ring == Ring::Eisenstein) {
    os << w.p << " = N(" << a << " + " << b << "ω) = " << a << "² − " << a << "·" << b
       << " + " << b << "²";
  } else {
    os << w.p << " = N(" << a << " + " << b << "i) = " << a << "² + " << b << "²";
  }
  return os.str();
}

int cmd_represent(const std::string& p_text, const std::string& ring_text, bool as_json) {
  const Int p = require_prime(p_text, /*odd_required=*/false);
  const Ring ring = ring_text == "eisenstein" ? Ring::Eisenstein : Ring::Gaussian;
  const std::optional<trisphere::NormWitness> w =
      ring == Ring::Eisenstein ? trisphere::represent_eisenstein(p)
                               : trisphere::represent_gaussian(p);
  if (as_json) {
    std::cout << trisphere::witness_json(p, ring, w);
  } else if (w) {
    std::cout << witness_line(*w) << "\n";
  } else if (ring == Ring::Eisenstein) {
    std::cout << "no representation (" << p << " ≡ " << p % 3 << " mod 3)\n";
  } else {
    std::cout << "no representation (" << p << " ≡ " << p % 4 << " mod 4)\n";
  }
  return w ? kExitOk : kExitNotRepresentable;
}

int cmd_triangles(const std::string& p_text, bool orbits, bool as_json) {
  const Int p = require_prime(p_text, /*odd_required=*/true);
  if (as_json) {
    std::cout << trisphere::triangles_json(p, orbits);
    return kExitOk;
  }

  const trisphere::OrbitDecomposition od = trisphere::orbit_decomposition(p);
  const auto print_row = [&p](const trisphere::CanonicalTriangle& t) {
    std::cout << "  k=" << t.k() << "  (∞, " << t.k() << "/" << p << ", " << t.k() + 1 << "/"
              << p << ")  λ=(" << p << "," << p << "," << p << ")  classes=(";
    const auto vs = t.vertices();
    for (int i = 0; i < 3; ++i)
      std::cout << trisphere::to_string(cusp_class(vs[i])) << (i < 2 ? "," : ")");
    if (const auto stab = trisphere::stabilizer_matrix(t)) {
      const trisphere::QuadraticPoint z = trisphere::barycenter(t);
      std::cout << "  FIXED barycenter=(" << z.x << ") + (" << z.y << ")·√3·i";
    }
    std::cout << "\n";
  };

  std::cout << od.fixed.size() + 3 * od.three_cycles.size() << " triangles of λ-length " << p
            << "\n";
  if (orbits) {
    for (const auto& t : od.fixed) {
      std::cout << "orbit of size 1:\n";
      print_row(t);
    }
    for (const auto& cycle : od.three_cycles) {
      std::cout << "orbit of size 3:\n";
      for (const auto& t : cycle) print_row(t);
    }
  } else {
    for (const auto& t : trisphere::enumerate_triangles(p)) print_row(t);
  }
  return kExitOk;
}

int cmd_verify(const std::string& max_text, const std::string& out_dir) {
  const Int p_max = parse_int(max_text, "--max");
  if (p_max < 3) throw CLI::ValidationError("--max must be at least 3");

  const trisphere::VerificationReport report = trisphere::verify_theorems(p_max);
  const std::vector<trisphere::ReportRow> rows = trisphere::report_rows(report);

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "verify_report.csv", trisphere::to_csv(rows));
  write_file(dir / "verify_summary.json", trisphere::summary_json(report));

  std::cout << "verified " << report.primes.size() << " primes ≤ " << p_max << ": "
            << (report.all_passed ? "all checks passed" : "CHECKS FAILED") << "\n";
  for (const auto& pv : report.primes)
    for (const std::string& msg : pv.failures) std::cout << "  FAIL " << msg << "\n";
  return report.all_passed ? kExitOk : kExitUsage;
}

int cmd_render(const std::string& p_text, const std::string& out_path,
               const std::vector<std::string>& window, long den_limit) {
  const Int p = require_prime(p_text, /*odd_required=*/true);
  trisphere::RenderOptions options;
  options.den_limit = den_limit;
  if (!window.empty()) {
    options.window_lo = parse_rational(window[0]);
    options.window_hi = parse_rational(window[1]);
    if (options.window_lo >= options.window_hi)
      throw CLI::ValidationError("--window must satisfy a < b");
  }
  write_file(out_path, trisphere::render_svg(p, options));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact λ-length geometry on the three-punctured sphere and prime norm "
               "representations"};
  app.set_version_flag("--version", std::string("trisphere ") + TRISPHERE_VERSION);
  app.require_subcommand(1);

  std::string p_text, ring = "eisenstein", out_dir = ".", out_path, max_text;
  std::vector<std::string> window;
  long den_limit = 32;
  bool as_json = false, orbits = false;

  CLI::App* represent =
      app.add_subcommand("represent", "represent a prime as an Eisenstein or Gaussian norm");
  represent->add_option("p", p_text, "prime to represent")->required();
  represent->add_option("--ring", ring, "eisenstein (a²−ab+b²) or gaussian (c²+d²)")
      ->check(CLI::IsMember({"eisenstein", "gaussian"}));
  represent->add_flag("--json", as_json, "machine-readable output");

  CLI::App* triangles =
      app.add_subcommand("triangles", "list the canonical equilateral triangles of λ-length p");
  triangles->add_option("p", p_text, "odd prime λ-length")->required();
  triangles->add_flag("--orbits", orbits, "group into rotation orbits");
  triangles->add_flag("--json", as_json, "machine-readable output");

  CLI::App* verify =
      app.add_subcommand("verify", "sweep all primes ≤ max through every counting check");
  verify->add_option("--max", max_text, "upper bound of the sweep")->required();
  verify->add_option("--out", out_dir, "directory for verify_report.csv / verify_summary.json");

  CLI::App* render = app.add_subcommand("render", "draw Ford circles and triangle lifts as SVG");
  render->add_option("p", p_text, "odd prime λ-length")->required();
  render->add_option("--out", out_path, "output SVG path")->required();
  render->add_option("--window", window, "real-axis window a b (rationals)")->expected(2);
  render->add_option("--den-limit", den_limit, "largest Ford-circle denominator drawn");

  try {
    app.parse(argc, argv);
    if (represent->parsed()) return cmd_represent(p_text, ring, as_json);
    if (triangles->parsed()) return cmd_triangles(p_text, orbits, as_json);
    if (verify->parsed()) return cmd_verify(max_text, out_dir);
    if (render->parsed()) return cmd_render(p_text, out_path, window, den_limit);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
