#include "trisphere/render.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "trisphere/decimal.hpp"
#include "trisphere/lambda_geometry.hpp"
#include "trisphere/triangle_orbits.hpp"
#include "trisphere/version.hpp"

namespace trisphere {

namespace {

// 512 px per real-axis unit; the strip [window] × [0, 5/4] is drawn with the
// imaginary axis flipped, so the real line sits at the bottom edge.
const long kScale = 512;
const Rat kTop(5, 4);

struct Frame {
  Rat lo;
  Rat hi;

  std::string x(const Rat& v) const { return decimal12(Rat((v - lo) * kScale)); }
  std::string y(const Rat& v) const { return decimal12(Rat((kTop - v) * kScale)); }
  std::string len(const Rat& v) const { return decimal12(Rat(v * kScale)); }
};

Rat rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

std::string render_svg(const Int& p, const RenderOptions& options) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("render_svg: p must be an odd prime");
  if (options.window_lo >= options.window_hi)
    throw std::invalid_argument("render_svg: degenerate window");
  if (options.den_limit < 1)
    throw std::invalid_argument("render_svg: denominator limit must be positive");

  Frame f{options.window_lo, options.window_hi};
  f.lo.canonicalize();
  f.hi.canonicalize();
  const std::string width = f.len(Rat(f.hi - f.lo));
  const std::string height = f.len(kTop);
  const std::string y_axis = f.y(Rat(0));

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "<!-- trisphere " << TRISPHERE_VERSION << " | p=" << p.get_str() << " window=["
      << f.lo.get_str() << "," << f.hi.get_str() << "] den-limit=" << options.den_limit
      << " -->\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  // Boundary of the horoball at ∞ (Im z = 1).
  svg << "<line class=\"horoball\" x1=\"0\" y1=\"" << f.y(Rat(1)) << "\" x2=\"" << width
      << "\" y2=\"" << f.y(Rat(1))
      << "\" stroke=\"#9aa7b0\" stroke-dasharray=\"6 4\" stroke-width=\"1\"/>\n";

  // Ford circles with tangent point in the window and denominator ≤ limit.
  svg << "<g fill=\"none\" stroke=\"#9aa7b0\" stroke-width=\"1\">\n";
  for (long n = 1; n <= options.den_limit; ++n) {
    Int m_min, m_max;
    // ceil(lo·n) and floor(hi·n)
    mpz_cdiv_q(m_min.get_mpz_t(), Int(f.lo.get_num() * n).get_mpz_t(),
               f.lo.get_den().get_mpz_t());
    mpz_fdiv_q(m_max.get_mpz_t(), Int(f.hi.get_num() * n).get_mpz_t(),
               f.hi.get_den().get_mpz_t());
    for (Int m = m_min; m <= m_max; ++m) {
      Int g;
      mpz_gcd_ui(g.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n));
      if (g != 1) continue;
      const Rat radius(1, 2 * Int(n) * n);
      svg << "<circle class=\"ford\" cx=\"" << f.x(rat(m, Int(n))) << "\" cy=\""
          << f.y(radius) << "\" r=\"" << f.len(radius) << "\"/>\n";
    }
  }
  svg << "</g>\n";

  // Vertical lifts of the arcs of λ-length p at ∞.
  svg << "<g stroke=\"#3a6ea5\" stroke-width=\"1\">\n";
  for (const Int& k : enumerate_incident_arcs(p)) {
    const Rat x = rat(k, p);
    if (x < f.lo || x > f.hi) continue;
    svg << "<line class=\"arc\" x1=\"" << f.x(x) << "\" y1=\"" << y_axis << "\" x2=\"" << f.x(x)
        << "\" y2=\"0\"/>\n";
  }
  svg << "</g>\n";

  // Bottom edges of the canonical triangles (semicircles k/p to (k+1)/p).
  const OrbitDecomposition od = orbit_decomposition(p);
  svg << "<g fill=\"none\" stroke=\"#3a6ea5\" stroke-width=\"1\">\n";
  for (const CanonicalTriangle& t : enumerate_triangles(p)) {
    const Rat x1 = rat(t.k(), p);
    const Rat x2 = rat(t.k() + 1, p);
    const std::string r = f.len(Rat(1, 2 * p));
    svg << "<path class=\"triangle\" d=\"M " << f.x(x1) << " " << y_axis << " A " << r << " "
        << r << " 0 0 1 " << f.x(x2) << " " << y_axis << "\"/>\n";
  }
  svg << "</g>\n";

  // Rotation-fixed triangles redrawn with emphasis, barycenters marked.
  for (const CanonicalTriangle& t : od.fixed) {
    const Rat x1 = rat(t.k(), p);
    const Rat x2 = rat(t.k() + 1, p);
    const std::string r = f.len(Rat(1, 2 * p));
    svg << "<g class=\"triangle-fixed\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\">\n";
    svg << "<line x1=\"" << f.x(x1) << "\" y1=\"" << y_axis << "\" x2=\"" << f.x(x1)
        << "\" y2=\"0\"/>\n";
    svg << "<line x1=\"" << f.x(x2) << "\" y1=\"" << y_axis << "\" x2=\"" << f.x(x2)
        << "\" y2=\"0\"/>\n";
    svg << "<path d=\"M " << f.x(x1) << " " << y_axis << " A " << r << " " << r << " 0 0 1 "
        << f.x(x2) << " " << y_axis << "\"/>\n";
    const QuadraticPoint z = barycenter(t);
    // Flipped-axis height of x + y√3·i: (kTop − y√3)·scale.
    const std::string cy = decimal12_minus_sqrt3(Rat(kTop * kScale), Rat(z.y * kScale));
    svg << "<circle class=\"barycenter\" cx=\"" << f.x(z.x) << "\" cy=\"" << cy
        << "\" r=\"3\" fill=\"#c0392b\" stroke=\"none\"/>\n";
    svg << "</g>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace trisphere
