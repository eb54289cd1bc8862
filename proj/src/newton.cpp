#include "charvar/newton.hpp"

#include <algorithm>
#include <numeric>

#include "charvar/resultant.hpp"

namespace charvar {

namespace {

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
  return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
}

Slope kernel_slope(const LatticePoint& d) {
  std::int64_t p = d.y(), q = -d.x();
  const std::int64_t g = std::gcd(p, q);
  return Slope(p / g, q / g);
}

}  // namespace

const Variables& APolynomial::variables() {
  static const Variables vars{"L", "M"};
  return vars;
}

APolynomial::APolynomial(const Poly& p) : poly_(embed(p, variables())) {
  if (poly_.is_zero()) throw InputError("A-polynomial is zero");
  if (!has_integer_coefficients(poly_)) throw InputError("A-polynomial must have integer coefficients");
}

std::vector<LatticePoint> APolynomial::support() const {
  std::vector<LatticePoint> out;
  for (const auto& [e, c] : poly_.terms()) out.emplace_back(e[0], e[1]);
  return out;
}

Integer APolynomial::strip_content() {
  Integer g = 0;
  for (const auto& [e, c] : poly_.terms()) g = gcd(g, c.numerator());
  if (g != 1) {
    poly_ = Rational(Integer(1), g) * poly_;
    log_.push_back("divided by content " + g.get_str());
  }
  return g;
}

void APolynomial::strip_abelian_factor() {
  const Poly factor = Poly::variable(variables(), "L") - Poly::constant(variables(), 1);
  try {
    poly_ = divide_exact(poly_, factor);
  } catch (const InputError&) {
    throw InputError("declared abelian factor L - 1 does not divide the A-polynomial");
  }
  if (poly_.is_zero()) throw InputError("A-polynomial is zero");
  log_.push_back("divided by abelian factor L - 1");
}

NewtonPolygon NewtonPolygon::hull(std::vector<LatticePoint> points) {
  if (points.empty()) throw InputError("empty support");
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  NewtonPolygon P;
  if (points.size() == 1) {
    P.vertices_ = points;
    return P;
  }
  // Andrew's monotone chain; strict turns drop collinear points.
  std::vector<LatticePoint> h(2 * points.size());
  std::size_t k = 0;
  for (const auto& pt : points) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pt) <= 0) --k;
    h[k++] = pt;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
    h[k++] = points[i];
  }
  h.resize(k - 1);
  P.vertices_ = std::move(h);
  return P;
}

std::vector<LatticePoint> NewtonPolygon::edges() const {
  std::vector<LatticePoint> out;
  if (vertices_.size() == 2) {
    out.push_back(vertices_[1] - vertices_[0]);
  } else if (vertices_.size() > 2) {
    for (std::size_t k = 0; k < vertices_.size(); ++k)
      out.push_back(vertices_[(k + 1) % vertices_.size()] - vertices_[k]);
  }
  return out;
}

NewtonPolygon newton_polygon(const APolynomial& a) { return NewtonPolygon::hull(a.support()); }

std::vector<Slope> boundary_slopes(const NewtonPolygon& P) {
  if (P.is_point()) throw InputError("Newton polygon is a single point: no edges, no slope data");
  std::vector<Slope> out;
  for (const auto& d : P.edges()) out.push_back(kernel_slope(d));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t cs_norm(const NewtonPolygon& P, const LatticePoint& v) {
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (const auto& w : P.vertices()) {
    const std::int64_t s = v.dot(w);
    if (first || s < lo) lo = s;
    if (first || s > hi) hi = s;
    first = false;
  }
  return hi - lo;
}

std::int64_t cs_norm(const NewtonPolygon& P, const Slope& alpha) {
  return cs_norm(P, LatticePoint(alpha.p(), alpha.q()));
}

Rational width(const NewtonPolygon& P, const Vector2q& v) {
  std::optional<Rational> lo, hi;
  for (const auto& w : P.vertices()) {
    const Rational s = v.x() * Rational(w.x()) + v.y() * Rational(w.y());
    if (!lo || s < *lo) lo = s;
    if (!hi || s > *hi) hi = s;
  }
  return *hi - *lo;
}

NormBall norm_ball(const NewtonPolygon& P) {
  if (P.is_point()) throw InputError("Newton polygon is a single point: the ball is the whole plane");
  NormBall ball;
  if (P.is_segment()) {
    const LatticePoint d = P.vertices()[1] - P.vertices()[0];
    ball.kernel = kernel_slope(d);
    ball.strip = d;
    return ball;
  }
  std::vector<LatticePoint> differences;
  for (const auto& a : P.vertices())
    for (const auto& b : P.vertices()) differences.push_back(a - b);
  const NewtonPolygon D = NewtonPolygon::hull(std::move(differences));
  // Each edge d1 -> d2 of the difference body gives the vertex v with
  // v.d1 = v.d2 = 1.
  const auto& dv = D.vertices();
  for (std::size_t k = 0; k < dv.size(); ++k) {
    const LatticePoint& d1 = dv[k];
    const LatticePoint& d2 = dv[(k + 1) % dv.size()];
    const Rational det(d1.x() * d2.y() - d1.y() * d2.x());
    ball.vertices.emplace_back(Rational(d2.y() - d1.y()) / det, Rational(d1.x() - d2.x()) / det);
  }
  auto least = std::min_element(ball.vertices.begin(), ball.vertices.end(), [](const Vector2q& a, const Vector2q& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  std::rotate(ball.vertices.begin(), least, ball.vertices.end());
  ball.is_norm = true;
  return ball;
}

std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.x()) + "," + std::to_string(p.y()) + ")";
}

std::string to_string(const Vector2q& v) { return "(" + v.x().to_string() + "," + v.y().to_string() + ")"; }

}  // namespace charvar
