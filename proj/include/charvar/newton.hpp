#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/eigen_support.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/slope.hpp"

namespace charvar {

/// A(L, M) with integer coefficients, stored over the variable list {L, M}.
/// Exponent pairs are (i, j) = (degree in L, degree in M).
class APolynomial {
 public:
  /// Accepts a nonzero integer polynomial over {L, M} (either order, or a
  /// subset); throws InputError otherwise.
  explicit APolynomial(const Poly& p);

  const Poly& polynomial() const { return poly_; }
  std::vector<LatticePoint> support() const;

  /// Divides out the positive gcd of the coefficients; returns it.
  Integer strip_content();
  /// Divides out one factor L - 1; throws InputError if it is absent.
  void strip_abelian_factor();

  /// Human-readable record of each normalization applied so far.
  const std::vector<std::string>& normalizations() const { return log_; }

  static const Variables& variables();

 private:
  Poly poly_;
  std::vector<std::string> log_;
};

/// Convex hull of a finite lattice point set: counterclockwise, starting at
/// the lexicographically least point, no collinear vertices. One vertex for
/// a point, two for a segment.
class NewtonPolygon {
 public:
  /// Throws InputError for an empty point set.
  static NewtonPolygon hull(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }
  bool is_two_dimensional() const { return vertices_.size() >= 3; }

  /// Edge vectors, vertex k to vertex k+1 (one edge for a segment).
  std::vector<LatticePoint> edges() const;

  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<LatticePoint> vertices_;
};

NewtonPolygon newton_polygon(const APolynomial& a);

/// Unoriented slopes of the edges. An edge with direction (di, dj) pairs to
/// the class p/q with (p, q) proportional to (dj, -di), the direction along
/// which the width functional vanishes on that edge. Throws InputError for a
/// single point.
std::vector<Slope> boundary_slopes(const NewtonPolygon& P);

/// Lattice width: max - min of p*i + q*j over the vertices.
std::int64_t cs_norm(const NewtonPolygon& P, const LatticePoint& v);
std::int64_t cs_norm(const NewtonPolygon& P, const Slope& alpha);
/// The same functional at a rational point.
Rational width(const NewtonPolygon& P, const Vector2q& v);

/// {v : width(P, v) <= 1}. For a two-dimensional polygon the vertices are
/// counterclockwise from the lexicographically least. A segment gives the
/// unbounded strip |v . d| <= 1 with no vertices.
struct NormBall {
  std::vector<Vector2q> vertices;
  bool is_norm = false;
  /// Segment case: the primitive direction on which the semi-norm vanishes
  /// and the edge vector d defining the strip.
  std::optional<Slope> kernel;
  std::optional<LatticePoint> strip;
};

/// Throws InputError for a single point (the ball would be the whole plane).
NormBall norm_ball(const NewtonPolygon& P);

std::string to_string(const LatticePoint& p);
std::string to_string(const Vector2q& v);

}  // namespace charvar
