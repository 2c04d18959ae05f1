#ifndef REGTESS_HGEOM_HPP
#define REGTESS_HGEOM_HPP

#include <array>
#include <complex>
#include <vector>

namespace regtess::hgeom {

using Complex = std::complex<double>;

/// Tolerances shared by every geometric check.
inline constexpr double kConstructionTol = 1e-9;
inline constexpr double kIsometryEqualTol = 1e-8;
inline constexpr double kBoundaryGuard = 1e-12;

/// A point of the open unit disk, kept at least kBoundaryGuard inside.
class DiskPoint {
public:
  DiskPoint() = default;

  /// Throws InvalidInput when |z| >= 1 - kBoundaryGuard or z is not finite.
  explicit DiskPoint(Complex z);

  Complex z() const { return z_; }
  double re() const { return z_.real(); }
  double im() const { return z_.imag(); }

private:
  Complex z_{0.0, 0.0};
};

double distance(DiskPoint const &a, DiskPoint const &b);

/// Orientation-preserving isometry z -> (alpha z + beta) / (conj(beta) z +
/// conj(alpha)) with |alpha|^2 - |beta|^2 = 1.
///
/// (alpha, beta) and (-alpha, -beta) give the same map, so compare
/// isometries with action_distance rather than by field.
class Isometry {
public:
  Isometry() = default;

  /// Rescales (alpha, beta) onto |alpha|^2 - |beta|^2 = 1. Throws
  /// InvalidInput if the pair does not describe a disk automorphism.
  Isometry(Complex alpha, Complex beta);

  static Isometry identity() { return {}; }

  /// Rotation by `angle` radians about the origin.
  static Isometry rotation(double angle);

  /// Maps `a` to the origin, fixing the diameter through `a`.
  static Isometry to_origin(DiskPoint const &a);

  /// Rotation by `angle` radians about `center`.
  static Isometry rotation_about(DiskPoint const &center, double angle);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }

  DiskPoint operator()(DiskPoint const &z) const;

  /// Same map with the sign chosen so that Re alpha > 0, or Re alpha == 0
  /// and Im alpha >= 0.
  Isometry sign_normalized() const;

private:
  Complex alpha_{1.0, 0.0};
  Complex beta_{0.0, 0.0};
};

/// g after h: (g o h)(z) = g(h(z)).
Isometry compose_iso(Isometry const &g, Isometry const &h);
Isometry inverse_iso(Isometry const &g);
DiskPoint apply(Isometry const &g, DiskPoint const &z);

/// Fixed points used to compare isometries by their action.
std::array<DiskPoint, 3> const &probe_points();

/// Largest hyperbolic distance between g(x) and h(x) over probe_points().
double action_distance(Isometry const &g, Isometry const &h);

bool same_action(Isometry const &g, Isometry const &h,
                 double tol = kIsometryEqualTol);

/// The unique orientation-preserving isometry sending P to P2 and Q to Q2.
/// Requires d(P,Q) == d(P2,Q2) within kConstructionTol and d(P,Q) above it.
Isometry isometry_from_pairs(DiskPoint const &P, DiskPoint const &Q,
                             DiskPoint const &P2, DiskPoint const &Q2);

/// Center-to-vertex distance of the regular p-gon with interior angle 2pi/q:
/// arcosh(cot(pi/p) cot(pi/q)). Throws NotHyperbolic otherwise.
double circumradius(int p, int q);

/// Center-to-edge-midpoint distance: arcosh(cos(pi/q) / sin(pi/p)).
double inradius(int p, int q);

/// Unsigned angle at `at` between the geodesics towards `a` and `b`.
double angle_at(DiskPoint const &at, DiskPoint const &a, DiskPoint const &b);

/// The regular base p-gon F centered at the origin.
///
/// Vertices are labeled clockwise with v_1 on the positive imaginary axis.
/// Edge e_1 joins v_p to v_1 and e_i joins v_{i-1} to v_i.
class Polygon {
public:
  unsigned p() const { return p_; }
  unsigned q() const { return q_; }

  DiskPoint center() const { return DiskPoint{}; }

  /// Vertex v_k for 1-based k; k = 0 is read as v_p.
  DiskPoint const &vertex(unsigned k) const;
  std::vector<DiskPoint> const &vertices() const { return vertices_; }

  struct Edge {
    DiskPoint from;
    DiskPoint to;
  };

  /// e_i as (v_{i-1}, v_i), i.e. in clockwise traversal order.
  Edge edge(unsigned i) const { return {vertex(i - 1), vertex(i)}; }

  double circumradius() const { return circumradius_; }
  double inradius() const { return inradius_; }

  /// Interior angle at v_k.
  double interior_angle(unsigned k) const;
  double edge_length(unsigned i) const;

  friend Polygon base_polygon(int p, int q);

private:
  unsigned p_ = 0;
  unsigned q_ = 0;
  double circumradius_ = 0.0;
  double inradius_ = 0.0;
  std::vector<DiskPoint> vertices_;
};

Polygon base_polygon(int p, int q);

} // namespace regtess::hgeom

#endif // REGTESS_HGEOM_HPP
