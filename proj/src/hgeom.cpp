#include "regtess/hgeom.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "regtess/criterion.hpp"
#include "regtess/errors.hpp"

namespace regtess::hgeom {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_point(Complex z)
{
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
         ")";
}

void require_hyperbolic(int p, int q)
{
  // Validation and error wording live with the tessellation type.
  (void)criterion::TessellationType::make(p, q);
}

} // namespace

DiskPoint::DiskPoint(Complex z) : z_(z)
{
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
      std::abs(z) >= 1.0 - kBoundaryGuard)
    throw InvalidInput("point " + format_point(z) +
                       " is not inside the unit disk");
}

double distance(DiskPoint const &a, DiskPoint const &b)
{
  // 2 artanh |(a - b) / (1 - conj(a) b)| equals the arcosh form but keeps
  // full relative precision for nearby points.
  auto const num = std::abs(a.z() - b.z());
  auto const den = std::abs(1.0 - std::conj(a.z()) * b.z());
  auto const t = std::min(num / den, std::nextafter(1.0, 0.0));
  return 2.0 * std::atanh(t);
}

Isometry::Isometry(Complex alpha, Complex beta)
{
  auto const norm = std::norm(alpha) - std::norm(beta);
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw InvalidInput("(alpha, beta) does not define a disk isometry");
  auto const s = std::sqrt(norm);
  alpha_ = alpha / s;
  beta_ = beta / s;
}

Isometry Isometry::rotation(double angle)
{
  return Isometry(std::polar(1.0, angle / 2.0), Complex{});
}

Isometry Isometry::to_origin(DiskPoint const &a)
{
  // z -> (z - a) / (1 - conj(a) z)
  return Isometry(Complex{1.0, 0.0}, -a.z());
}

Isometry Isometry::rotation_about(DiskPoint const &center, double angle)
{
  auto const t = to_origin(center);
  return compose_iso(inverse_iso(t), compose_iso(rotation(angle), t));
}

DiskPoint Isometry::operator()(DiskPoint const &z) const
{
  auto const w = (alpha_ * z.z() + beta_) /
                 (std::conj(beta_) * z.z() + std::conj(alpha_));
  return DiskPoint(w);
}

Isometry Isometry::sign_normalized() const
{
  bool const flip = alpha_.real() < 0.0 ||
                    (alpha_.real() == 0.0 && alpha_.imag() < 0.0);
  Isometry out = *this;
  if (flip) {
    out.alpha_ = -alpha_;
    out.beta_ = -beta_;
  }
  return out;
}

Isometry compose_iso(Isometry const &g, Isometry const &h)
{
  auto const a1 = g.alpha(), b1 = g.beta();
  auto const a2 = h.alpha(), b2 = h.beta();
  return Isometry(a1 * a2 + b1 * std::conj(b2), a1 * b2 + b1 * std::conj(a2));
}

Isometry inverse_iso(Isometry const &g)
{
  return Isometry(std::conj(g.alpha()), -g.beta());
}

DiskPoint apply(Isometry const &g, DiskPoint const &z) { return g(z); }

std::array<DiskPoint, 3> const &probe_points()
{
  static std::array<DiskPoint, 3> const probes{
      DiskPoint(Complex{0.0, 0.0}), DiskPoint(Complex{0.5, 0.0}),
      DiskPoint(Complex{-0.25, 0.4})};
  return probes;
}

double action_distance(Isometry const &g, Isometry const &h)
{
  double worst = 0.0;
  for (auto const &x : probe_points())
    worst = std::max(worst, distance(g(x), h(x)));
  return worst;
}

bool same_action(Isometry const &g, Isometry const &h, double tol)
{
  return action_distance(g, h) < tol;
}

Isometry isometry_from_pairs(DiskPoint const &P, DiskPoint const &Q,
                             DiskPoint const &P2, DiskPoint const &Q2)
{
  auto const d1 = distance(P, Q);
  auto const d2 = distance(P2, Q2);
  if (d1 <= kConstructionTol)
    throw InvalidInput("isometry_from_pairs: source points coincide");
  if (std::abs(d1 - d2) > kConstructionTol)
    throw InvalidInput("isometry_from_pairs: distances differ (" +
                       std::to_string(d1) + " vs " + std::to_string(d2) + ")");

  auto const t1 = Isometry::to_origin(P);
  auto const t2 = Isometry::to_origin(P2);
  auto const w1 = t1(Q).z();
  auto const w2 = t2(Q2).z();
  auto const turn = Isometry::rotation(std::arg(w2) - std::arg(w1));
  return compose_iso(inverse_iso(t2), compose_iso(turn, t1));
}

double circumradius(int p, int q)
{
  require_hyperbolic(p, q);
  return std::acosh(1.0 / (std::tan(kPi / p) * std::tan(kPi / q)));
}

double inradius(int p, int q)
{
  require_hyperbolic(p, q);
  return std::acosh(std::cos(kPi / q) / std::sin(kPi / p));
}

double angle_at(DiskPoint const &at, DiskPoint const &a, DiskPoint const &b)
{
  // to_origin is conformal with positive real derivative at `at`, and
  // geodesics through the origin are diameters.
  auto const t = Isometry::to_origin(at);
  auto const ratio = t(a).z() / t(b).z();
  return std::abs(std::arg(ratio));
}

DiskPoint const &Polygon::vertex(unsigned k) const
{
  if (k > p_)
    throw InvalidInput("vertex index " + std::to_string(k) + " outside 0.." +
                       std::to_string(p_));
  return vertices_[(k + p_ - 1) % p_];
}

double Polygon::interior_angle(unsigned k) const
{
  return angle_at(vertex(k), vertex(k - 1 == 0 ? p_ : k - 1),
                  vertex(k % p_ + 1));
}

double Polygon::edge_length(unsigned i) const
{
  auto const e = edge(i);
  return distance(e.from, e.to);
}

Polygon base_polygon(int p, int q)
{
  Polygon poly;
  poly.p_ = static_cast<unsigned>(p);
  poly.q_ = static_cast<unsigned>(q);
  poly.circumradius_ = circumradius(p, q);
  poly.inradius_ = inradius(p, q);

  auto const radius = std::tanh(poly.circumradius_ / 2.0);
  for (int k = 1; k <= p; ++k) {
    auto const theta = kPi / 2.0 - 2.0 * kPi * (k - 1) / p;
    poly.vertices_.emplace_back(std::polar(radius, theta));
  }
  return poly;
}

} // namespace regtess::hgeom
