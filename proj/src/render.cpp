#include "regtess/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <vector>

#include "regtess/criterion.hpp"
#include "regtess/tess.hpp"

namespace regtess::render {

using hgeom::Complex;
using hgeom::DiskPoint;

namespace {

constexpr double kCanvas = 800.0;
constexpr double kScale = 390.0;
constexpr double kCollinearTol = 1e-12;

constexpr std::array<char const *, 6> kDepthFill{
    "#f4d35e", "#ee964b", "#f95738", "#0d3b66", "#3c6e71", "#9c89b8"};

Complex to_canvas(Complex z)
{
  return {kCanvas / 2.0 + kScale * z.real(), kCanvas / 2.0 - kScale * z.imag()};
}

std::string fmt(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  // Avoid "-0.0000" so identical geometry always prints identically.
  if (std::string_view(buf) == "-0.0000")
    return "0.0000";
  return buf;
}

std::string point_text(Complex c) { return fmt(c.real()) + " " + fmt(c.imag()); }

/// Path data for the closed geodesic polygon through `corners`.
std::string polygon_path(std::vector<DiskPoint> const &corners)
{
  std::string d = "M " + point_text(to_canvas(corners.front().z()));
  for (std::size_t k = 0; k < corners.size(); ++k) {
    auto const &a = corners[k];
    auto const &b = corners[(k + 1) % corners.size()];
    auto const end = to_canvas(b.z());
    auto const g = geodesic_through(a, b);
    if (g.straight) {
      d += " L " + point_text(end);
      continue;
    }
    auto const c = to_canvas(g.center);
    auto const start = to_canvas(a.z());
    auto const u = start - c;
    auto const v = end - c;
    int const sweep = u.real() * v.imag() - u.imag() * v.real() > 0.0 ? 1 : 0;
    auto const r = fmt(kScale * g.radius);
    d += " A " + r + " " + r + " 0 0 " + std::to_string(sweep) + " " +
         point_text(end);
  }
  return d + " Z";
}

std::vector<DiskPoint> tile_corners(hgeom::Polygon const &poly,
                                    hgeom::Isometry const &g)
{
  std::vector<DiskPoint> out;
  for (auto const &v : poly.vertices())
    out.push_back(g(v));
  return out;
}

} // namespace

Geodesic geodesic_through(DiskPoint const &a, DiskPoint const &b)
{
  auto const az = a.z(), bz = b.z();
  auto const cross = az.real() * bz.imag() - az.imag() * bz.real();
  if (std::abs(cross) < kCollinearTol)
    return Geodesic{true, {}, 0.0};

  // |c|^2 = radius^2 + 1 and |c - a| = |c - b| = radius reduce to
  // 2 Re(c conj(a)) = 1 + |a|^2 and the same for b.
  auto const ra = (1.0 + std::norm(az)) / 2.0;
  auto const rb = (1.0 + std::norm(bz)) / 2.0;
  auto const cx = (ra * bz.imag() - rb * az.imag()) / cross;
  auto const cy = (rb * az.real() - ra * bz.real()) / cross;
  Complex const c{cx, cy};
  return Geodesic{false, c, std::sqrt(std::norm(c) - 1.0)};
}

std::string render_svg(int p, int q, unsigned depth, RenderStats *stats)
{
  auto const type = criterion::TessellationType::make(p, q);
  auto const poly = hgeom::base_polygon(p, q);
  auto const reference = tess::reference_patch(p, q, depth);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n";

  RenderStats local;
  if (auto const prime = criterion::qualifying_prime(type)) {
    auto const witness = criterion::construct_sigma(type.p(), *prime);
    auto const pairing = tess::generators(poly, witness.sigma);
    for (auto const &tile : tess::generate_patch(pairing, depth).tiles) {
      svg += "<path class=\"cell\" fill=\"";
      svg += kDepthFill[tile.depth % kDepthFill.size()];
      svg += "\" stroke=\"none\" d=\"" +
             polygon_path(tile_corners(poly, tile.element)) + "\"/>\n";
      ++local.filled_tiles;
    }
  }

  for (auto const &tile : reference.tiles) {
    svg += "<path class=\"tile\" fill=\"none\" stroke=\"#222222\" "
           "stroke-width=\"0.8\" d=\"" +
           polygon_path(tile_corners(poly, tile.element)) + "\"/>\n";
    ++local.outlined_tiles;
  }

  auto const r = fmt(kScale);
  auto const top = point_text(to_canvas({0.0, 1.0}));
  auto const bottom = point_text(to_canvas({0.0, -1.0}));
  svg += "<path class=\"boundary\" fill=\"none\" stroke=\"#000000\" "
         "stroke-width=\"1.5\" d=\"M " +
         top + " A " + r + " " + r + " 0 1 1 " + bottom + " A " + r + " " +
         r + " 0 1 1 " + top + " Z\"/>\n";
  svg += "</svg>\n";

  if (stats)
    *stats = local;
  return svg;
}

} // namespace regtess::render
