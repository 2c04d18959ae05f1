#ifndef REGTESS_RENDER_HPP
#define REGTESS_RENDER_HPP

#include <string>

#include "regtess/hgeom.hpp"

namespace regtess::render {

/// The geodesic through two disk points: an arc of the circle orthogonal to
/// the unit circle, or a straight chord when both points are collinear with
/// the origin.
struct Geodesic {
  bool straight = false;
  hgeom::Complex center;
  double radius = 0.0;
};

Geodesic geodesic_through(hgeom::DiskPoint const &a,
                          hgeom::DiskPoint const &b);

struct RenderStats {
  std::size_t outlined_tiles = 0;
  std::size_t filled_tiles = 0;
};

/// SVG of reference_patch(p, q, depth) drawn with geodesic edges. When
/// {p,q} is realizable the tiles of generate_patch for the constructed
/// witness are filled by word length. Only <path> elements are emitted.
std::string render_svg(int p, int q, unsigned depth,
                       RenderStats *stats = nullptr);

} // namespace regtess::render

#endif // REGTESS_RENDER_HPP
