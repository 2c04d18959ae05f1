#ifndef REGTESS_TESS_HPP
#define REGTESS_TESS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "regtess/hgeom.hpp"
#include "regtess/perm.hpp"

namespace regtess::tess {

inline constexpr unsigned kPatchDepthCap = 5;
inline constexpr unsigned kFreenessDepthCap = 4;

/// Sequence of 1-based generator indices. For edge-pairing words the
/// element is gamma_{w[0]} o gamma_{w[1]} o ...; for reference tiles the
/// tokens name symmetries instead (see reference_patch).
using Word = std::vector<unsigned>;

/// sigma together with gamma_1..gamma_p, where gamma_i carries e_{sigma(i)}
/// onto e_i with the edge orientation reversed, so gamma_i F is the
/// neighbor of F across e_i.
class EdgePairing {
public:
  hgeom::Polygon const &polygon() const { return polygon_; }
  perm::Permutation const &sigma() const { return sigma_; }
  unsigned p() const { return polygon_.p(); }

  /// gamma_i for 1-based i.
  hgeom::Isometry const &gen(unsigned i) const;
  std::vector<hgeom::Isometry> const &gens() const { return gens_; }

  /// Product of the generators named by `word`, leftmost outermost.
  hgeom::Isometry evaluate(Word const &word) const;

  friend EdgePairing generators(hgeom::Polygon const &polygon,
                                perm::Permutation const &sigma);

private:
  EdgePairing(hgeom::Polygon polygon, perm::Permutation sigma)
      : polygon_(std::move(polygon)), sigma_(std::move(sigma))
  {
  }

  hgeom::Polygon polygon_;
  perm::Permutation sigma_;
  std::vector<hgeom::Isometry> gens_;
};

/// Builds gamma_i = isometry_from_pairs(v_{sigma(i)-1}, v_{sigma(i)}, v_i,
/// v_{i-1}) and checks the pairing invariants. Throws InvalidInput when
/// sigma is not an involution of degree p, GeometryError when an invariant
/// fails after construction.
EdgePairing generators(hgeom::Polygon const &polygon,
                       perm::Permutation const &sigma);

/// Largest residual of the three EdgePairing invariants: edge endpoint
/// images, gamma_{sigma(i)} o gamma_i against the identity, and (negated
/// margin) center displacement. Used by tests and the verify report.
struct PairingAudit {
  double max_endpoint_error = 0.0;
  double max_inverse_error = 0.0;
  double min_center_shift = 0.0;
};
PairingAudit audit_pairing(EdgePairing const &ep);

/// Indices x_1..x_q visited around v_i, x_k = (sigma rho)^k (i).
std::vector<unsigned> vertex_cycle_indices(perm::Permutation const &sigma,
                                           unsigned q, unsigned i);

enum class ProductOrder {
  /// gamma_{x_q} o ... o gamma_{x_1}: crossing the edges around v_i in turn.
  walk,
  /// gamma_{x_1} o ... o gamma_{x_q}: the opposite order, a negative control.
  reversed,
};

/// Action distance from the identity of the vertex product at v_i. Throws
/// InvalidWitness when (sigma rho)^q != 1, InvalidInput for i outside 1..p.
double vertex_relation_residual(EdgePairing const &ep, unsigned q, unsigned i,
                                ProductOrder order = ProductOrder::walk);

bool vertex_relation_check(EdgePairing const &ep, unsigned q, unsigned i);

struct Tile {
  hgeom::DiskPoint center;
  Word word;
  unsigned depth = 0;
  /// Maps F onto this tile.
  hgeom::Isometry element;
};

struct TessellationPatch {
  unsigned p = 0;
  unsigned q = 0;
  unsigned depth_limit = 0;
  /// Sorted by (depth, word).
  std::vector<Tile> tiles;

  /// Index of the tile whose center lies within `radius` of `z`, if any.
  std::ptrdiff_t find(hgeom::DiskPoint const &z, double radius) const;
};

/// Orbit of F under reduced words of length <= depth; a word ending in j
/// is never extended by sigma(j). Tiles are merged when their centers are
/// closer than the inradius, keeping the shortest then lexicographically
/// least word.
TessellationPatch generate_patch(EdgePairing const &ep, unsigned depth);

/// Independent model of the full {p,q} tessellation built from the rotation
/// A by 2pi/p about the origin (token 1) and the rotation B by 2pi/q about
/// v_1 (token 2). The neighbors of tile g F are g A^k B F for k = 0..p-1,
/// and the BFS layer is the dual-graph distance from F.
TessellationPatch reference_patch(int p, int q, unsigned depth);

struct FreenessReport {
  bool transitive_ok = false;
  bool free_ok = false;
  /// (generate_patch tiles, reference_patch tiles).
  std::pair<std::size_t, std::size_t> tile_counts{0, 0};
  /// Reduced words examined and the largest action distance between two
  /// words that land on the same tile.
  std::size_t words_checked = 0;
  double max_coincidence_residual = 0.0;
  /// Reference tiles with no generated tile nearby.
  std::size_t unmatched_reference_tiles = 0;
};

/// Compares the generated orbit against reference_patch and audits every
/// coincidence of reduced words for equality of action.
FreenessReport freeness_check(EdgePairing const &ep, unsigned depth);

} // namespace regtess::tess

#endif // REGTESS_TESS_HPP
