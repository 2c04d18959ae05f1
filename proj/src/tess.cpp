#include "regtess/tess.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <tuple>

#include "regtess/errors.hpp"

namespace regtess::tess {

using hgeom::DiskPoint;
using hgeom::Isometry;

namespace {

/// Radius-query index over disk points. Points are bucketed by hyperbolic
/// shell floor(d(0,z) / radius) and, within shell j, by a Euclidean grid
/// whose cell bounds the Euclidean diameter of any hyperbolic ball of
/// `radius` centered in shell j-1 or beyond:
///   2 t (1 - tanh^2((j-1) radius / 2)) / (1 - t^2),  t = tanh(radius / 2).
/// A query in shell k only needs shells k-1..k+1 and a 3x3 block of cells.
class CenterIndex {
public:
  explicit CenterIndex(double radius)
      : radius_(radius), t_(std::tanh(radius / 2.0))
  {
  }

  template <typename CentersFn>
  std::ptrdiff_t find(DiskPoint const &z, CentersFn const &center_of) const
  {
    auto const shell = shell_of(z);
    std::ptrdiff_t best = -1;
    for (long j = std::max(0L, shell - 1); j <= shell + 1; ++j) {
      auto const [cx, cy] = cell_of(z, j);
      for (long dx = -1; dx <= 1; ++dx) {
        for (long dy = -1; dy <= 1; ++dy) {
          auto it = cells_.find(Key{j, cx + dx, cy + dy});
          if (it == cells_.end())
            continue;
          for (auto idx : it->second) {
            if (hgeom::distance(center_of(idx), z) < radius_ &&
                (best < 0 || static_cast<std::ptrdiff_t>(idx) < best))
              best = static_cast<std::ptrdiff_t>(idx);
          }
        }
      }
    }
    return best;
  }

  void insert(DiskPoint const &z, std::size_t idx)
  {
    auto const shell = shell_of(z);
    auto const [cx, cy] = cell_of(z, shell);
    cells_[Key{shell, cx, cy}].push_back(idx);
  }

private:
  using Key = std::tuple<long, long, long>;

  long shell_of(DiskPoint const &z) const
  {
    return static_cast<long>(
        std::floor(hgeom::distance(DiskPoint{}, z) / radius_));
  }

  double cell_size(long shell) const
  {
    auto const inner = std::tanh(static_cast<double>(std::max(0L, shell - 1)) *
                                 radius_ / 2.0);
    return 2.0 * t_ * (1.0 - inner * inner) / (1.0 - t_ * t_);
  }

  std::pair<long, long> cell_of(DiskPoint const &z, long shell) const
  {
    auto const c = cell_size(shell);
    return {static_cast<long>(std::floor(z.re() / c)),
            static_cast<long>(std::floor(z.im() / c))};
  }

  double radius_;
  double t_;
  std::map<Key, std::vector<std::size_t>> cells_;
};

void require_depth(unsigned depth, unsigned cap, char const *what)
{
  if (depth > cap)
    throw LimitExceeded(std::string(what) + " depth is capped at " +
                        std::to_string(cap) + ", got " +
                        std::to_string(depth));
}

/// Visits every reduced word of length 1..depth in (length, lex) order.
void for_each_reduced_word(
    EdgePairing const &ep, unsigned depth,
    std::function<void(Word const &, Isometry const &)> const &visit)
{
  struct Node {
    Word word;
    Isometry element;
  };

  std::vector<Node> layer{Node{{}, Isometry::identity()}};
  for (unsigned d = 1; d <= depth; ++d) {
    std::vector<Node> next;
    for (auto const &node : layer) {
      for (unsigned i = 1; i <= ep.p(); ++i) {
        if (!node.word.empty() && i == ep.sigma()(node.word.back()))
          continue;
        Node child{node.word, hgeom::compose_iso(node.element, ep.gen(i))};
        child.word.push_back(i);
        visit(child.word, child.element);
        next.push_back(std::move(child));
      }
    }
    layer = std::move(next);
  }
}

void sort_tiles(std::vector<Tile> &tiles)
{
  std::stable_sort(tiles.begin(), tiles.end(),
                   [](Tile const &a, Tile const &b) {
                     if (a.depth != b.depth)
                       return a.depth < b.depth;
                     return a.word < b.word;
                   });
}

} // namespace

hgeom::Isometry const &EdgePairing::gen(unsigned i) const
{
  if (i < 1 || i > gens_.size())
    throw InvalidInput("generator index " + std::to_string(i) +
                       " outside 1.." + std::to_string(gens_.size()));
  return gens_[i - 1];
}

hgeom::Isometry EdgePairing::evaluate(Word const &word) const
{
  auto g = Isometry::identity();
  for (auto i : word)
    g = hgeom::compose_iso(g, gen(i));
  return g;
}

EdgePairing generators(hgeom::Polygon const &polygon,
                       perm::Permutation const &sigma)
{
  if (sigma.degree() != polygon.p())
    throw InvalidInput("sigma has degree " + std::to_string(sigma.degree()) +
                       " but the polygon has " + std::to_string(polygon.p()) +
                       " edges");
  if (!perm::is_involution(sigma))
    throw InvalidInput("sigma " + perm::to_cycle_string(sigma) +
                       " is not an involution");

  EdgePairing ep(polygon, sigma);
  for (unsigned i = 1; i <= polygon.p(); ++i) {
    auto const j = sigma(i);
    ep.gens_.push_back(hgeom::isometry_from_pairs(
        polygon.vertex(j - 1), polygon.vertex(j), polygon.vertex(i),
        polygon.vertex(i - 1)));
  }

  auto const audit = audit_pairing(ep);
  if (audit.max_endpoint_error > hgeom::kConstructionTol ||
      audit.max_inverse_error > hgeom::kIsometryEqualTol ||
      !(audit.min_center_shift > polygon.inradius()))
    throw GeometryError(
        "edge pairing invariants violated: endpoint error " +
        std::to_string(audit.max_endpoint_error) + ", inverse error " +
        std::to_string(audit.max_inverse_error) + ", center shift " +
        std::to_string(audit.min_center_shift));
  return ep;
}

PairingAudit audit_pairing(EdgePairing const &ep)
{
  auto const &poly = ep.polygon();
  PairingAudit audit;
  audit.min_center_shift = std::numeric_limits<double>::infinity();

  for (unsigned i = 1; i <= ep.p(); ++i) {
    auto const j = ep.sigma()(i);
    auto const &g = ep.gen(i);
    audit.max_endpoint_error = std::max(
        {audit.max_endpoint_error,
         hgeom::distance(g(poly.vertex(j - 1)), poly.vertex(i)),
         hgeom::distance(g(poly.vertex(j)), poly.vertex(i - 1))});
    audit.max_inverse_error = std::max(
        audit.max_inverse_error,
        hgeom::action_distance(hgeom::compose_iso(ep.gen(j), g),
                               Isometry::identity()));
    audit.min_center_shift = std::min(
        audit.min_center_shift, hgeom::distance(g(poly.center()), poly.center()));
  }
  return audit;
}

std::vector<unsigned> vertex_cycle_indices(perm::Permutation const &sigma,
                                           unsigned q, unsigned i)
{
  auto const sigma_rho = perm::compose(sigma, perm::rho(sigma.degree()));
  std::vector<unsigned> out;
  out.reserve(q);
  unsigned x = i;
  for (unsigned k = 0; k < q; ++k) {
    x = sigma_rho(x);
    out.push_back(x);
  }
  return out;
}

double vertex_relation_residual(EdgePairing const &ep, unsigned q, unsigned i,
                                ProductOrder order)
{
  if (i < 1 || i > ep.p())
    throw InvalidInput("vertex index " + std::to_string(i) + " outside 1.." +
                       std::to_string(ep.p()));

  auto const sigma_rho = perm::compose(ep.sigma(), perm::rho(ep.p()));
  if (!perm::power(sigma_rho, q).is_identity())
    throw InvalidWitness("sigma " + perm::to_cycle_string(ep.sigma()) +
                         " is not a valid witness: (sigma rho)^" +
                         std::to_string(q) + " != 1");

  auto product = Isometry::identity();
  for (auto x : vertex_cycle_indices(ep.sigma(), q, i)) {
    product = order == ProductOrder::walk
                  ? hgeom::compose_iso(ep.gen(x), product)
                  : hgeom::compose_iso(product, ep.gen(x));
  }
  return hgeom::action_distance(product, Isometry::identity());
}

bool vertex_relation_check(EdgePairing const &ep, unsigned q, unsigned i)
{
  return vertex_relation_residual(ep, q, i) < hgeom::kIsometryEqualTol;
}

std::ptrdiff_t TessellationPatch::find(hgeom::DiskPoint const &z,
                                       double radius) const
{
  for (std::size_t k = 0; k < tiles.size(); ++k) {
    if (hgeom::distance(tiles[k].center, z) < radius)
      return static_cast<std::ptrdiff_t>(k);
  }
  return -1;
}

TessellationPatch generate_patch(EdgePairing const &ep, unsigned depth)
{
  require_depth(depth, kPatchDepthCap, "generate_patch");

  auto const &poly = ep.polygon();
  TessellationPatch patch{poly.p(), poly.q(), depth, {}};
  patch.tiles.push_back(Tile{poly.center(), {}, 0, Isometry::identity()});

  CenterIndex index(poly.inradius());
  index.insert(poly.center(), 0);
  auto center_of = [&](std::size_t k) { return patch.tiles[k].center; };

  for_each_reduced_word(ep, depth, [&](Word const &word, Isometry const &g) {
    auto const c = g(poly.center());
    if (index.find(c, center_of) >= 0)
      return;
    index.insert(c, patch.tiles.size());
    patch.tiles.push_back(
        Tile{c, word, static_cast<unsigned>(word.size()), g});
  });

  sort_tiles(patch.tiles);
  return patch;
}

TessellationPatch reference_patch(int p, int q, unsigned depth)
{
  require_depth(depth, kPatchDepthCap, "reference_patch");

  auto const poly = hgeom::base_polygon(p, q);
  auto const turn_center =
      Isometry::rotation(2.0 * std::numbers::pi / poly.p());
  auto const turn_vertex =
      Isometry::rotation_about(poly.vertex(1), 2.0 * std::numbers::pi / q);

  // A^k B for k = 0..p-1 carries F onto each of its p neighbors.
  std::vector<Isometry> steps;
  std::vector<Word> step_words;
  auto a_power = Isometry::identity();
  for (unsigned k = 0; k < poly.p(); ++k) {
    steps.push_back(hgeom::compose_iso(a_power, turn_vertex));
    Word w(k, 1u);
    w.push_back(2u);
    step_words.push_back(std::move(w));
    a_power = hgeom::compose_iso(a_power, turn_center);
  }

  TessellationPatch patch{poly.p(), poly.q(), depth, {}};
  patch.tiles.push_back(Tile{poly.center(), {}, 0, Isometry::identity()});

  CenterIndex index(poly.inradius());
  index.insert(poly.center(), 0);
  auto center_of = [&](std::size_t k) { return patch.tiles[k].center; };

  std::size_t layer_begin = 0;
  for (unsigned d = 1; d <= depth; ++d) {
    auto const layer_end = patch.tiles.size();
    for (auto t = layer_begin; t < layer_end; ++t) {
      for (unsigned k = 0; k < steps.size(); ++k) {
        auto const g = hgeom::compose_iso(patch.tiles[t].element, steps[k]);
        auto const c = g(poly.center());
        if (index.find(c, center_of) >= 0)
          continue;
        Word word = patch.tiles[t].word;
        word.insert(word.end(), step_words[k].begin(), step_words[k].end());
        index.insert(c, patch.tiles.size());
        patch.tiles.push_back(Tile{c, std::move(word), d, g});
      }
    }
    layer_begin = layer_end;
  }

  sort_tiles(patch.tiles);
  return patch;
}

FreenessReport freeness_check(EdgePairing const &ep, unsigned depth)
{
  require_depth(depth, kFreenessDepthCap, "freeness_check");

  auto const &poly = ep.polygon();
  auto const generated = generate_patch(ep, depth);
  auto const reference =
      reference_patch(static_cast<int>(poly.p()), static_cast<int>(poly.q()),
                      depth);

  FreenessReport report;
  report.tile_counts = {generated.tiles.size(), reference.tiles.size()};

  CenterIndex index(poly.inradius());
  for (std::size_t k = 0; k < generated.tiles.size(); ++k)
    index.insert(generated.tiles[k].center, k);
  auto center_of = [&](std::size_t k) { return generated.tiles[k].center; };

  for (auto const &tile : reference.tiles) {
    if (index.find(tile.center, center_of) < 0)
      ++report.unmatched_reference_tiles;
  }
  report.transitive_ok = report.unmatched_reference_tiles == 0;

  // Any two reduced words that reach the same tile must be the same group
  // element; comparing each against the tile's stored word covers all pairs.
  bool all_found = true;
  for_each_reduced_word(ep, depth, [&](Word const &, Isometry const &g) {
    ++report.words_checked;
    auto const k = index.find(g(poly.center()), center_of);
    if (k < 0) {
      all_found = false;
      return;
    }
    report.max_coincidence_residual =
        std::max(report.max_coincidence_residual,
                 hgeom::action_distance(g, generated.tiles[k].element));
  });
  report.free_ok = all_found && report.max_coincidence_residual <
                                    hgeom::kIsometryEqualTol;
  return report;
}

} // namespace regtess::tess
