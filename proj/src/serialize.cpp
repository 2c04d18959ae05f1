#include "regtess/serialize.hpp"

#include <cstdio>

namespace regtess::serialize {

Json permutation_json(perm::Permutation const &x)
{
  Json j;
  j["degree"] = x.degree();
  j["images"] = x.images();
  return j;
}

Json point_json(hgeom::DiskPoint const &z)
{
  return Json::array({z.re(), z.im()});
}

Json isometry_json(hgeom::Isometry const &g)
{
  auto const n = g.sign_normalized();
  Json j;
  j["alpha"] = Json::array({n.alpha().real(), n.alpha().imag()});
  j["beta"] = Json::array({n.beta().real(), n.beta().imag()});
  return j;
}

Json witness_json(unsigned p, unsigned q,
                  std::optional<criterion::Witness> const &w)
{
  Json j;
  j["p"] = p;
  j["q"] = q;
  j["realizable"] = w.has_value();
  if (w) {
    j["m"] = w->m;
    j["sigma"] = permutation_json(w->sigma);
    j["sigma_cycles"] = perm::to_cycle_string(w->sigma);
    j["sigma_rho_cycles"] = perm::to_cycle_string(w->sigma_rho());
  } else {
    j["m"] = nullptr;
    j["sigma"] = nullptr;
    j["sigma_cycles"] = nullptr;
    j["sigma_rho_cycles"] = nullptr;
  }
  return j;
}

Json patch_json(tess::TessellationPatch const &patch)
{
  Json j;
  j["p"] = patch.p;
  j["q"] = patch.q;
  j["depth"] = patch.depth_limit;
  auto tiles = Json::array();
  for (auto const &tile : patch.tiles) {
    Json t;
    t["center"] = point_json(tile.center);
    t["word"] = tile.word;
    t["depth"] = tile.depth;
    tiles.push_back(std::move(t));
  }
  j["tiles"] = std::move(tiles);
  return j;
}

namespace {

void dump_into(Json const &j, std::string &out)
{
  switch (j.type()) {
  case Json::value_t::object: {
    out += '{';
    bool first = true;
    for (auto const &[key, value] : j.items()) {
      if (!first)
        out += ',';
      first = false;
      out += Json(key).dump();
      out += ':';
      dump_into(value, out);
    }
    out += '}';
    break;
  }
  case Json::value_t::array: {
    out += '[';
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k)
        out += ',';
      dump_into(j[k], out);
    }
    out += ']';
    break;
  }
  case Json::value_t::number_float: {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
    out += buf;
    break;
  }
  default:
    out += j.dump();
  }
}

} // namespace

std::string dump(Json const &j)
{
  std::string out;
  dump_into(j, out);
  return out;
}

} // namespace regtess::serialize
