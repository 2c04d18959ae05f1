#ifndef REGTESS_SERIALIZE_HPP
#define REGTESS_SERIALIZE_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "regtess/criterion.hpp"
#include "regtess/hgeom.hpp"
#include "regtess/perm.hpp"
#include "regtess/tess.hpp"

namespace regtess::serialize {

using Json = nlohmann::ordered_json;

/// {"degree": p, "images": [...]}
Json permutation_json(perm::Permutation const &x);

/// [re, im]
Json point_json(hgeom::DiskPoint const &z);

/// {"alpha": [re, im], "beta": [re, im]} after sign normalization.
Json isometry_json(hgeom::Isometry const &g);

/// Witness certificate; an empty witness serializes with null fields and
/// "realizable": false.
Json witness_json(unsigned p, unsigned q,
                  std::optional<criterion::Witness> const &w);

/// {"p","q","depth","tiles":[{"center","word","depth"}...]}
Json patch_json(tess::TessellationPatch const &patch);

/// Compact text with every float printed as %.17g; object keys keep
/// insertion order, so output is byte-stable.
std::string dump(Json const &j);

} // namespace regtess::serialize

#endif // REGTESS_SERIALIZE_HPP
