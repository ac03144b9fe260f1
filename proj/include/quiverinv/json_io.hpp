#ifndef QUIVERINV_JSON_IO_HPP
#define QUIVERINV_JSON_IO_HPP

#include <json.hpp>

#include "quiverinv/invariant_ring.hpp"
#include "quiverinv/invariants.hpp"
#include "quiverinv/normal_form.hpp"
#include "quiverinv/quiver.hpp"
#include "quiverinv/wreath.hpp"

namespace quiverinv {

// Wire formats, used identically by the CLI and the file interfaces. Keys are
// emitted in a fixed order so reports are byte-reproducible.
using Json = nlohmann::ordered_json;

/// Matrix encoding used repo-wide: {"n": n, "entries": [[re, im], ...]},
/// row-major, n^2 pairs.
Json to_json(const SquareMatrix& a);
SquareMatrix matrix_from_json(const Json& j);

/// {"m":…, "n":…, "x":[matrix…]} and, on the doubled side, "y":[matrix…].
Json to_json(const RepPoint& p);
Json to_json(const DoubleRepPoint& p);
RepPoint rep_point_from_json(const Json& j);
DoubleRepPoint double_rep_point_from_json(const Json& j);
bool json_is_double_point(const Json& j);

/// {"n":…, "m":…, "sigma":[1-based images], "a":[ints]}.
Json to_json(const WreathElement& w);
WreathElement wreath_from_json(const Json& j);

/// {"z": [[re,im]…], "witness": [matrix…]}.
Json to_json(const CanonicalL& c);

Json to_json(const Z1NormalForm& nf);

/// {"n","m","d","R","molien_dim","span_dim","verdict"}.
Json to_json(const GenerationReport& r);

/// Coefficients as exact rational strings.
Json to_json(const MolienSeries& s);

/// {"type":"charpoly","k":…} or {"type":"traceword","r":…,"s":…}.
Json to_json(const InvariantDescriptor& d);
InvariantDescriptor invariant_descriptor_from_json(const Json& j);

}  // namespace quiverinv

#endif
