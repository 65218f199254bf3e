#pragma once

#include <string>

#include "json.hpp"
#include "qadj/chars.hpp"
#include "qadj/hopf.hpp"
#include "qadj/point.hpp"
#include "qadj/subspace.hpp"

namespace qadj {

using Json = nlohmann::ordered_json;

/// Generator order, tau normalization, sphere rescaling and the other
/// conventions every report carries.
Json conventions_json();

/// {"n": 2, "entries": [["2","0"],["0","3"]]}; entries may be strings in the
/// scalar grammar or plain integers. Validated as a point with symbolic q.
Point<RatFunc> point_from_json(const Json& j);

/// Inline JSON when the argument starts with '{', otherwise a file path.
Point<RatFunc> load_point(const std::string& arg);

Json point_json(const Point<RatFunc>& xi);

/// {"text": "z^2 + 1 + z^-2", "terms": [[[2], 1], ...]}
Json character_json(const Character& c);

/// Ambient tag, det power, basis monomials and the RREF rows as scalar text.
template <class F>
Json subspace_json(QuantumGroup<F>& G, const TruncatedSubspace<F>& s);

}  // namespace qadj
