#pragma once

#include "lpc/fields.hpp"
#include "lpc/geometry.hpp"
#include "lpc/moment.hpp"
#include "lpc/params.hpp"
#include "lpc/star_domain.hpp"

#include <json.hpp>

#include <string>

namespace lpc::io {

using nlohmann::json;

json to_json(const Vec& v);
Vec vec_from_json(const json& j);
json to_json(const Mat& A);
Mat mat_from_json(const json& j);

json to_json(const ParamSet& ps);
json to_json(const ConstantBundle& c);

/// {"type": "polytope", "vertices": [...]}, {"type": "ellipsoid", "A": [[...]]},
/// {"type": "ball", "n", "radius"}, {"type": "cube", "n", "half"} or
/// {"type": "sampled", "n", "nodes" | "n_theta", "n_phi", "h": [...]}.
json to_json(const ConvexBody& K);
ConvexBody body_from_json(const json& j);

/// Reads a body from a file path, inline JSON, or one of the names
/// disk, ball, square, cube (in dimension n).
ConvexBody parse_body(const std::string& arg, int n = 2);

json to_json(const Profile& P);
Profile profile_from_json(const json& j);

/// Radial fields round-trip; grid fields serialize a summary only.
json to_json(const Field& f);
Field field_from_json(const json& j);

json to_json(const CompactDomain& M);

json to_json(const MomentBody& m);

}  // namespace lpc::io
