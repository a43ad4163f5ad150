#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "opcat/cone.hpp"

namespace opcat::io {

using json = nlohmann::json;

// File forms (all JSON):
//   matrix    { "field": "real"|"complex", "rows": r, "cols": c,
//               "entries": [[re, im], ...] }   row-major; real entries carry im = 0
//   subspace  a matrix file of spanning vectors (columns); canonicalised on load
//   morphism  { "kind": "left"|"right"|"fh"|"dual", "src": subspace, "t": matrix,
//               "dst": subspace }              "fh" and "dual" appear on output of
//                                              functor application
//   cone      { "flavor": "fh"|"left"|"right", "gen": matrix }

json matrix_to_json(const Mat& a);
Mat matrix_from_json(const json& j);

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, const Tolerances& tol = {});

json morphism_to_json(const LeftMorphism& f);
json morphism_to_json(const RightMorphism& f);
json morphism_to_json(const SubspaceMap& f);
json morphism_to_json(const DualMap& f);

using AnyMorphism = std::variant<LeftMorphism, RightMorphism, SubspaceMap, DualMap>;

AnyMorphism morphism_from_json(const json& j, const Tolerances& tol = {});
LeftMorphism left_morphism_from_json(const json& j, const Tolerances& tol = {});
RightMorphism right_morphism_from_json(const json& j, const Tolerances& tol = {});

json cone_to_json(const Cone& c);
Cone cone_from_json(const json& j, const Tolerances& tol = {});

json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);

}  // namespace opcat::io
