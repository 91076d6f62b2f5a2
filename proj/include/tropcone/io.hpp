#ifndef TROPCONE_IO_HPP
#define TROPCONE_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "tropcone/polar.hpp"

namespace tropcone::io {

using json = nlohmann::json;

// Scalars travel as strings: "p/q", integer strings, or "-inf".
json vector_to_json(const TropVector& v);
TropVector vector_from_json(const json& j, int dim);

// {"kind":"cone","dim":n,"generators":[[...n scalars...],...]}
json cone_to_json(const Cone& V);
Cone cone_from_json(const json& j);

// {"kind":"point","dim":n,"coords":[...]}
json point_to_json(const TropVector& x);
TropVector point_from_json(const json& j);

// One half-space: {"lhs":{"2":"6","4":"-1/2"},"rhs":{"1":"8","3":"7/2"}}
// with 1-based coordinate keys; the disjoint sparse maps mirror the
// canonical I/J form.
json halfspace_to_json(const HalfSpace& H);
HalfSpace halfspace_from_json(const json& j, int dim);

// {"kind":"halfspaces","dim":n,"halfspaces":[...]}
json halfspaces_to_json(const std::vector<HalfSpace>& hs, int dim);
std::vector<HalfSpace> halfspaces_from_json(const json& j, int* dim_out = nullptr);

// {"kind":"polyhedron","dim":n,"points":[[...]],"rays":[[...]]}
json polyhedron_to_json(const Polyhedron& P);
Polyhedron polyhedron_from_json(const json& j);

// {"kind":"polar","dim":n,"vectors":[{"lhs":[...],"rhs":[...]},...]}
json polar_to_json(const std::vector<PolarVector>& W, int dim);
std::vector<PolarVector> polar_from_json(const json& j, int* dim_out = nullptr);

// Canonical output forms: projectively normalized, lexicographically sorted.
std::vector<TropVector> canonical_rays(const Cone& V);
void sort_halfspaces(std::vector<HalfSpace>& hs);

} // namespace tropcone::io

#endif
