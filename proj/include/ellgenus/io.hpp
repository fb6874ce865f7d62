#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ellgenus/genus.hpp"
#include "ellgenus/isometry.hpp"
#include "ellgenus/lattice.hpp"
#include "ellgenus/oracle.hpp"
#include "ellgenus/reduction.hpp"
#include "ellgenus/surface.hpp"

namespace ellgenus {

using Json = nlohmann::ordered_json;

/// Parse a class given either densely ("1,0,-2,..." or "[1,0,-2,...]") or as
/// sparse name=coeff pairs ("k=4,e1=2,f1=2"). Names are the lattice's basis
/// names plus R, T (= e1, f1) and S (= f1 - e1). Unknown or repeated names
/// are errors.
HClass parse_class(const LatticePtr& lattice, std::string_view text);

/// Integer matrix from a JSON array of rows, or from an isometry object's
/// "matrix" field.
Matrix matrix_from_json(const Json& j);

Json to_json(const Lattice& l);
LatticePtr lattice_from_json(const Json& j);

Json to_json(const HClass& x);
/// The lattice is rebuilt from the spec string unless `lattice` is given,
/// in which case the spec string must describe the same form.
HClass class_from_json(const Json& j, const LatticePtr& lattice = nullptr);

Json to_json(const Isometry& m);
Isometry isometry_from_json(const Json& j, const LatticePtr& lattice = nullptr);

Json to_json(const ReductionResult& r);
ReductionResult reduction_from_json(const Json& j, const LatticePtr& lattice = nullptr);

Json to_json(const GenusVerdict& v);
Json to_json(const OrbitReport& r);
Json surface_info_json(const EllipticSurface& x);

}  // namespace ellgenus
