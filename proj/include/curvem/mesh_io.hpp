#pragma once

#include <string>

#include "curvem/mesh.hpp"

namespace curvem {

// Serialized form: {"vertices":[[x,y],...], "curves":[{...}], "edges":[{"v":[i,j],
// "curve":id|null,"t":[t0,t1]|null}], "elements":[{"edges":[+-(edge_id+1),...],
// "kappa":r}]}. Reals carry 17 significant digits so doubles round-trip exactly;
// key and element order are deterministic.
std::string mesh_to_json(const Mesh& mesh);
void mesh_write(const Mesh& mesh, const std::string& path);

// Parses, then finalizes. Schema violations raise ParseError with a JSON
// pointer to the offending node; structural defects raise MeshError.
Mesh mesh_from_json(const std::string& text, const std::string& origin = "<string>");
Mesh mesh_read(const std::string& path);

}  // namespace curvem
