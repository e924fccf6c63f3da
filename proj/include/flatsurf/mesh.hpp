#pragma once

// Tessellation of a sampled grid into a triangle mesh, plus OBJ / JSON
// serialization.  Cells are triangulated with the fixed lower-left to
// upper-right diagonal and consistent winding; a cell is dropped when any
// corner is masked or when the singularity margin changes sign across it
// (faces never bridge the singular curves).

#include <array>
#include <iosfwd>
#include <string>

#include "flatsurf/grid.hpp"
#include "flatsurf/projection.hpp"

namespace flatsurf {

struct SurfaceMesh {
    bool projected = false;
    std::vector<Vec4> vertices4;               // full grid, row-major; zeros where failed
    std::vector<Vec3> vertices3;               // filled when projected
    std::vector<std::array<long long, 3>> faces;  // ids into the full vertex arrays
    std::vector<std::uint8_t> mask;            // 1 = masked; never referenced by faces
    struct Attr {
        std::vector<double> psi1, psi2, lt1, lt2, margin;
    } attr;
    long long pole_count = 0;  // vertices masked by the projection pole guard

    long long masked_count() const;
};

SurfaceMesh tessellate(const SampledField& field, const ProjectionSpec& projection);

// Connected components of the face graph (vertices shared between faces).
int component_count(const SurfaceMesh& mesh);

// OBJ with only `v x y z` (17 significant digits) and 1-indexed `f i j k`
// lines; masked vertices are omitted and face indices remapped.  Requires a
// projected, non-empty mesh.
void export_obj(const SurfaceMesh& mesh, std::ostream& out);
std::string obj_string(const SurfaceMesh& mesh);

// Full-precision JSON: parameters, grid, 4-D vertices, mask, faces (full
// vertex ids), and per-vertex attributes.
std::string mesh_json_string(const SurfaceMesh& mesh, const SampledField& field);

}  // namespace flatsurf
