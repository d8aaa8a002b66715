#pragma once

#include <ostream>
#include <vector>

#include "nodallab/circles.hpp"
#include "nodallab/contour.hpp"

namespace nodallab {

/// Chord diagram in the projection plane: unit circle, both chord families,
/// interior crossings as dots and boundary crossings as rings. Presentation only.
void write_chord_diagram_svg(std::ostream& os, const ChordDiagram& d);

/// Stereographic projection (from the north pole) of nodal contours, with certified
/// common zeros marked.
void write_contours_svg(std::ostream& os, const std::vector<SphereContour>& contours,
                        const std::vector<CommonZero>& zeros);

} // namespace nodallab
