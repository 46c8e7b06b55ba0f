#pragma once

#include "cohodge/complex_io.hpp"

namespace cohodge::corpus {

/// Two vertices joined by one edge; scalars E = (0, ln 2) at beta = 1.
ComplexDocument twoVertexEdge();

/// Two vertices joined by three parallel edges.
ComplexDocument thetaGraph();

/// One vertex with one loop (zero boundary).
ComplexDocument circleGraph();

/// Complete graph on four vertices.
ComplexDocument k4Graph();

/**
 * The 2x2 cellulated torus: 4 vertices, 8 edges, 4 faces. Face orientations
 * are chosen so the alternating meridian jump sequence across e1 and e2
 * produces xhat + k*boundary(e1) - (k or k-1)*boundary(e2) literally.
 * Bundled cycles: "meridian" and "longitude".
 */
ComplexDocument torus();

/// The mod-2 Moore complex: boundary Z -> Z given by multiplication by 2.
ComplexDocument mooreMod2();

/// Deterministic random 3-complex (degrees 0..3) for the bundled corpus.
ComplexDocument randomThreeComplex(unsigned long seed, const char* name);

/// Every bundled document, in a fixed order.
std::vector<ComplexDocument> all();

}  // namespace cohodge::corpus
