#pragma once

#include <string>
#include <vector>

#include "tracts/direction.hpp"
#include "tracts/fvector.hpp"

namespace tracts {

// One marked direction on a unit circle. Labels are the ground elements whose
// coordinate points this way; never empty, stacked in ground order when
// several coordinates share the direction.
struct DiagramPoint {
  Dir dir;
  std::vector<std::string> labels;
};

// The direction data of one vector, points in counterclockwise angular order
// starting at the positive axis. A zero vector gives a circle with no points.
struct DiagramCircle {
  std::vector<DiagramPoint> points;
};

struct PhaseDiagram {
  std::vector<DiagramCircle> circles;
};

// One circle per input vector, in input order. Inputs must share a ground set
// and lie over a direction-valued tract (phase or tropical phase); anything
// else throws UnsupportedTractError. Zero coordinates are skipped.
PhaseDiagram build_phase_diagram(const std::vector<FVector>& vectors);

// Standalone SVG 1.1 document, circles laid out left to right. Placement is
// double precision with fixed two-decimal formatting, so equal diagrams render
// to identical bytes.
std::string render_svg(const PhaseDiagram& d);

void emit_phase_diagram(const std::vector<FVector>& vectors, const std::string& path);

}  // namespace tracts
