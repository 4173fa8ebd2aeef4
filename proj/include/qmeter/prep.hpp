#pragma once

#include <array>
#include <vector>

#include "qmeter/states.hpp"

namespace qmeter {

// One step of the preparation pipeline.  Rotations record axis and angle;
// the dephasing step is the single non-unitary purity reduction.
struct PreparationStep {
    enum class Kind { Rotation, Dephase };
    Kind kind = Kind::Rotation;
    std::array<double, 3> axis{1.0, 0.0, 0.0};
    double angle = 0.0;
};

struct PreparationRecipe {
    std::vector<PreparationStep> steps;
};

struct PreparedState {
    QubitState state;
    PreparationRecipe recipe;
};

// Rotate-dephase-rotate pipeline from |0><0| to an arbitrary target:
//   (i)  rotate about x by arccos(|target|), putting |target| on the
//        z-component;
//   (ii) dephase in z, shortening the Bloch vector to |target|;
//   (iii) rotate +z onto the target direction (axis z x t, angle = polar
//        angle of t).
// A target at the -z pole uses rotation about x by pi; a zero target skips
// the tilt.  The returned state equals from_bloch(target) to 1e-10.
PreparedState prepare(const BlochVector& target);

// State with Bloch vector r * (cos theta cos phi, cos theta sin phi,
// sin theta) -- theta is the elevation above the equator, phi the azimuth.
QubitState prepare_angles(double r, double theta, double phi);

}  // namespace qmeter
