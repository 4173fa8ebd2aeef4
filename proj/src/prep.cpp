#include "qmeter/prep.hpp"

#include <cmath>
#include <stdexcept>

#include "qmeter/gates.hpp"

namespace qmeter {

namespace {

QubitState apply_step(const QubitState& rho, const PreparationStep& step) {
    if (step.kind == PreparationStep::Kind::Dephase) {
        return dephase_z(rho);
    }
    return apply_unitary(rho, rotation(step.axis, step.angle));
}

}  // namespace

PreparedState prepare(const BlochVector& target) {
    const double r = target.norm();
    if (r > 1.0 + kPhysicalityTolerance) {
        throw std::domain_error("prepare: target Bloch vector longer than 1 (unphysical)");
    }

    PreparationRecipe recipe;
    const double shorten_angle = std::acos(std::min(r, 1.0));
    recipe.steps.push_back({PreparationStep::Kind::Rotation, {1.0, 0.0, 0.0}, shorten_angle});
    recipe.steps.push_back({PreparationStep::Kind::Dephase, {0.0, 0.0, 1.0}, 0.0});

    PreparationStep tilt{PreparationStep::Kind::Rotation, {1.0, 0.0, 0.0}, 0.0};
    if (r >= 1e-15) {
        const double tx = target.rx / r;
        const double ty = target.ry / r;
        const double tz = target.rz / r;
        const double transverse = std::hypot(tx, ty);
        if (transverse < 1e-15) {
            // On the z axis: identity for +z, rotate about x by pi for -z.
            tilt.angle = tz > 0.0 ? 0.0 : 3.141592653589793;
        } else {
            tilt.axis = {-ty / transverse, tx / transverse, 0.0};
            tilt.angle = std::atan2(transverse, tz);
        }
    }
    recipe.steps.push_back(tilt);

    QubitState state = from_bloch(BlochVector{0.0, 0.0, 1.0});
    for (const auto& step : recipe.steps) {
        state = apply_step(state, step);
    }
    return PreparedState{state, recipe};
}

QubitState prepare_angles(double r, double theta, double phi) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::domain_error("prepare_angles: r must lie in [0, 1]");
    }
    return from_bloch(BlochVector{r * std::cos(theta) * std::cos(phi),
                                  r * std::cos(theta) * std::sin(phi),
                                  r * std::sin(theta)});
}

}  // namespace qmeter
