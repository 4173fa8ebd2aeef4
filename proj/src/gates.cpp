#include "qmeter/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qmeter {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865476;
}

ComplexMatrix hadamard() {
    return ComplexMatrix(2, {Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0},
                             Complex{kInvSqrt2, 0.0}, Complex{-kInvSqrt2, 0.0}});
}

ComplexMatrix phase_gate(double phi) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phase_gate: phi must be finite");
    }
    ComplexMatrix m(2);
    m.at(0, 0) = Complex{std::cos(phi / 2.0), -std::sin(phi / 2.0)};
    m.at(1, 1) = Complex{std::cos(phi / 2.0), std::sin(phi / 2.0)};
    return m;
}

ComplexMatrix rotation(const std::array<double, 3>& axis, double angle) {
    const double len =
        std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(len - 1.0) > kPhysicalityTolerance) {
        throw std::invalid_argument("rotation: axis must be a unit vector to 1e-9");
    }
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    // cos(a/2) I - i sin(a/2) (n . sigma)
    ComplexMatrix m(2);
    m.at(0, 0) = Complex{c, -s * axis[2]};
    m.at(0, 1) = Complex{-s * axis[1], -s * axis[0]};
    m.at(1, 0) = Complex{s * axis[1], -s * axis[0]};
    m.at(1, 1) = Complex{c, s * axis[2]};
    return m;
}

ComplexMatrix fredkin(double gamma) {
    ComplexMatrix m = ComplexMatrix::identity(8);
    const Complex phase{std::cos(gamma), std::sin(gamma)};
    // |1,0,1> <-> |1,1,0| (indices 5 and 6) with the extra phase.
    m.at(5, 5) = Complex{0.0, 0.0};
    m.at(6, 6) = Complex{0.0, 0.0};
    m.at(5, 6) = phase;
    m.at(6, 5) = phase;
    return m;
}

QubitState dephase_z(const QubitState& rho) {
    ComplexMatrix m = rho.matrix();
    m.at(0, 1) = Complex{0.0, 0.0};
    m.at(1, 0) = Complex{0.0, 0.0};
    return QubitState(std::move(m));
}

QubitState depolarize(const QubitState& rho, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("depolarize: p must lie in [0, 1]");
    }
    ComplexMatrix m = scale(Complex{1.0 - p, 0.0}, rho.matrix());
    m.at(0, 0) += Complex{0.5 * p, 0.0};
    m.at(1, 1) += Complex{0.5 * p, 0.0};
    return QubitState(std::move(m));
}

QubitState apply_unitary(const QubitState& rho, const ComplexMatrix& u) {
    return QubitState(matmul(matmul(u, rho.matrix()), dagger(u)));
}

}  // namespace qmeter
