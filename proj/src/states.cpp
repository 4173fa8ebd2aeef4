#include "qmeter/states.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qmeter {

double BlochVector::norm() const {
    return std::sqrt(rx * rx + ry * ry + rz * rz);
}

QubitState::QubitState(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.dim() != 2) {
        throw std::invalid_argument("QubitState: matrix must be 2x2");
    }
    if (!matrix_.is_hermitian(kMatrixTolerance)) {
        throw std::domain_error("QubitState: matrix is not Hermitian to 1e-12");
    }
    const Complex tr = trace(matrix_);
    if (std::abs(tr - Complex{1.0, 0.0}) > kMatrixTolerance) {
        throw std::domain_error("QubitState: trace differs from 1 by more than 1e-12");
    }
    // Eigenvalues of a Hermitian unit-trace 2x2 matrix are (1 +- r)/2;
    // requiring them in [-1e-9, 1 + 1e-9] is r <= 1 + 2e-9.
    const double bx = 2.0 * matrix_.at(0, 1).real();
    const double by = -2.0 * matrix_.at(0, 1).imag();
    const double bz = matrix_.at(0, 0).real() - matrix_.at(1, 1).real();
    const double r = std::sqrt(bx * bx + by * by + bz * bz);
    if (r > 1.0 + 2.0 * kPhysicalityTolerance) {
        throw std::domain_error("QubitState: negative eigenvalue beyond tolerance (unphysical)");
    }
}

QubitState from_bloch(const BlochVector& r) {
    if (r.norm() > 1.0 + kPhysicalityTolerance) {
        throw std::domain_error("from_bloch: Bloch vector longer than 1 (unphysical state)");
    }
    ComplexMatrix m(2, {Complex{0.5 * (1.0 + r.rz), 0.0}, Complex{0.5 * r.rx, -0.5 * r.ry},
                        Complex{0.5 * r.rx, 0.5 * r.ry}, Complex{0.5 * (1.0 - r.rz), 0.0}});
    return QubitState(std::move(m));
}

BlochVector to_bloch(const QubitState& rho) {
    const ComplexMatrix& m = rho.matrix();
    BlochVector r;
    r.rx = 2.0 * m.at(0, 1).real();
    r.ry = -2.0 * m.at(0, 1).imag();
    r.rz = m.at(0, 0).real() - m.at(1, 1).real();
    return r;
}

double purity_length(const QubitState& rho) {
    return to_bloch(rho).norm();
}

EigenPair eigen(const QubitState& rho) {
    const BlochVector r = to_bloch(rho);
    const double len = r.norm();
    EigenPair out;
    out.lambda1 = 0.5 * (1.0 + len);
    out.lambda2 = 0.5 * (1.0 - len);
    if (len < 1e-12) {
        out.degenerate = true;
        out.axis1 = BlochVector{0.0, 0.0, 1.0};
        out.axis2 = BlochVector{0.0, 0.0, -1.0};
    } else {
        out.axis1 = BlochVector{r.rx / len, r.ry / len, r.rz / len};
        out.axis2 = BlochVector{-out.axis1.rx, -out.axis1.ry, -out.axis1.rz};
    }
    return out;
}

namespace {

double real_det(const ComplexMatrix& m) {
    return (m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)).real();
}

}  // namespace

double uhlmann_fidelity(const QubitState& rho, const QubitState& sigma) {
    const double cross = overlap(rho, sigma);
    const double da = std::max(0.0, real_det(rho.matrix()));
    const double db = std::max(0.0, real_det(sigma.matrix()));
    return cross + 2.0 * std::sqrt(da * db);
}

double overlap(const QubitState& rho, const QubitState& sigma) {
    return trace(matmul(rho.matrix(), sigma.matrix())).real();
}

}  // namespace qmeter
