#pragma once

#include <algorithm>
#include <cmath>

#include "qmeter/rng.hpp"
#include "qmeter/states.hpp"

namespace qmeter::test {

// Direction uniform on the sphere, length uniform in [0, 1].
inline BlochVector random_bloch(SeededRng& rng, bool pure = false) {
    double x, y, z, n2;
    do {
        x = rng.normal();
        y = rng.normal();
        z = rng.normal();
        n2 = x * x + y * y + z * z;
    } while (n2 < 1e-12);
    const double n = std::sqrt(n2);
    const double r = pure ? 1.0 : rng.uniform();
    return BlochVector{r * x / n, r * y / n, r * z / n};
}

inline QubitState random_state(SeededRng& rng, bool pure = false) {
    return from_bloch(random_bloch(rng, pure));
}

// Hermitian principal square root of a positive-semidefinite 2x2 matrix,
// from the analytic eigendecomposition (trace/determinant form).  Test-only.
inline ComplexMatrix hermitian_sqrt_2x2(const ComplexMatrix& m) {
    const double t = trace(m).real();
    const double d = (m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)).real();
    const double gap = std::sqrt(std::max(0.0, t * t - 4.0 * d));
    const double mu1 = 0.5 * (t + gap);
    const double mu2 = 0.5 * (t - gap);
    const double s1 = std::sqrt(std::max(0.0, mu1));
    const double s2 = std::sqrt(std::max(0.0, mu2));

    if (gap < 1e-14) {
        return scale(Complex{s1, 0.0}, ComplexMatrix::identity(2));
    }
    // sqrt(M) = s1 P1 + s2 P2 with P1 = (M - mu2 I)/(mu1 - mu2), P2 = I - P1.
    ComplexMatrix p1 = m;
    p1.at(0, 0) -= Complex{mu2, 0.0};
    p1.at(1, 1) -= Complex{mu2, 0.0};
    p1 = scale(Complex{1.0 / gap, 0.0}, p1);
    ComplexMatrix out = scale(Complex{s2, 0.0}, ComplexMatrix::identity(2));
    out = add(out, scale(Complex{s1 - s2, 0.0}, p1));
    return out;
}

// Brute-force Uhlmann fidelity Tr[sqrt(sqrt(rho) sigma sqrt(rho))]^2 for
// 2x2 states through explicit matrix square roots; the test-side oracle for
// the closed form.
inline double fidelity_matrix_sqrt_oracle(const QubitState& rho, const QubitState& sigma) {
    const ComplexMatrix root = hermitian_sqrt_2x2(rho.matrix());
    const ComplexMatrix inner = matmul(matmul(root, sigma.matrix()), root);
    const double tr = trace(hermitian_sqrt_2x2(inner)).real();
    return tr * tr;
}

}  // namespace qmeter::test
