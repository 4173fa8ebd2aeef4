#pragma once

#include "qmeter/complex_matrix.hpp"

namespace qmeter {

// Real 3-vector r with rho = (I + r.sigma)/2.  Its length is the purity
// measure: 1 for pure states, 0 for the maximally mixed state.
struct BlochVector {
    double rx = 0.0;
    double ry = 0.0;
    double rz = 0.0;

    double norm() const;
};

// Physicality slack on |r| and on density-matrix eigenvalues; absorbs
// round-off from preparation chains while rejecting genuinely unphysical
// inputs.
inline constexpr double kPhysicalityTolerance = 1e-9;

// Single-qubit density matrix.  Construction validates Hermiticity (1e-12),
// unit trace (1e-12) and eigenvalues within [-1e-9, 1 + 1e-9].
class QubitState {
public:
    explicit QubitState(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const { return matrix_; }

private:
    ComplexMatrix matrix_;
};

// Spectral decomposition of a qubit state: lambda1 >= lambda2 with
// lambda1 + lambda2 = 1, eigenvector directions antipodal unit Bloch
// vectors.  `degenerate` is set when r < 1e-12 and the canonical +-z
// directions are reported.
struct EigenPair {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    BlochVector axis1;
    BlochVector axis2;
    bool degenerate = false;
};

QubitState from_bloch(const BlochVector& r);
BlochVector to_bloch(const QubitState& rho);

// |r| of the state's Bloch vector.
double purity_length(const QubitState& rho);

// Closed form: lambda = (1 +- r)/2 with eigenvectors +-r/|r|.
EigenPair eigen(const QubitState& rho);

// Qubit closed form F = Tr[rho.sigma] + 2 sqrt(det rho . det sigma).
// Tiny negative determinants from round-off are clamped to 0.
double uhlmann_fidelity(const QubitState& rho, const QubitState& sigma);

// Tr[rho.sigma], real for Hermitian inputs; equals (1 + ra rb cos theta)/2
// in Bloch form.
double overlap(const QubitState& rho, const QubitState& sigma);

}  // namespace qmeter
