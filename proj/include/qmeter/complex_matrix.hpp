#pragma once

#include <complex>
#include <vector>

namespace qmeter {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.  Everything in this library lives
// in dimension 2, 4 or 8; no sparse or large-N support is intended.
class ComplexMatrix {
public:
    // Zero matrix of the given dimension.
    explicit ComplexMatrix(int dim);

    // From row-major entries; entries.size() must equal dim*dim.
    ComplexMatrix(int dim, std::vector<Complex> entries);

    static ComplexMatrix identity(int dim);

    // Constructs and verifies M == M^dagger to 1e-12; throws otherwise.
    static ComplexMatrix hermitian(int dim, std::vector<Complex> entries);

    int dim() const { return dim_; }

    Complex& at(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
    const Complex& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    bool is_hermitian(double tol) const;

private:
    int dim_;
    std::vector<Complex> entries_;
};

// Default tolerance for elementwise equality checks throughout the library.
inline constexpr double kMatrixTolerance = 1e-12;

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& a);
ComplexMatrix dagger(const ComplexMatrix& a);

// Traces out the two least-significant qubits of an 8x8 matrix, keeping the
// first (most significant) one: result[i][j] = sum_k a[4i+k][4j+k], k=0..3.
ComplexMatrix partial_trace_keep_first(const ComplexMatrix& a);

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex factor, const ComplexMatrix& a);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kMatrixTolerance);

// Largest elementwise |a - b|; infinity norm of the difference.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Pauli matrices in the standard unrescaled convention (eigenvalues +-1).
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

}  // namespace qmeter
