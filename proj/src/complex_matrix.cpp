#include "qmeter/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qmeter {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim <= 0) {
        throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    }
    entries_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim <= 0) {
        throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    }
    if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
        throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim * dim) +
                                    " entries, got " + std::to_string(entries_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m.at(i, i) = Complex{1.0, 0.0};
    }
    return m;
}

ComplexMatrix ComplexMatrix::hermitian(int dim, std::vector<Complex> entries) {
    ComplexMatrix m(dim, std::move(entries));
    if (!m.is_hermitian(kMatrixTolerance)) {
        throw std::invalid_argument("ComplexMatrix::hermitian: matrix is not Hermitian to 1e-12");
    }
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i) {
        for (int j = i; j < dim_; ++j) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matmul: dimension mismatch (" + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()) + ")");
    }
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int ad = a.dim();
    const int bd = b.dim();
    ComplexMatrix out(ad * bd);
    for (int i = 0; i < ad; ++i) {
        for (int j = 0; j < ad; ++j) {
            const Complex aij = a.at(i, j);
            for (int k = 0; k < bd; ++k) {
                for (int l = 0; l < bd; ++l) {
                    out.at(i * bd + k, j * bd + l) = aij * b.at(k, l);
                }
            }
        }
    }
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex t{0.0, 0.0};
    for (int i = 0; i < a.dim(); ++i) {
        t += a.at(i, i);
    }
    return t;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.at(i, j) = std::conj(a.at(j, i));
        }
    }
    return out;
}

ComplexMatrix partial_trace_keep_first(const ComplexMatrix& a) {
    if (a.dim() != 8) {
        throw std::invalid_argument("partial_trace_keep_first: expected an 8x8 matrix, got dim " +
                                    std::to_string(a.dim()));
    }
    ComplexMatrix out(2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex sum{0.0, 0.0};
            for (int k = 0; k < 4; ++k) {
                sum += a.at(4 * i + k, 4 * j + k);
            }
            out.at(i, j) = sum;
        }
    }
    return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("add: dimension mismatch");
    }
    ComplexMatrix out = a;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            out.at(i, j) += b.at(i, j);
        }
    }
    return out;
}

ComplexMatrix scale(Complex factor, const ComplexMatrix& a) {
    ComplexMatrix out = a;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            out.at(i, j) *= factor;
        }
    }
    return out;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return max_abs_diff(a, b) <= tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
        }
    }
    return worst;
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m(2, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m(2, {{0.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}, {0.0, 0.0}});
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m(2, {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}});
    return m;
}

const ComplexMatrix& identity2() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}

}  // namespace qmeter
