#include <cmath>

#include "doctest.h"
#include "qmeter/states.hpp"
#include "support.hpp"

using namespace qmeter;
using qmeter::test::random_bloch;
using qmeter::test::random_state;

namespace {
constexpr double kSqrt2Over2 = 0.7071067811865476;
}

TEST_CASE("from_bloch poles and the maximally mixed state") {
    const QubitState up = from_bloch({0.0, 0.0, 1.0});
    CHECK(up.matrix().at(0, 0) == Complex{1.0, 0.0});
    CHECK(up.matrix().at(1, 1) == Complex{0.0, 0.0});

    const QubitState mixed = from_bloch({0.0, 0.0, 0.0});
    CHECK(mixed.matrix().at(0, 0) == Complex{0.5, 0.0});
    CHECK(mixed.matrix().at(0, 1) == Complex{0.0, 0.0});
}

TEST_CASE("from_bloch builds I/2 + (sqrt2/4) sigma_z") {
    const QubitState s = from_bloch({0.0, 0.0, kSqrt2Over2});
    CHECK(std::abs(s.matrix().at(0, 0).real() - (0.5 + kSqrt2Over2 / 2.0)) < 1e-15);
    CHECK(std::abs(s.matrix().at(1, 1).real() - (0.5 - kSqrt2Over2 / 2.0)) < 1e-15);
}

TEST_CASE("from_bloch rejects unphysical vectors") {
    CHECK_THROWS_AS(from_bloch({0.8, 0.8, 0.8}), std::domain_error);
    CHECK_NOTHROW(from_bloch({0.0, 0.0, 1.0 + 1e-10}));  // inside the slack
}

TEST_CASE("QubitState validation rejects bad matrices") {
    // trace 2
    CHECK_THROWS_AS(QubitState(ComplexMatrix::identity(2)), std::domain_error);
    // not Hermitian
    CHECK_THROWS_AS(QubitState(ComplexMatrix(
                        2, {Complex{0.5, 0.0}, Complex{0.3, 0.0}, Complex{0.1, 0.0},
                            Complex{0.5, 0.0}})),
                    std::domain_error);
    // negative eigenvalue (Bloch length sqrt(2))
    CHECK_THROWS_AS(QubitState(ComplexMatrix(
                        2, {Complex{1.0, 0.0}, Complex{0.5, 0.0}, Complex{0.5, 0.0},
                            Complex{0.0, 0.0}})),
                    std::domain_error);
    CHECK_THROWS_AS(QubitState(ComplexMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("to_bloch reads components via the trace rule") {
    CHECK(to_bloch(from_bloch({0.0, 0.0, 1.0})).rz == 1.0);

    // I/2 + sigma_x/4 -> (0.5, 0, 0); the oracle is Tr[rho sigma_alpha].
    ComplexMatrix m(2, {Complex{0.5, 0.0}, Complex{0.25, 0.0}, Complex{0.25, 0.0},
                        Complex{0.5, 0.0}});
    const QubitState s(m);
    const BlochVector b = to_bloch(s);
    CHECK(std::abs(b.rx - trace(matmul(s.matrix(), pauli_x())).real()) < 1e-15);
    CHECK(std::abs(b.ry - trace(matmul(s.matrix(), pauli_y())).real()) < 1e-15);
    CHECK(std::abs(b.rz - trace(matmul(s.matrix(), pauli_z())).real()) < 1e-15);
    CHECK(b.rx == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(b.ry == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(b.rz == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("Bloch round trip is the identity") {
    SeededRng rng(11);
    for (int i = 0; i < 100; ++i) {
        const BlochVector b = random_bloch(rng);
        const BlochVector back = to_bloch(from_bloch(b));
        CHECK(std::abs(back.rx - b.rx) < 1e-12);
        CHECK(std::abs(back.ry - b.ry) < 1e-12);
        CHECK(std::abs(back.rz - b.rz) < 1e-12);
    }
}

TEST_CASE("purity length") {
    CHECK(purity_length(from_bloch({0.0, 0.0, 1.0})) == 1.0);
    CHECK(purity_length(from_bloch({0.0, 0.0, 0.0})) == 0.0);

    const double r = std::cos(3.141592653589793 / 6.0);  // sqrt(3)/2
    CHECK(purity_length(from_bloch({0.0, 0.0, r})) ==
          doctest::Approx(0.8660254037844387).epsilon(1e-12));
}

TEST_CASE("eigen closed form on the showcase state") {
    const EigenPair e = eigen(from_bloch({0.0, 0.0, kSqrt2Over2}));
    CHECK(e.lambda1 == doctest::Approx(0.8535533905932737).epsilon(1e-12));
    CHECK(e.lambda2 == doctest::Approx(0.1464466094067262).epsilon(1e-12));
    CHECK(e.axis1.rz == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.axis2.rz == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_FALSE(e.degenerate);
}

TEST_CASE("eigen of a pure and of the degenerate state") {
    const EigenPair pure = eigen(from_bloch({0.0, 0.0, 1.0}));
    CHECK(pure.lambda1 == 1.0);
    CHECK(pure.lambda2 == 0.0);

    const EigenPair flat = eigen(from_bloch({0.0, 0.0, 0.0}));
    CHECK(flat.lambda1 == 0.5);
    CHECK(flat.lambda2 == 0.5);
    CHECK(flat.degenerate);
    CHECK(flat.axis1.rz == 1.0);
    CHECK(flat.axis2.rz == -1.0);
}

TEST_CASE("eigen invariants: sum to one, antipodal axes, state reconstruction") {
    SeededRng rng(12);
    for (int i = 0; i < 50; ++i) {
        const QubitState s = random_state(rng);
        const EigenPair e = eigen(s);
        CHECK(std::abs(e.lambda1 + e.lambda2 - 1.0) < 1e-12);
        CHECK(e.lambda1 >= e.lambda2);
        CHECK(std::abs(e.axis1.rx + e.axis2.rx) < 1e-9);
        CHECK(std::abs(e.axis1.ry + e.axis2.ry) < 1e-9);
        CHECK(std::abs(e.axis1.rz + e.axis2.rz) < 1e-9);
        CHECK(std::abs(e.axis1.norm() - 1.0) < 1e-9);

        // rho = lambda1 P1 + lambda2 P2 from the eigenvector directions.
        const ComplexMatrix p1 = from_bloch(e.axis1).matrix();
        const ComplexMatrix p2 = from_bloch(e.axis2).matrix();
        const ComplexMatrix rebuilt = add(scale(Complex{e.lambda1, 0.0}, p1),
                                          scale(Complex{e.lambda2, 0.0}, p2));
        CHECK(max_abs_diff(rebuilt, s.matrix()) < 1e-10);
    }
}

TEST_CASE("uhlmann fidelity closed form on pinned cases") {
    const QubitState up = from_bloch({0.0, 0.0, 1.0});
    const QubitState down = from_bloch({0.0, 0.0, -1.0});
    const QubitState mixed = from_bloch({0.0, 0.0, 0.0});

    CHECK(uhlmann_fidelity(up, up) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(uhlmann_fidelity(up, down) == doctest::Approx(0.0).epsilon(1e-12));

    // F(|0><0|, I/2) = 0.5, cross-checked against the matrix-square-root
    // oracle on this instance.
    CHECK(uhlmann_fidelity(up, mixed) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(qmeter::test::fidelity_matrix_sqrt_oracle(up, mixed) ==
          doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("uhlmann fidelity agrees with the matrix-square-root oracle") {
    SeededRng rng(13);
    for (int i = 0; i < 200; ++i) {
        const QubitState a = random_state(rng);
        const QubitState b = random_state(rng);
        CHECK(std::abs(uhlmann_fidelity(a, b) -
                       qmeter::test::fidelity_matrix_sqrt_oracle(a, b)) < 1e-9);
    }
}

TEST_CASE("overlap endpoints and a mixed-purity point") {
    const QubitState up = from_bloch({0.0, 0.0, 1.0});
    const QubitState down = from_bloch({0.0, 0.0, -1.0});
    CHECK(overlap(up, up) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(overlap(up, down) == doctest::Approx(0.0).epsilon(1e-12));

    // ra=1, rb=0.5, theta=pi/3 -> (1 + 0.5 cos(pi/3))/2 = 0.625 by the
    // direct 2x2 trace.
    const double theta = 3.141592653589793 / 3.0;
    const QubitState b = from_bloch({0.5 * std::sin(theta), 0.0, 0.5 * std::cos(theta)});
    const double direct = trace(matmul(up.matrix(), b.matrix())).real();
    CHECK(overlap(up, b) == doctest::Approx(direct).epsilon(1e-15));
    CHECK(overlap(up, b) == doctest::Approx(0.625).epsilon(1e-12));
}

TEST_CASE("overlap symmetry and Bloch form on random pairs") {
    SeededRng rng(14);
    for (int i = 0; i < 100; ++i) {
        const BlochVector u = random_bloch(rng);
        const BlochVector w = random_bloch(rng);
        const QubitState a = from_bloch(u);
        const QubitState b = from_bloch(w);

        CHECK(std::abs(overlap(a, b) - overlap(b, a)) < 1e-12);

        const double bloch_form = 0.5 * (1.0 + u.rx * w.rx + u.ry * w.ry + u.rz * w.rz);
        CHECK(std::abs(overlap(a, b) - bloch_form) < 1e-12);

        const double r = purity_length(a);
        CHECK(std::abs(overlap(a, a) - 0.5 * (1.0 + r * r)) < 1e-12);
    }
}
