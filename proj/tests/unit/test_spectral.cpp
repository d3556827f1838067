#include <doctest.h>

#include <cmath>
#include <limits>

#include "qlc/error.hpp"
#include "qlc/spectral.hpp"
#include "test_support.hpp"

using namespace qlc;
using qlc::testing::random_projector;
using qlc::testing::random_symmetric;

namespace {

double orthonormality_error(const Matrix& v) {
    return max_abs_diff(v.transposed() * v, Matrix::identity(v.cols()));
}

double reconstruction_error(const EigenDecomposition& eig, const SymMatrix& m) {
    const std::size_t n = eig.dim();
    Matrix scaled_v = eig.eigenvectors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) scaled_v(i, k) *= eig.eigenvalues[k];
    return max_abs_diff(scaled_v * eig.eigenvectors.transposed(), m.matrix());
}

}  // namespace

TEST_CASE("SymMatrix symmetrizes and rejects non-finite entries") {
    const SymMatrix s = SymMatrix(Matrix{{1.0, 2.0}, {4.0, 3.0}});
    CHECK(s(0, 1) == 3.0);
    CHECK(s(1, 0) == 3.0);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
        SymMatrix bad(Matrix{{1.0, nan}, {0.0, 1.0}});
        FAIL("expected InvalidMatrix");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidMatrix);
    }
}

TEST_CASE("sym_eig of a diagonal matrix") {
    const auto eig = sym_eig(SymMatrix{{3.0, 0.0}, {0.0, 1.0}});
    CHECK(eig.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(max_abs_diff(eig.eigenvectors, Matrix::identity(2)) < 1e-15);
}

TEST_CASE("sym_eig of the swap matrix") {
    const auto eig = sym_eig(SymMatrix{{0.0, 1.0}, {1.0, 0.0}});
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));
    // Sign convention: first significant component positive.
    CHECK(std::abs(eig.eigenvectors(0, 0) - h) < 1e-14);
    CHECK(std::abs(eig.eigenvectors(1, 0) - h) < 1e-14);
    CHECK(std::abs(eig.eigenvectors(0, 1) - h) < 1e-14);
    CHECK(std::abs(eig.eigenvectors(1, 1) + h) < 1e-14);
}

TEST_CASE("sym_eig of the identity satisfies the invariants") {
    const SymMatrix id = SymMatrix::identity(3);
    const auto eig = sym_eig(id);
    for (double l : eig.eigenvalues) CHECK(l == doctest::Approx(1.0));
    CHECK(orthonormality_error(eig.eigenvectors) <= 1e-10);
    CHECK(reconstruction_error(eig, id) <= 1e-9 * 2.0);
}

TEST_CASE("sym_eig on 1000 random symmetric matrices") {
    SeededGenerator gen(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = qlc::testing::uniform_index(gen, 1, 8);
        const SymMatrix m = random_symmetric(gen, n);
        const auto eig = sym_eig(m);
        REQUIRE(orthonormality_error(eig.eigenvectors) <= 1e-10);
        REQUIRE(reconstruction_error(eig, m) <= 1e-9 * (1.0 + m.max_abs()));
        for (std::size_t k = 1; k < n; ++k) REQUIRE(eig.eigenvalues[k - 1] >= eig.eigenvalues[k]);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                if (std::abs(eig.eigenvectors(i, k)) > 1e-12) {
                    REQUIRE(eig.eigenvectors(i, k) > 0.0);
                    break;
                }
            }
        }
    }
}

TEST_CASE("sym_eig is deterministic") {
    SeededGenerator gen(5);
    const SymMatrix m = random_symmetric(gen, 6);
    const auto a = sym_eig(m);
    const auto b = sym_eig(m);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(max_abs_diff(a.eigenvectors, b.eigenvectors) == 0.0);
}

TEST_CASE("projector_from_basis examples") {
    SUBCASE("axis") {
        const std::vector<Vector> basis{{1.0, 0.0}};
        const Projector p = projector_from_basis(2, basis);
        CHECK(p.rank() == 1);
        CHECK(max_abs_diff(p.matrix().matrix(), Matrix{{1.0, 0.0}, {0.0, 0.0}}) == 0.0);
    }
    SUBCASE("diagonal direction") {
        const std::vector<Vector> basis{{1.0, 1.0}};
        const Projector p = projector_from_basis(2, basis);
        CHECK(p.rank() == 1);
        CHECK(max_abs_diff(p.matrix().matrix(), Matrix{{0.5, 0.5}, {0.5, 0.5}}) < 1e-15);
    }
    SUBCASE("empty span") {
        const Projector p = projector_from_basis(2, std::vector<Vector>{});
        CHECK(p.rank() == 0);
        CHECK(p.matrix().max_abs() == 0.0);
    }
    SUBCASE("dependent vectors are dropped") {
        const std::vector<Vector> basis{{1.0, 2.0, 0.0}, {2.0, 4.0, 0.0}, {0.0, 0.0, 3.0}};
        const Projector p = projector_from_basis(3, basis);
        CHECK(p.rank() == 2);
    }
    SUBCASE("inconsistent dimensions") {
        const std::vector<Vector> basis{{1.0, 0.0}, {1.0, 0.0, 0.0}};
        try {
            (void)projector_from_basis(2, basis);
            FAIL("expected DimensionMismatch");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DimensionMismatch);
        }
    }
}

TEST_CASE("projector invariants hold for random and dependent bases") {
    SeededGenerator gen(23);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = qlc::testing::uniform_index(gen, 1, 7);
        const std::size_t k = qlc::testing::uniform_index(gen, 0, n);
        auto basis = qlc::testing::random_vectors(gen, n, k);
        // Mix in combinations of earlier vectors.
        if (k >= 2) {
            Vector combo(n);
            for (std::size_t i = 0; i < n; ++i) combo[i] = 2.0 * basis[0][i] - 0.5 * basis[1][i];
            basis.push_back(combo);
        }
        const Projector p = projector_from_basis(n, basis);
        REQUIRE(p.rank() == k);
        REQUIRE(qlc::testing::idempotent(p, 1e-9));
        REQUIRE(std::abs(p.matrix().trace() - static_cast<double>(p.rank())) <= 1e-8);
        for (double l : sym_eig(p.matrix()).eigenvalues) {
            REQUIRE(std::min(std::abs(l), std::abs(l - 1.0)) <= 1e-8);
        }
    }
}

TEST_CASE("complement examples") {
    const Projector e1 = projector_from_basis(2, std::vector<Vector>{{1.0, 0.0}});
    const Projector c = complement(e1);
    CHECK(c.rank() == 1);
    CHECK(max_abs_diff(c.matrix().matrix(), Matrix{{0.0, 0.0}, {0.0, 1.0}}) == 0.0);

    const Projector full = complement(Projector::zero(3));
    CHECK(full.rank() == 3);
    CHECK(max_abs_diff(full.matrix().matrix(), Matrix::identity(3)) == 0.0);

    const Projector diag = projector_from_basis(2, std::vector<Vector>{{1.0, 1.0}});
    CHECK(max_abs_diff(complement(diag).matrix().matrix(), Matrix{{0.5, -0.5}, {-0.5, 0.5}}) <
          1e-15);
}

TEST_CASE("double complement is the identity map") {
    SeededGenerator gen(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = qlc::testing::uniform_index(gen, 1, 6);
        const Projector p = random_projector(gen, n);
        const Projector back = complement(complement(p));
        REQUIRE(back.rank() == p.rank());
        REQUIRE(max_abs_diff(back.matrix().matrix(), p.matrix().matrix()) <= 1e-12);
    }
}

TEST_CASE("Projector::from_matrix validates") {
    const Projector ok = Projector::from_matrix(SymMatrix{{0.5, 0.5}, {0.5, 0.5}});
    CHECK(ok.rank() == 1);
    try {
        (void)Projector::from_matrix(SymMatrix{{0.5, 0.0}, {0.0, 1.0}});
        FAIL("expected InvalidMatrix");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidMatrix);
    }
}

TEST_CASE("principal angles") {
    const Projector x = projector_from_basis(2, std::vector<Vector>{{1.0, 0.0}});
    const Projector d = projector_from_basis(2, std::vector<Vector>{{1.0, 1.0}});
    const auto angles = principal_angles(x, d);
    REQUIRE(angles.size() == 1);
    CHECK(angles[0] == doctest::Approx(std::acos(1.0 / std::sqrt(2.0))));

    const Projector plane = projector_from_basis(3, std::vector<Vector>{{1, 0, 0}, {0, 1, 0}});
    const Projector line = projector_from_basis(3, std::vector<Vector>{{1, 1, 0}});
    const auto inside = principal_angles(plane, line);
    REQUIRE(inside.size() == 1);
    CHECK(inside[0] < 1e-7);
    CHECK(principal_angles(Projector::zero(3), plane).empty());
}
