#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qlc/linalg.hpp"

namespace qlc {

// Eigenpairs of a symmetric matrix. Eigenvalues are in descending order and
// column k of `eigenvectors` is the unit eigenvector for eigenvalues[k]. The
// first component of each eigenvector with |v_i| > 1e-12 is positive.
//
// Inside a degenerate eigenspace the basis is arbitrary; compare projectors
// onto eigenspaces, not individual vectors.
struct EigenDecomposition {
    Vector eigenvalues;
    Matrix eigenvectors;

    std::size_t dim() const noexcept { return eigenvalues.size(); }
    Vector vector(std::size_t k) const { return eigenvectors.column(k); }
};

// Cyclic Jacobi rotations. Stops when the off-diagonal Frobenius norm drops to
// 1e-14 * (1 + ||M||_F).
EigenDecomposition sym_eig(const SymMatrix& m);

// An orthogonal projection: symmetric, idempotent, integer trace. Instances
// are only produced by the factories below, which guarantee the invariants.
class Projector {
public:
    static Projector zero(std::size_t n);
    static Projector identity(std::size_t n);

    // Validates idempotence (1e-9) and integrality of the trace (1e-8).
    // Throws InvalidMatrix otherwise. Used when reading stored models.
    static Projector from_matrix(const SymMatrix& m);

    const SymMatrix& matrix() const noexcept { return matrix_; }
    std::size_t rank() const noexcept { return rank_; }
    std::size_t dim() const noexcept { return matrix_.dim(); }

    // Orthonormal basis of the range (rank columns of length dim).
    std::vector<Vector> range_basis() const;

private:
    Projector(SymMatrix m, std::size_t rank) : matrix_(std::move(m)), rank_(rank) {}

    friend Projector projector_from_basis(std::size_t n, std::span<const Vector> vectors);
    friend Projector complement(const Projector& p);

    SymMatrix matrix_;
    std::size_t rank_ = 0;
};

// P = sum u u^T over a Gram-Schmidt orthonormalization of `vectors`. Vectors
// whose residual falls below 1e-10 * (max input norm) are dropped as linearly
// dependent. `n` fixes the dimension so the empty sequence is meaningful.
Projector projector_from_basis(std::size_t n, std::span<const Vector> vectors);

// I - P.
Projector complement(const Projector& p);

// Principal angles (radians, ascending) between ran(P) and ran(Q); there are
// min(rank P, rank Q) of them.
std::vector<double> principal_angles(const Projector& p, const Projector& q);

}  // namespace qlc
