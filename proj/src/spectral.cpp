#include "qlc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qlc/error.hpp"

namespace qlc {

namespace {

constexpr double kConvergence = 1e-14;
constexpr int kMaxSweeps = 100;
constexpr double kSignThreshold = 1e-12;

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

// Apply the rotation that annihilates a(p,q): a <- J^T a J, v <- v J.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const std::size_t n = a.rows();
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

EigenDecomposition sym_eig(const SymMatrix& m) {
    const std::size_t n = m.dim();
    Matrix a = m.matrix();
    Matrix v = Matrix::identity(n);

    const double threshold = kConvergence * (1.0 + a.frobenius());
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenDecomposition out{Vector(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.eigenvalues[k] = a(src, src);
        double sign = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(v(i, src)) > kSignThreshold) {
                sign = v(i, src) > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = sign * v(i, src);
    }
    return out;
}

// --- Projector -------------------------------------------------------------

Projector Projector::zero(std::size_t n) { return Projector(SymMatrix(n), 0); }

Projector Projector::identity(std::size_t n) { return Projector(SymMatrix::identity(n), n); }

Projector Projector::from_matrix(const SymMatrix& m) {
    const double idem = max_abs_diff(m * m, m.matrix());
    if (idem > 1e-9) {
        throw Error(ErrorKind::InvalidMatrix,
                    "matrix is not idempotent (max |P^2 - P| = " + std::to_string(idem) + ")");
    }
    const double tr = m.trace();
    const double rounded = std::round(tr);
    if (std::abs(tr - rounded) > 1e-8 || rounded < 0.0) {
        throw Error(ErrorKind::InvalidMatrix, "projector trace is not an integer");
    }
    for (double lambda : sym_eig(m).eigenvalues) {
        if (std::abs(lambda) > 1e-8 && std::abs(lambda - 1.0) > 1e-8) {
            throw Error(ErrorKind::InvalidMatrix, "projector eigenvalue outside {0,1}");
        }
    }
    return Projector(m, static_cast<std::size_t>(rounded));
}

std::vector<Vector> Projector::range_basis() const {
    if (rank_ == 0) return {};
    const EigenDecomposition eig = sym_eig(matrix_);
    std::vector<Vector> basis;
    basis.reserve(rank_);
    for (std::size_t k = 0; k < rank_; ++k) basis.push_back(eig.vector(k));
    return basis;
}

Projector projector_from_basis(std::size_t n, std::span<const Vector> vectors) {
    double max_norm = 0.0;
    for (const Vector& v : vectors) {
        if (v.size() != n) {
            throw Error(ErrorKind::DimensionMismatch,
                        "basis vector of length " + std::to_string(v.size()) +
                            " in dimension " + std::to_string(n));
        }
        max_norm = std::max(max_norm, norm(v));
    }
    const double drop = 1e-10 * max_norm;

    std::vector<Vector> ortho;
    for (const Vector& v : vectors) {
        Vector r = v;
        // Two passes of modified Gram-Schmidt keep the basis orthonormal to
        // rounding even for nearly dependent inputs.
        for (int pass = 0; pass < 2; ++pass) {
            for (const Vector& u : ortho) {
                const double c = dot(u, r);
                for (std::size_t i = 0; i < n; ++i) r[i] -= c * u[i];
            }
        }
        const double rn = norm(r);
        if (rn <= drop || rn == 0.0) continue;
        for (double& x : r) x /= rn;
        ortho.push_back(std::move(r));
    }

    Matrix p(n, n);
    for (const Vector& u : ortho)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) += u[i] * u[j];
    return Projector(SymMatrix(p), ortho.size());
}

Projector complement(const Projector& p) {
    const std::size_t n = p.dim();
    return Projector(SymMatrix::identity(n) - p.matrix(), n - p.rank());
}

std::vector<double> principal_angles(const Projector& p, const Projector& q) {
    if (p.dim() != q.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "principal angles between different dimensions");
    }
    const std::vector<Vector> u = p.range_basis();
    const std::vector<Vector> w = q.range_basis();
    const std::size_t k = std::min(u.size(), w.size());
    if (k == 0) return {};

    // Squared singular values of U^T W are the eigenvalues of the smaller Gram
    // product C C^T (or C^T C).
    const std::vector<Vector>& small = u.size() <= w.size() ? u : w;
    const std::vector<Vector>& large = u.size() <= w.size() ? w : u;
    Matrix c(small.size(), large.size());
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j < large.size(); ++j) c(i, j) = dot(small[i], large[j]);
    const EigenDecomposition eig = sym_eig(SymMatrix(c * c.transposed()));

    std::vector<double> angles;
    angles.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double cosine = std::sqrt(std::clamp(eig.eigenvalues[i], 0.0, 1.0));
        angles.push_back(std::acos(cosine));
    }
    return angles;
}

}  // namespace qlc
