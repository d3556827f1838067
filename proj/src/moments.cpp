#include "qlc/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlc/error.hpp"
#include "qlc/spectral.hpp"

namespace qlc {

MomentSummary estimate_moments(std::span<const Vector> samples) {
    if (samples.empty()) throw Error(ErrorKind::EmptyDataset, "no samples to estimate moments from");
    const std::size_t n = samples.front().size();
    const double inv = 1.0 / static_cast<double>(samples.size());

    Vector mean(n, 0.0);
    Matrix second(n, n);
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const Vector& x = samples[s];
        if (x.size() != n) {
            throw Error(ErrorKind::DimensionMismatch,
                        "sample " + std::to_string(s + 1) + " has dimension " +
                            std::to_string(x.size()) + ", expected " + std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) {
            mean[i] += x[i];
            for (std::size_t j = i; j < n; ++j) second(i, j) += x[i] * x[j];
        }
    }
    for (double& v : mean) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            second(i, j) *= inv;
            second(j, i) = second(i, j);
        }
    }

    // Covariance accumulated from centered samples rather than K - m m^T, so R
    // stays PSD to rounding even when the mean dominates.
    Matrix centered(n, n);
    Vector d(n);
    for (const Vector& x : samples) {
        for (std::size_t i = 0; i < n; ++i) d[i] = x[i] - mean[i];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) centered(i, j) += d[i] * d[j];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            centered(i, j) *= inv;
            centered(j, i) = centered(i, j);
        }
    }

    return MomentSummary{std::move(mean), SymMatrix(second), SymMatrix(centered), samples.size()};
}

MomentSummary analytic_moments(Vector mean, SymMatrix covariance) {
    if (mean.size() != covariance.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "mean and covariance dimensions differ");
    }
    const double scale = std::max(1.0, std::abs(covariance.trace()));
    const EigenDecomposition eig = sym_eig(covariance);
    if (!eig.eigenvalues.empty() && eig.eigenvalues.back() < -1e-9 * scale) {
        throw Error(ErrorKind::NotPSD, "covariance has eigenvalue " +
                                           std::to_string(eig.eigenvalues.back()));
    }
    SymMatrix k = covariance + SymMatrix::outer(mean);
    return MomentSummary{std::move(mean), std::move(k), std::move(covariance), 0};
}

double expected_quadratic(const SymMatrix& a, const SymMatrix& k) {
    if (a.dim() != k.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "operator and correlation dimensions differ");
    }
    return trace_of_product(k, a);
}

double moment_identity_residual(const MomentSummary& s) {
    const double mm = norm_squared(s.mean);
    SymMatrix rebuilt = s.covariance;
    if (std::sqrt(mm) > 1e-12) {
        const Vector m = s.mean;
        const Projector pm = projector_from_basis(s.dim(), std::span<const Vector>(&m, 1));
        rebuilt = rebuilt + mm * pm.matrix();
    }
    return max_abs_diff(s.correlation.matrix(), rebuilt.matrix());
}

std::vector<Vector> unit_normalize(std::span<const Vector> samples) {
    std::vector<Vector> out;
    out.reserve(samples.size());
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const double len = norm(samples[s]);
        if (len <= 1e-12) {
            throw Error(ErrorKind::ZeroSignal,
                        "sample " + std::to_string(s + 1) + " has zero norm");
        }
        out.push_back(scaled(samples[s], 1.0 / len));
    }
    return out;
}

}  // namespace qlc
