#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qlc/linalg.hpp"

namespace qlc {

// First and second moments of one class.
//
//   mean        m = E xi
//   correlation K = E xi xi^T
//   covariance  R = E (xi - m)(xi - m)^T
//
// related by K = R + ||m||^2 p_m, with p_m the rank-one projector onto m.
// `count` is the number of samples behind an empirical summary, 0 for one
// built from known parameters.
struct MomentSummary {
    Vector mean;
    SymMatrix correlation;
    SymMatrix covariance;
    std::size_t count = 0;

    std::size_t dim() const noexcept { return mean.size(); }
};

// Plain 1/N sample averages, so K = R + m m^T holds as an identity of the
// estimators. Throws EmptyDataset or DimensionMismatch.
MomentSummary estimate_moments(std::span<const Vector> samples);

// K = R + ||m||^2 p_m (the rank-one term vanishes for m = 0). Throws NotPSD when
// the covariance has an eigenvalue below -1e-9 * max(1, tr R).
MomentSummary analytic_moments(Vector mean, SymMatrix covariance);

// E<A xi, xi> = tr(K A).
double expected_quadratic(const SymMatrix& a, const SymMatrix& k);

// Max-norm residual of K - (R + ||m||^2 p_m). When ||m|| <= 1e-12 the rank-one
// term is taken to be zero.
double moment_identity_residual(const MomentSummary& s);

// x / ||x|| for every sample. Throws ZeroSignal (with the 1-based sample index
// in the message) on a vector of norm <= 1e-12.
std::vector<Vector> unit_normalize(std::span<const Vector> samples);

}  // namespace qlc
