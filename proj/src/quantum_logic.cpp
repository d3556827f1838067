#include "qlc/quantum_logic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qlc/error.hpp"

namespace qlc {

namespace {

constexpr double kSpectrumTol = 1e-8;

void require_same_dim(const Projector& p, const Projector& q) {
    if (p.dim() != q.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "projectors of dimension " + std::to_string(p.dim()) + " and " +
                        std::to_string(q.dim()));
    }
}

template <typename Keep>
Projector eigenspace_of_sum(const Projector& p, const Projector& q, Keep keep) {
    require_same_dim(p, q);
    const EigenDecomposition eig = sym_eig(p.matrix() + q.matrix());
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < eig.dim(); ++k)
        if (keep(eig.eigenvalues[k])) basis.push_back(eig.vector(k));
    return projector_from_basis(p.dim(), basis);
}

}  // namespace

double FuzzyProposition::membership(std::span<const double> x) const {
    return qlc::membership(projector, x);
}

double membership(const Projector& p, std::span<const double> x) {
    if (x.size() != p.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vector of length " + std::to_string(x.size()) + " against projector of dimension " +
                        std::to_string(p.dim()));
    }
    // ||Px||^2 is nonnegative by construction, unlike a rounded <Px, x>.
    const double value = norm_squared(p.matrix() * x);
    return std::min(value, norm_squared(x));
}

Projector meet(const Projector& p, const Projector& q) {
    return eigenspace_of_sum(p, q, [](double l) { return std::abs(l - 2.0) <= kSpectrumTol; });
}

Projector join(const Projector& p, const Projector& q) {
    return eigenspace_of_sum(p, q, [](double l) { return l > kSpectrumTol; });
}

bool leq(const Projector& p, const Projector& q) {
    require_same_dim(p, q);
    const EigenDecomposition eig = sym_eig(q.matrix() - p.matrix());
    return eig.dim() == 0 || eig.eigenvalues.back() >= -kSpectrumTol;
}

}  // namespace qlc
