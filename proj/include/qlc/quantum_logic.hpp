#pragma once

#include <optional>
#include <span>
#include <string>

#include "qlc/spectral.hpp"

namespace qlc {

// A subspace read as a fuzzy set: x belongs to it with degree <P x, x>, the
// energy of x passed by the projector.
struct FuzzyProposition {
    Projector projector;
    std::optional<std::string> label;

    double membership(std::span<const double> x) const;
};

// <P x, x> = ||P x||^2, always in [0, ||x||^2].
double membership(const Projector& p, std::span<const double> x);

// Projector onto ran(P) ∩ ran(Q): eigenvectors of P + Q with eigenvalue
// within 1e-8 of 2.
Projector meet(const Projector& p, const Projector& q);

// Projector onto ran(P) + ran(Q): eigenvectors of P + Q with eigenvalue
// above 1e-8.
Projector join(const Projector& p, const Projector& q);

// Operator order P <= Q, tested as min eig(Q - P) >= -1e-8.
bool leq(const Projector& p, const Projector& q);

}  // namespace qlc
