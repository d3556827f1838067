#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>

#include "qlc/dataset.hpp"
#include "qlc/linalg.hpp"

namespace qlc {

// Deterministic pseudorandom stream: std::mt19937_64 seeded with the 64-bit
// seed, uniforms built from the top 53 bits of each draw, normals by the
// Box-Muller transform (both values of each pair are used, cosine first).
// split() derives an independent child stream from the parent's next draw.
class SeededGenerator {
public:
    explicit SeededGenerator(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    // Uniform in [0, 1).
    double uniform();
    double normal();
    Vector normal_vector(std::size_t n);
    SeededGenerator split();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Draws from N(mean, covariance). The covariance factor is built from its
// eigendecomposition so singular (even zero) covariances are fine.
class GaussianSampler {
public:
    // Throws NotPSD or DimensionMismatch.
    GaussianSampler(Vector mean, const SymMatrix& covariance);

    std::size_t dim() const noexcept { return mean_.size(); }
    Vector operator()(SeededGenerator& gen) const;

private:
    Vector mean_;
    Matrix factor_;
};

// Two Gaussian classes with orthogonal means and a shared covariance;
// `per_class` rows of class 1 followed by `per_class` rows of class 2.
// Throws InvalidParameter for non-orthogonal means, NotPSD, DimensionMismatch.
LabeledDataset gen_example1(std::size_t n, const Vector& m1, const Vector& m2,
                            const SymMatrix& covariance, std::size_t per_class, std::uint64_t seed);

// Class 1 = a + eta, class 2 = eta, eta ~ N(0, sigma2 I).
// Throws InvalidParameter for sigma2 <= 0, DimensionMismatch.
LabeledDataset gen_example2(std::size_t n, const Vector& a, double sigma2, std::size_t per_class,
                            std::uint64_t seed);

// CSV: header "label,x1,...,xn", one row per sample, values at 17 significant
// digits. Reading throws ParseError or LabelError with the 1-based line.
void write_csv(std::ostream& out, const LabeledDataset& data);
LabeledDataset read_csv(std::istream& in);
void save_csv(const LabeledDataset& data, const std::string& path);
LabeledDataset load_csv(const std::string& path);

}  // namespace qlc
