#include "qlc/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qlc/error.hpp"

namespace qlc {

namespace {

constexpr double kPriorTol = 1e-12;
constexpr double kZeroSignal = 1e-12;

void validate_priors(Priors p) {
    for (double v : p) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            throw Error(ErrorKind::InvalidParameter, "prior " + std::to_string(v) + " outside [0, 1]");
        }
    }
    if (std::abs(p[0] + p[1] - 1.0) > kPriorTol) {
        throw Error(ErrorKind::InvalidParameter, "priors do not sum to 1");
    }
}

void require_dim(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has dimension " +
                                                      std::to_string(got) + ", expected " +
                                                      std::to_string(expected));
    }
}

// The operator M_j whose traces against P_i give the class energies.
SymMatrix energy_operator(NormalizationMode mode, const MomentSummary& m) {
    switch (mode) {
        case NormalizationMode::Raw:
        case NormalizationMode::UnitNorm:
            return m.correlation;
        case NormalizationMode::TraceNorm: {
            const double tr = m.correlation.trace();
            if (!(tr > 0.0)) {
                throw Error(ErrorKind::DegenerateTrace,
                            "correlation trace " + std::to_string(tr) + " is not positive");
            }
            return m.correlation * (1.0 / tr);
        }
        case NormalizationMode::Centered:
            return m.covariance;
    }
    throw Error(ErrorKind::InvalidParameter, "unknown normalization mode");
}

struct ClassRows {
    std::array<std::vector<const Vector*>, 2> rows;
};

ClassRows split(const LabeledDataset& data, Priors priors) {
    ClassRows out;
    for (const auto& row : data.rows()) out.rows[row.label - 1].push_back(&row.x);
    for (int c = 0; c < 2; ++c) {
        if (out.rows[c].empty() && priors[c] > 0.0) {
            throw Error(ErrorKind::EmptyClass, "class " + std::to_string(c + 1) + " has no samples");
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(NormalizationMode mode) {
    switch (mode) {
        case NormalizationMode::Raw: return "raw";
        case NormalizationMode::TraceNorm: return "trace";
        case NormalizationMode::UnitNorm: return "unit";
        case NormalizationMode::Centered: return "centered";
    }
    return "unknown";
}

NormalizationMode parse_mode(std::string_view text) {
    if (text == "raw") return NormalizationMode::Raw;
    if (text == "trace") return NormalizationMode::TraceNorm;
    if (text == "unit") return NormalizationMode::UnitNorm;
    if (text == "centered") return NormalizationMode::Centered;
    throw Error(ErrorKind::InvalidParameter, "unknown mode '" + std::string(text) + "'");
}

ClassSpec class_spec_from_data(const LabeledDataset& data, int label, double prior,
                               NormalizationMode mode) {
    std::vector<Vector> samples = data.class_samples(label);
    if (samples.empty()) {
        throw Error(ErrorKind::EmptyClass, "class " + std::to_string(label) + " has no samples");
    }
    if (mode == NormalizationMode::UnitNorm) samples = unit_normalize(samples);
    return ClassSpec{prior, estimate_moments(samples)};
}

Priors priors_from_data(const LabeledDataset& data) {
    if (data.empty()) throw Error(ErrorKind::EmptyDataset, "cannot estimate priors from no rows");
    const double n1 = static_cast<double>(data.class_count(1));
    const double total = static_cast<double>(data.size());
    const double p1 = n1 / total;
    return {p1, 1.0 - p1};
}

// --- EnergyClassifier ------------------------------------------------------

EnergyClassifier::EnergyClassifier(NormalizationMode mode, Priors priors, Projector p1,
                                   std::array<double, 2> traces, std::array<Vector, 2> means,
                                   Vector spectrum)
    : mode_(mode),
      priors_(priors),
      p1_(std::move(p1)),
      p2_(complement(p1_)),
      traces_(traces),
      means_(std::move(means)),
      spectrum_(std::move(spectrum)) {}

EnergyClassifier EnergyClassifier::restore(NormalizationMode mode, Priors priors,
                                           const SymMatrix& p1, std::array<double, 2> traces,
                                           std::array<Vector, 2> means, Vector spectrum) {
    validate_priors(priors);
    const std::size_t n = p1.dim();
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "classifier dimension must be positive");
    require_dim(n, means[0].size(), "m1");
    require_dim(n, means[1].size(), "m2");
    require_dim(n, spectrum.size(), "spectrum");
    if (mode == NormalizationMode::TraceNorm && !(traces[0] > 0.0 && traces[1] > 0.0)) {
        throw Error(ErrorKind::DegenerateTrace, "TraceNorm model needs positive traces");
    }
    return EnergyClassifier(mode, priors, Projector::from_matrix(p1), traces, std::move(means),
                            std::move(spectrum));
}

Vector EnergyClassifier::pattern(int label, std::span<const double> x) const {
    require_dim(dim(), x.size(), "input vector");
    const auto c = static_cast<std::size_t>(label - 1);
    switch (mode_) {
        case NormalizationMode::Raw:
            return Vector(x.begin(), x.end());
        case NormalizationMode::TraceNorm:
            return scaled(x, 1.0 / std::sqrt(traces_.at(c)));
        case NormalizationMode::UnitNorm: {
            const double len = norm(x);
            if (len <= kZeroSignal) throw Error(ErrorKind::ZeroSignal, "zero input vector");
            return scaled(x, 1.0 / len);
        }
        case NormalizationMode::Centered:
            return subtract(x, means_.at(c));
    }
    throw Error(ErrorKind::InvalidParameter, "unknown normalization mode");
}

std::array<double, 2> EnergyClassifier::discriminants(std::span<const double> x) const {
    require_dim(dim(), x.size(), "input vector");
    switch (mode_) {
        case NormalizationMode::Raw:
            return {p1_.matrix().quadratic_form(x), p2_.matrix().quadratic_form(x)};
        case NormalizationMode::TraceNorm:
            // <P x, x> / tr K rather than through pattern(), so the decision
            // rule compares exactly the two stated ratios.
            return {p1_.matrix().quadratic_form(x) / traces_[0],
                    p2_.matrix().quadratic_form(x) / traces_[1]};
        case NormalizationMode::UnitNorm: {
            const Vector u = pattern(1, x);
            return {p1_.matrix().quadratic_form(u), p2_.matrix().quadratic_form(u)};
        }
        case NormalizationMode::Centered: {
            const Vector d1 = pattern(1, x);
            const Vector d2 = pattern(2, x);
            return {p1_.matrix().quadratic_form(d1), p2_.matrix().quadratic_form(d2)};
        }
    }
    throw Error(ErrorKind::InvalidParameter, "unknown normalization mode");
}

EnergyClassifier fit(const ClassSpec& class1, const ClassSpec& class2, NormalizationMode mode) {
    const Priors priors{class1.prior, class2.prior};
    validate_priors(priors);
    const std::size_t n = class1.moments.dim();
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "classifier dimension must be positive");
    require_dim(n, class2.moments.dim(), "class 2 moments");
    require_dim(n, class1.moments.correlation.dim(), "class 1 correlation");
    require_dim(n, class2.moments.correlation.dim(), "class 2 correlation");

    const SymMatrix m1 = energy_operator(mode, class1.moments);
    const SymMatrix m2 = energy_operator(mode, class2.moments);
    const SymMatrix d = priors[0] * m1 - priors[1] * m2;
    const EigenDecomposition eig = sym_eig(d);

    double largest = 0.0;
    for (double l : eig.eigenvalues) largest = std::max(largest, std::abs(l));
    const double cutoff = 1e-10 * std::max(1.0, largest);

    std::vector<Vector> positive;
    for (std::size_t k = 0; k < eig.dim(); ++k)
        if (eig.eigenvalues[k] > cutoff) positive.push_back(eig.vector(k));

    return EnergyClassifier(mode, priors, projector_from_basis(n, positive),
                            {class1.moments.correlation.trace(), class2.moments.correlation.trace()},
                            {class1.moments.mean, class2.moments.mean}, eig.eigenvalues);
}

int decide(const EnergyClassifier& clf, std::span<const double> x) {
    const auto g = clf.discriminants(x);
    return g[0] > g[1] ? 1 : 2;
}

// --- energies --------------------------------------------------------------

namespace {

EnergyReport finish_report(std::array<std::array<double, 2>, 2> r) {
    EnergyReport rep;
    rep.r = r;
    rep.enr_correct = r[0][0] + r[1][1];
    rep.enr_error = r[0][1] + r[1][0];
    rep.total = rep.enr_correct + rep.enr_error;
    return rep;
}

}  // namespace

EnergyReport energy_report(const EnergyClassifier& clf, const ClassSpec& class1,
                           const ClassSpec& class2) {
    const Priors p{class1.prior, class2.prior};
    validate_priors(p);
    require_dim(clf.dim(), class1.moments.dim(), "class 1 moments");
    require_dim(clf.dim(), class2.moments.dim(), "class 2 moments");
    const std::array<SymMatrix, 2> m{energy_operator(clf.mode(), class1.moments),
                                     energy_operator(clf.mode(), class2.moments)};
    std::array<std::array<double, 2>, 2> r{};
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i)
            r[j][i] = p[j] * trace_of_product(clf.projector(i + 1).matrix(), m[j]);
    return finish_report(r);
}

EnergyReport sample_energy_report(const EnergyClassifier& clf, const LabeledDataset& data,
                                  Priors priors) {
    validate_priors(priors);
    require_dim(clf.dim(), data.dim(), "dataset");
    const ClassRows split_rows = split(data, priors);
    std::array<std::array<double, 2>, 2> r{};
    for (int j = 0; j < 2; ++j) {
        const auto& rows = split_rows.rows[j];
        if (rows.empty()) continue;
        std::array<double, 2> sum{0.0, 0.0};
        for (const Vector* x : rows) {
            const Vector y = clf.pattern(j + 1, *x);
            sum[0] += clf.projector(1).matrix().quadratic_form(y);
            sum[1] += clf.projector(2).matrix().quadratic_form(y);
        }
        const double inv = 1.0 / static_cast<double>(rows.size());
        r[j][0] = priors[j] * sum[0] * inv;
        r[j][1] = priors[j] * sum[1] * inv;
    }
    return finish_report(r);
}

double quality_functional(const LabeledDataset& data, Priors priors, const Discriminant& g) {
    validate_priors(priors);
    const ClassRows split_rows = split(data, priors);
    double quality = 0.0;
    for (int c = 0; c < 2; ++c) {
        const auto& rows = split_rows.rows[c];
        if (rows.empty()) continue;
        double sum = 0.0;
        for (const Vector* x : rows) sum += g(c + 1, *x);
        quality += priors[c] * sum / static_cast<double>(rows.size());
    }
    return quality;
}

double empirical_quality(const EnergyClassifier& clf, const LabeledDataset& data, Priors priors,
                         DiscriminantKind kind) {
    require_dim(clf.dim(), data.dim(), "dataset");
    if (kind == DiscriminantKind::Indicator) {
        return quality_functional(data, priors, [&clf](int label, std::span<const double> x) {
            return decide(clf, x) == label ? 1.0 : 0.0;
        });
    }
    return quality_functional(data, priors, [&clf](int label, std::span<const double> x) {
        return clf.discriminants(x)[static_cast<std::size_t>(label - 1)];
    });
}

RegionEnergyEstimate region_energy(const EnergyClassifier& clf, const LabeledDataset& data,
                                   Priors priors) {
    validate_priors(priors);
    require_dim(clf.dim(), data.dim(), "dataset");
    const ClassRows split_rows = split(data, priors);
    RegionEnergyEstimate est;
    double variance = 0.0;
    for (int c = 0; c < 2; ++c) {
        const auto& rows = split_rows.rows[c];
        if (rows.empty()) continue;
        // Welford accumulation of g_c(x) * 1{decide(x) = c}.
        double mean = 0.0;
        double m2 = 0.0;
        std::size_t k = 0;
        for (const Vector* x : rows) {
            const auto g = clf.discriminants(*x);
            const int label = g[0] > g[1] ? 1 : 2;
            const double v = label == c + 1 ? g[static_cast<std::size_t>(c)] : 0.0;
            ++k;
            const double delta = v - mean;
            mean += delta / static_cast<double>(k);
            m2 += delta * (v - mean);
        }
        est.value += priors[c] * mean;
        if (k > 1) {
            const double sample_var = m2 / static_cast<double>(k - 1);
            variance += priors[c] * priors[c] * sample_var / static_cast<double>(k);
        }
    }
    est.standard_error = std::sqrt(variance);
    return est;
}

double snr(std::span<const double> a, double sigma2, std::size_t n) {
    if (!(sigma2 > 0.0)) throw Error(ErrorKind::InvalidParameter, "sigma2 must be positive");
    if (n == 0) throw Error(ErrorKind::InvalidParameter, "dimension must be positive");
    return norm_squared(a) / (static_cast<double>(n) * sigma2);
}

}  // namespace qlc
