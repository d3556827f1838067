#pragma once

// Two-class energy classifier built from orthogonal projections.
//
// Each class S_i is matched with a projector P_i (P_1 + P_2 = I) and scored
// by the energy it passes, g_i(x) = <P_i x, x>. Given priors p_i and class
// second-moment operators M_i, the prior-weighted energy passed to the
// correct class is
//
//     Enr_C(P_1, P_2) = p_1 tr(P_1 M_1) + p_2 tr(P_2 M_2)
//                     = p_2 tr M_2 + tr(P_1 (p_1 M_1 - p_2 M_2)),
//
// which is maximized by letting P_1 project onto the eigenvectors of
// D = p_1 M_1 - p_2 M_2 with positive eigenvalues. The error energy
// Enr_E = p_1 tr(P_2 M_1) + p_2 tr(P_1 M_2) is its complement:
// Enr_C + Enr_E = p_1 tr M_1 + p_2 tr M_2 for every complementary pair.
//
// The normalization mode fixes a per-class pattern map phi_i, the operator
// M_i = E[phi_i(xi) phi_i(xi)^T | S_i], and the discriminant
// g_i(x) = <P_i phi_i(x), phi_i(x)>:
//
//   Raw        phi_i(x) = x                  M_i = K_i
//   TraceNorm  phi_i(x) = x / sqrt(tr K_i)   M_i = K_i / tr K_i
//   UnitNorm   phi_i(x) = x / |x|            M_i = K_i of x/|x|
//   Centered   phi_i(x) = x - m_i            M_i = R_i
//
// Energies r_j(i) = p_j E[<P_i phi_j(xi), phi_j(xi)> | S_j] map a class-j
// pattern with class j's own normalization, so r_j(i) = p_j tr(P_i M_j).
// For UnitNorm the class moments must come from unit-normalized samples
// (see class_spec_from_data); this is not checked.

#include <array>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "qlc/dataset.hpp"
#include "qlc/moments.hpp"
#include "qlc/spectral.hpp"

namespace qlc {

enum class NormalizationMode { Raw, TraceNorm, UnitNorm, Centered };

// "raw", "trace", "unit", "centered".
std::string_view to_string(NormalizationMode mode);
NormalizationMode parse_mode(std::string_view text);

using Priors = std::array<double, 2>;

struct ClassSpec {
    double prior = 0.5;
    MomentSummary moments;
};

// Estimates one class's moments from the rows of `data` with `label`,
// unit-normalizing the samples first when mode is UnitNorm.
ClassSpec class_spec_from_data(const LabeledDataset& data, int label, double prior,
                               NormalizationMode mode);

// Frequencies N_1/N, N_2/N.
Priors priors_from_data(const LabeledDataset& data);

class EnergyClassifier {
public:
    // Rebuilds a fitted classifier from stored fields. The projector is
    // validated and P_2 recomputed as I - P_1, exactly as fit() does.
    static EnergyClassifier restore(NormalizationMode mode, Priors priors, const SymMatrix& p1,
                                    std::array<double, 2> traces, std::array<Vector, 2> means,
                                    Vector spectrum);

    std::size_t dim() const noexcept { return p1_.dim(); }
    NormalizationMode mode() const noexcept { return mode_; }
    Priors priors() const noexcept { return priors_; }
    const Projector& projector(int label) const { return label == 1 ? p1_ : p2_; }
    // tr K_i of the training moments; only TraceNorm uses them for scoring.
    double trace_k(int label) const { return traces_.at(static_cast<std::size_t>(label - 1)); }
    // Training mean m_i; only Centered uses it for scoring.
    const Vector& mean(int label) const { return means_.at(static_cast<std::size_t>(label - 1)); }
    // Eigenvalues of p_1 M_1 - p_2 M_2, descending.
    const Vector& spectrum() const noexcept { return spectrum_; }

    // phi_label(x). Throws DimensionMismatch, or ZeroSignal for UnitNorm with
    // ||x|| <= 1e-12.
    Vector pattern(int label, std::span<const double> x) const;

    // (g_1(x), g_2(x)); same errors as pattern().
    std::array<double, 2> discriminants(std::span<const double> x) const;

private:
    EnergyClassifier(NormalizationMode mode, Priors priors, Projector p1,
                     std::array<double, 2> traces, std::array<Vector, 2> means, Vector spectrum);

    friend EnergyClassifier fit(const ClassSpec&, const ClassSpec&, NormalizationMode);

    NormalizationMode mode_;
    Priors priors_;
    Projector p1_;
    Projector p2_;
    std::array<double, 2> traces_;
    std::array<Vector, 2> means_;
    Vector spectrum_;
};

// Eigenvalues of D above 1e-10 * max(1, max|lambda|) go to P_1; the rest,
// including numerically zero ones, to P_2.
// Throws InvalidParameter (priors), DimensionMismatch, or DegenerateTrace
// (TraceNorm with tr K_i <= 0).
EnergyClassifier fit(const ClassSpec& class1, const ClassSpec& class2, NormalizationMode mode);

// 1 iff g_1(x) > g_2(x); ties go to class 2.
int decide(const EnergyClassifier& clf, std::span<const double> x);

// r[j][i] is the energy class j+1 passes through P_{i+1}, prior-weighted.
struct EnergyReport {
    std::array<std::array<double, 2>, 2> r{};
    double enr_correct = 0.0;
    double enr_error = 0.0;
    double total = 0.0;
};

// Trace route: r_j(i) = p_j tr(P_i M_j) with M_j chosen by the classifier's
// mode from the supplied class moments.
EnergyReport energy_report(const EnergyClassifier& clf, const ClassSpec& class1,
                           const ClassSpec& class2);

// Sample route: r_j(i) = p_j * mean of <P_i phi_j(x), phi_j(x)> over the
// class-j rows. On the data the classifier was fitted on this equals the
// trace route.
// Throws EmptyClass when a class with nonzero prior has no rows.
EnergyReport sample_energy_report(const EnergyClassifier& clf, const LabeledDataset& data,
                                  Priors priors);

// Quality functional for an arbitrary discriminant family:
// sum_i p_i * mean over class-i rows of g(i, x). A class with zero prior may
// be empty; otherwise an empty class throws EmptyClass.
using Discriminant = std::function<double(int label, std::span<const double> x)>;
double quality_functional(const LabeledDataset& data, Priors priors, const Discriminant& g);

enum class DiscriminantKind {
    Energy,     // g_i = the mode's energy discriminant
    Indicator,  // g_i = [decide(x) == i], giving prior-weighted accuracy
};

double empirical_quality(const EnergyClassifier& clf, const LabeledDataset& data, Priors priors,
                         DiscriminantKind kind = DiscriminantKind::Energy);

// Monte Carlo estimate of the energy passed inside the decision regions,
//   p_1 E[g_1(x) 1{decide = 1} | S_1] + p_2 E[g_2(x) 1{decide = 2} | S_2],
// with its standard error.
struct RegionEnergyEstimate {
    double value = 0.0;
    double standard_error = 0.0;
};
RegionEnergyEstimate region_energy(const EnergyClassifier& clf, const LabeledDataset& data,
                                   Priors priors);

// ||a||^2 / (n sigma2). Throws InvalidParameter for sigma2 <= 0 or n == 0.
double snr(std::span<const double> a, double sigma2, std::size_t n);

// Model text format: one key=value per line, numbers at 17 significant
// digits, P1 row-major. Keys: format_version, n, mode, p1, p2, P1, trK1, trK2,
// m1, m2, spectrum.
inline constexpr int kModelFormatVersion = 1;
void write_model(std::ostream& out, const EnergyClassifier& clf);
EnergyClassifier read_model(std::istream& in);
void save_model(const EnergyClassifier& clf, const std::string& path);
EnergyClassifier load_model(const std::string& path);

}  // namespace qlc
