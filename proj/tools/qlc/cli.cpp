#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <optional>
#include <ostream>
#include <vector>

#include "qlc/classifier.hpp"
#include "qlc/datasets.hpp"
#include "qlc/error.hpp"
#include "qlc/text.hpp"

namespace qlc::cli {

namespace {

struct GenExample1Args {
    std::size_t n = 0;
    std::vector<double> m1;
    std::vector<double> m2;
    double sigma2 = 1.0;
    std::vector<double> cov;
    std::size_t per_class = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct GenExample2Args {
    std::size_t n = 0;
    std::vector<double> a;
    double sigma2 = 1.0;
    std::size_t per_class = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct FitArgs {
    std::string data;
    std::string mode = "raw";
    double p1 = 0.5;
    bool priors_from_data = false;
    std::string out;
};

struct ModelDataArgs {
    std::string model;
    std::string data;
};

void kv(std::ostream& out, const char* key, double v) {
    out << key << '=' << text::format_double(v) << '\n';
}

int gen_example1_cmd(const GenExample1Args& a, std::ostream& out) {
    if (a.cov.empty() && !(a.sigma2 >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "sigma2 must be nonnegative");
    }
    const SymMatrix cov = a.cov.empty() ? SymMatrix::identity(a.n) * a.sigma2
                                        : SymMatrix::from_row_major(a.n, a.cov);
    const LabeledDataset data = gen_example1(a.n, a.m1, a.m2, cov, a.per_class, a.seed);
    save_csv(data, a.out);
    out << "wrote " << data.size() << " rows\n";
    return kExitOk;
}

int gen_example2_cmd(const GenExample2Args& a, std::ostream& out) {
    const LabeledDataset data = gen_example2(a.n, a.a, a.sigma2, a.per_class, a.seed);
    save_csv(data, a.out);
    out << "wrote " << data.size() << " rows\n";
    return kExitOk;
}

int fit_cmd(const FitArgs& a, std::ostream& out) {
    const LabeledDataset data = load_csv(a.data);
    const NormalizationMode mode = parse_mode(a.mode);
    const Priors priors = a.priors_from_data ? priors_from_data(data) : Priors{a.p1, 1.0 - a.p1};
    const EnergyClassifier clf = fit(class_spec_from_data(data, 1, priors[0], mode),
                                     class_spec_from_data(data, 2, priors[1], mode), mode);
    save_model(clf, a.out);
    out << "wrote model n=" << clf.dim() << " mode=" << to_string(mode)
        << " rank_P1=" << clf.projector(1).rank() << '\n';
    return kExitOk;
}

void require_matching_dim(const EnergyClassifier& clf, const LabeledDataset& data) {
    if (clf.dim() != data.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "model dimension " + std::to_string(clf.dim()) +
                                                      " does not match data dimension " +
                                                      std::to_string(data.dim()));
    }
}

int predict_cmd(const ModelDataArgs& a, std::ostream& out) {
    const EnergyClassifier clf = load_model(a.model);
    const LabeledDataset data = load_csv(a.data);
    require_matching_dim(clf, data);
    // Labels are buffered so a failing row produces no partial output.
    std::string labels;
    for (std::size_t i = 0; i < data.size(); ++i) {
        try {
            labels += decide(clf, data[i].x) == 1 ? "1\n" : "2\n";
        } catch (const Error& e) {
            throw Error(e.kind(), "data row rejected by the model", i + 2);
        }
    }
    out << labels;
    return kExitOk;
}

int eval_cmd(const ModelDataArgs& a, std::ostream& out) {
    const EnergyClassifier clf = load_model(a.model);
    const LabeledDataset data = load_csv(a.data);
    require_matching_dim(clf, data);
    const Priors priors = clf.priors();

    for (std::size_t i = 0; i < data.size(); ++i) {
        try {
            (void)clf.discriminants(data[i].x);
        } catch (const Error& e) {
            throw Error(e.kind(), "data row rejected by the model", i + 2);
        }
    }

    const EnergyReport rep = sample_energy_report(clf, data, priors);
    const double quality = empirical_quality(clf, data, priors, DiscriminantKind::Energy);
    const double weighted = empirical_quality(clf, data, priors, DiscriminantKind::Indicator);
    std::size_t correct = 0;
    for (const auto& row : data.rows())
        if (decide(clf, row.x) == row.label) ++correct;
    const double accuracy = static_cast<double>(correct) / static_cast<double>(data.size());
    const RegionEnergyEstimate region = region_energy(clf, data, priors);

    // Enr_C(P1,P2) - Enr_C(A1,A2) is a sum of nonnegative terms bounded by
    // Enr_E on the same sample; the slack only absorbs rounding.
    const double gap = rep.enr_correct - region.value;
    const double slack = 1e-12 * std::max(1.0, std::abs(rep.total));
    const bool bound_ok = gap >= -slack && gap <= rep.enr_error + slack;

    out << "rows=" << data.size() << '\n'
        << "n=" << clf.dim() << '\n'
        << "mode=" << to_string(clf.mode()) << '\n';
    kv(out, "p1", priors[0]);
    kv(out, "p2", priors[1]);
    kv(out, "r11", rep.r[0][0]);
    kv(out, "r12", rep.r[0][1]);
    kv(out, "r21", rep.r[1][0]);
    kv(out, "r22", rep.r[1][1]);
    kv(out, "enr_correct", rep.enr_correct);
    kv(out, "enr_error", rep.enr_error);
    kv(out, "total", rep.total);
    kv(out, "quality", quality);
    kv(out, "weighted_accuracy", weighted);
    kv(out, "accuracy", accuracy);
    kv(out, "region_energy", region.value);
    kv(out, "region_energy_se", region.standard_error);
    kv(out, "bound_gap", gap);
    out << "bound_check=" << (bound_ok ? "ok" : "violated") << " 0 <= "
        << text::format_double(gap) << " <= " << text::format_double(rep.enr_error) << '\n';
    return kExitOk;
}

int spectrum_cmd(const std::string& model, std::ostream& out) {
    const EnergyClassifier clf = load_model(model);
    for (double v : clf.spectrum()) out << text::format_double(v) << '\n';
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Energy classifier over orthogonal projections", "qlc"};
    app.require_subcommand(1);

    GenExample1Args g1;
    auto* gen1 = app.add_subcommand("gen-example1", "Two Gaussian classes with orthogonal means");
    gen1->add_option("--n", g1.n, "Dimension")->required()->check(CLI::PositiveNumber);
    gen1->add_option("--m1", g1.m1, "Class 1 mean, comma separated")->required()->delimiter(',');
    gen1->add_option("--m2", g1.m2, "Class 2 mean, comma separated")->required()->delimiter(',');
    auto* g1_sigma = gen1->add_option("--sigma2", g1.sigma2, "Shared covariance sigma2 * I");
    gen1->add_option("--cov", g1.cov, "Shared covariance, row-major, comma separated")
        ->delimiter(',')
        ->excludes(g1_sigma);
    gen1->add_option("--per-class", g1.per_class, "Rows per class")->required();
    gen1->add_option("--seed", g1.seed, "Random seed");
    gen1->add_option("--out", g1.out, "Output CSV")->required();

    GenExample2Args g2;
    auto* gen2 = app.add_subcommand("gen-example2", "Signal in white noise versus white noise");
    gen2->add_option("--n", g2.n, "Dimension")->required()->check(CLI::PositiveNumber);
    gen2->add_option("--a", g2.a, "Signal vector, comma separated")->required()->delimiter(',');
    gen2->add_option("--sigma2", g2.sigma2, "Noise variance per coordinate")->required();
    gen2->add_option("--per-class", g2.per_class, "Rows per class")->required();
    gen2->add_option("--seed", g2.seed, "Random seed");
    gen2->add_option("--out", g2.out, "Output CSV")->required();

    FitArgs f;
    auto* fitc = app.add_subcommand("fit", "Fit the projector pair and write a model");
    fitc->add_option("--data", f.data, "Training CSV")->required();
    fitc->add_option("--mode", f.mode, "raw | trace | unit | centered")
        ->check(CLI::IsMember({"raw", "trace", "unit", "centered"}));
    auto* p1_opt = fitc->add_option("--p1", f.p1, "Prior of class 1 (p2 = 1 - p1)");
    fitc->add_flag("--priors-from-data", f.priors_from_data, "Use class frequencies as priors")
        ->excludes(p1_opt);
    fitc->add_option("--out", f.out, "Output model file")->required();

    ModelDataArgs pr;
    auto* predc = app.add_subcommand("predict", "Print one decided label per data row");
    predc->add_option("--model", pr.model, "Model file")->required();
    predc->add_option("--data", pr.data, "CSV data")->required();

    ModelDataArgs ev;
    auto* evalc = app.add_subcommand("eval", "Energy and quality report on labeled data");
    evalc->add_option("--model", ev.model, "Model file")->required();
    evalc->add_option("--data", ev.data, "CSV data")->required();

    std::string spec_model;
    auto* specc = app.add_subcommand("spectrum", "Print the stored eigenvalues, descending");
    specc->add_option("--model", spec_model, "Model file")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen1) return gen_example1_cmd(g1, out);
        if (*gen2) return gen_example2_cmd(g2, out);
        if (*fitc) return fit_cmd(f, out);
        if (*predc) return predict_cmd(pr, out);
        if (*evalc) return eval_cmd(ev, out);
        if (*specc) return spectrum_cmd(spec_model, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace qlc::cli
