#include "qlc/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>

#include "qlc/error.hpp"
#include "qlc/spectral.hpp"
#include "qlc/text.hpp"

namespace qlc {

// --- SeededGenerator -------------------------------------------------------

double SeededGenerator::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededGenerator::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 1 - u lies in (0, 1], so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Vector SeededGenerator::normal_vector(std::size_t n) {
    Vector v(n);
    for (double& x : v) x = normal();
    return v;
}

SeededGenerator SeededGenerator::split() { return SeededGenerator(engine_()); }

// --- GaussianSampler -------------------------------------------------------

GaussianSampler::GaussianSampler(Vector mean, const SymMatrix& covariance)
    : mean_(std::move(mean)), factor_(covariance.dim(), covariance.dim()) {
    const std::size_t n = covariance.dim();
    if (mean_.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "mean and covariance dimensions differ");
    }
    const EigenDecomposition eig = sym_eig(covariance);
    const double scale = std::max(1.0, std::abs(covariance.trace()));
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda < -1e-9 * scale) {
            throw Error(ErrorKind::NotPSD, "covariance has eigenvalue " + std::to_string(lambda));
        }
        const double root = std::sqrt(std::max(lambda, 0.0));
        for (std::size_t i = 0; i < n; ++i) factor_(i, k) = eig.eigenvectors(i, k) * root;
    }
}

Vector GaussianSampler::operator()(SeededGenerator& gen) const {
    const Vector z = gen.normal_vector(dim());
    Vector x = factor_ * z;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += mean_[i];
    return x;
}

// --- generators ------------------------------------------------------------

namespace {

void require_length(std::size_t n, const Vector& v, const char* what) {
    if (v.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has length " +
                                                      std::to_string(v.size()) + ", expected " +
                                                      std::to_string(n));
    }
}

}  // namespace

LabeledDataset gen_example1(std::size_t n, const Vector& m1, const Vector& m2,
                            const SymMatrix& covariance, std::size_t per_class, std::uint64_t seed) {
    require_length(n, m1, "m1");
    require_length(n, m2, "m2");
    if (covariance.dim() != n) {
        throw Error(ErrorKind::DimensionMismatch, "covariance dimension differs from n");
    }
    if (std::abs(dot(m1, m2)) > 1e-9 * norm(m1) * norm(m2)) {
        throw Error(ErrorKind::InvalidParameter, "class means are not orthogonal");
    }
    const GaussianSampler class1(m1, covariance);
    const GaussianSampler class2(m2, covariance);

    SeededGenerator gen(seed);
    LabeledDataset data(n);
    for (std::size_t i = 0; i < per_class; ++i) data.add(1, class1(gen));
    for (std::size_t i = 0; i < per_class; ++i) data.add(2, class2(gen));
    return data;
}

LabeledDataset gen_example2(std::size_t n, const Vector& a, double sigma2, std::size_t per_class,
                            std::uint64_t seed) {
    require_length(n, a, "a");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw Error(ErrorKind::InvalidParameter, "sigma2 must be positive");
    }
    const double sigma = std::sqrt(sigma2);
    SeededGenerator gen(seed);
    LabeledDataset data(n);
    for (std::size_t i = 0; i < per_class; ++i) {
        Vector x = gen.normal_vector(n);
        for (std::size_t k = 0; k < n; ++k) x[k] = a[k] + sigma * x[k];
        data.add(1, std::move(x));
    }
    for (std::size_t i = 0; i < per_class; ++i) {
        Vector x = gen.normal_vector(n);
        for (double& v : x) v *= sigma;
        data.add(2, std::move(x));
    }
    return data;
}

// --- CSV -------------------------------------------------------------------

void write_csv(std::ostream& out, const LabeledDataset& data) {
    out << "label";
    for (std::size_t k = 1; k <= data.dim(); ++k) out << ",x" << k;
    out << '\n';
    for (const auto& row : data.rows()) {
        out << row.label;
        for (double v : row.x) out << ',' << text::format_double(v);
        out << '\n';
    }
}

LabeledDataset read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorKind::ParseError, "missing header", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = text::split(line, ',');
    if (header.size() < 2 || text::trim(header[0]) != "label") {
        throw Error(ErrorKind::ParseError, "header must be label,x1,...,xn", 1);
    }
    for (std::size_t k = 1; k < header.size(); ++k) {
        if (text::trim(header[k]) != "x" + std::to_string(k)) {
            throw Error(ErrorKind::ParseError,
                        "header column " + std::to_string(k + 1) + " must be x" + std::to_string(k),
                        1);
        }
    }
    const std::size_t n = header.size() - 1;

    LabeledDataset data(n);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            // A blank final line is tolerated; blank lines between rows are not.
            if (in.peek() == std::char_traits<char>::eof()) break;
            throw Error(ErrorKind::ParseError, "blank line", lineno);
        }
        const auto cells = text::split(line, ',');
        if (cells.size() != n + 1) {
            throw Error(ErrorKind::ParseError,
                        "expected " + std::to_string(n + 1) + " fields, got " +
                            std::to_string(cells.size()),
                        lineno);
        }
        const auto label = text::parse_integer(cells[0]);
        if (!label) throw Error(ErrorKind::ParseError, "bad label", lineno);
        if (*label != 1 && *label != 2) {
            throw Error(ErrorKind::LabelError, "label " + std::to_string(*label) + " is not 1 or 2",
                        lineno);
        }
        Vector x(n);
        for (std::size_t k = 0; k < n; ++k) {
            const auto v = text::parse_double(cells[k + 1]);
            if (!v) throw Error(ErrorKind::ParseError, "bad value in column " + std::to_string(k + 2), lineno);
            x[k] = *v;
        }
        data.add(static_cast<int>(*label), std::move(x));
    }
    return data;
}

void save_csv(const LabeledDataset& data, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
    write_csv(out, data);
    if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
}

LabeledDataset load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    return read_csv(in);
}

}  // namespace qlc
