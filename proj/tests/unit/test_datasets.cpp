#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qlc/classifier.hpp"
#include "qlc/datasets.hpp"
#include "qlc/error.hpp"
#include "test_support.hpp"

using namespace qlc;

namespace {

std::string to_csv(const LabeledDataset& d) {
    std::ostringstream out;
    write_csv(out, d);
    return out.str();
}

Error csv_error(const std::string& text) {
    std::istringstream in(text);
    try {
        (void)read_csv(in);
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected a CSV error");
    return Error(ErrorKind::IoError, "unreachable");
}

}  // namespace

TEST_CASE("Gaussian sampler mean and variance") {
    SeededGenerator gen(2024);
    const int count = 100000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < count; ++i) {
        const double z = gen.normal();
        sum += z;
        sq += z * z;
    }
    const double mean = sum / count;
    const double var = sq / count - mean * mean;
    CHECK(std::abs(mean) <= 4.0 / std::sqrt(static_cast<double>(count)));
    CHECK(std::abs(var - 1.0) <= 0.02);
}

TEST_CASE("uniform draws stay in [0, 1)") {
    SeededGenerator gen(0);
    for (int i = 0; i < 10000; ++i) {
        const double u = gen.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("generators are deterministic under a seed") {
    const auto a = gen_example2(3, {1.0, 0.0, 2.0}, 0.5, 200, 7);
    const auto b = gen_example2(3, {1.0, 0.0, 2.0}, 0.5, 200, 7);
    const auto c = gen_example2(3, {1.0, 0.0, 2.0}, 0.5, 200, 8);
    CHECK(a == b);
    CHECK(to_csv(a) == to_csv(b));
    CHECK_FALSE(a == c);

    SeededGenerator g1(5);
    SeededGenerator g2(5);
    SeededGenerator child1 = g1.split();
    SeededGenerator child2 = g2.split();
    CHECK(child1.normal() == child2.normal());
}

TEST_CASE("gen_example1: zero covariance gives point masses") {
    const auto d = gen_example1(2, {1.0, 0.0}, {0.0, 3.0}, SymMatrix(2), 5, 1);
    CHECK(d.size() == 10);
    for (const auto& row : d.rows()) {
        CHECK(row.x == (row.label == 1 ? Vector{1.0, 0.0} : Vector{0.0, 3.0}));
    }
}

TEST_CASE("gen_example1: class means and correlation") {
    const Vector m1{2.0, 0.0, 1.0};
    const Vector m2{0.0, 1.0, 0.0};
    const std::size_t per_class = 10000;
    const auto d = gen_example1(3, m1, m2, SymMatrix::identity(3), per_class, 314);
    const auto s1 = estimate_moments(d.class_samples(1));
    const auto s2 = estimate_moments(d.class_samples(2));
    const double bound = 4.0 / std::sqrt(static_cast<double>(per_class));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(s1.mean[i] - m1[i]) <= bound);
        CHECK(std::abs(s2.mean[i] - m2[i]) <= bound);
    }
    const auto expected = analytic_moments(m1, SymMatrix::identity(3));
    CHECK(max_abs_diff(s1.correlation.matrix(), expected.correlation.matrix()) <=
          0.05 * expected.correlation.max_abs());
}

TEST_CASE("gen_example1: errors") {
    try {
        (void)gen_example1(2, {1.0, 1.0}, {1.0, 0.0}, SymMatrix::identity(2), 3, 1);
        FAIL("expected InvalidParameter");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidParameter);
    }
    try {
        (void)gen_example1(2, {1.0, 0.0}, {0.0, 1.0}, SymMatrix{{1.0, 0.0}, {0.0, -1.0}}, 3, 1);
        FAIL("expected NotPSD");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPSD);
    }
}

TEST_CASE("gen_example2: noise energy and correlation") {
    const std::size_t n = 4;
    const double sigma2 = 0.8;
    const std::size_t per_class = 50000;
    const auto d = gen_example2(n, {1.0, 2.0, 0.0, 0.0}, sigma2, per_class, 55);
    const auto noise = d.class_samples(2);

    double sum = 0.0;
    double sq = 0.0;
    for (const auto& x : noise) {
        const double e = norm_squared(x);
        sum += e;
        sq += e * e;
    }
    const double mean = sum / static_cast<double>(per_class);
    const double se = std::sqrt((sq / static_cast<double>(per_class) - mean * mean) /
                                static_cast<double>(per_class));
    CHECK(std::abs(mean - static_cast<double>(n) * sigma2) <= 3.0 * se);

    const auto s2 = estimate_moments(noise);
    CHECK(max_abs_diff(s2.correlation.matrix(), (SymMatrix::identity(n) * sigma2).matrix()) <=
          0.05 * sigma2);
}

TEST_CASE("gen_example2: a = 0 makes the classes indistinguishable") {
    const auto d = gen_example2(3, {0.0, 0.0, 0.0}, 1.0, 20000, 6);
    const auto c1 = class_spec_from_data(d, 1, 0.5, NormalizationMode::Raw);
    const auto c2 = class_spec_from_data(d, 2, 0.5, NormalizationMode::Raw);
    const auto clf = fit(c1, c2, NormalizationMode::Raw);
    const double acc = empirical_quality(clf, d, {0.5, 0.5}, DiscriminantKind::Indicator);
    CHECK(std::abs(acc - 0.5) < 0.02);

    try {
        (void)gen_example2(2, {1.0, 0.0}, 0.0, 3, 1);
        FAIL("expected InvalidParameter");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidParameter);
    }
}

TEST_CASE("CSV reading") {
    std::istringstream in("label,x1,x2\n1,3.0,4.0\n");
    const auto d = read_csv(in);
    REQUIRE(d.size() == 1);
    CHECK(d.dim() == 2);
    CHECK(d[0].label == 1);
    CHECK(d[0].x == Vector{3.0, 4.0});

    std::istringstream header_only("label,x1,x2\n");
    CHECK(read_csv(header_only).empty());
}

TEST_CASE("CSV errors carry line numbers") {
    const Error label = csv_error("label,x1,x2\n3,1.0,2.0\n");
    CHECK(label.kind() == ErrorKind::LabelError);
    CHECK(label.line() == 2u);

    const Error fields = csv_error("label,x1,x2\n1,1.0,2.0\n2,1.0\n");
    CHECK(fields.kind() == ErrorKind::ParseError);
    CHECK(fields.line() == 3u);

    const Error value = csv_error("label,x1\n1,abc\n");
    CHECK(value.kind() == ErrorKind::ParseError);
    CHECK(value.line() == 2u);

    const Error header = csv_error("lbl,x1\n1,2\n");
    CHECK(header.kind() == ErrorKind::ParseError);
    CHECK(header.line() == 1u);

    const Error blank = csv_error("label,x1\n1,2\n\n2,3\n");
    CHECK(blank.line() == 3u);
}

TEST_CASE("CSV round trip is exact and preserves every decision") {
    const auto d = gen_example2(3, {0.3, -1.0, 2.0}, 1.7, 400, 12);
    std::stringstream buffer;
    write_csv(buffer, d);
    const auto back = read_csv(buffer);
    CHECK(back == d);

    for (auto mode : {NormalizationMode::Raw, NormalizationMode::TraceNorm,
                      NormalizationMode::UnitNorm, NormalizationMode::Centered}) {
        const auto clf = fit(class_spec_from_data(d, 1, 0.5, mode),
                             class_spec_from_data(d, 2, 0.5, mode), mode);
        for (std::size_t i = 0; i < d.size(); ++i) {
            REQUIRE(decide(clf, d[i].x) == decide(clf, back[i].x));
        }
    }
}

TEST_CASE("LabeledDataset enforces labels and dimension") {
    LabeledDataset d(2);
    try {
        d.add(0, {1.0, 2.0});
        FAIL("expected LabelError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LabelError);
    }
    try {
        d.add(1, {1.0});
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
}
