#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "qlc/classifier.hpp"
#include "qlc/error.hpp"
#include "qlc/text.hpp"

namespace qlc {

namespace {

const char* const kKeys[] = {"format_version", "n",    "mode", "p1", "p2",      "P1",
                             "trK1",           "trK2", "m1",   "m2", "spectrum"};

struct Field {
    std::string value;
    std::size_t line = 0;
};

double number(const Field& f, const char* key) {
    const auto v = text::parse_double(f.value);
    if (!v) throw Error(ErrorKind::ParseError, std::string("bad number for ") + key, f.line);
    return *v;
}

Vector number_list(const Field& f, const char* key, std::size_t expected) {
    Vector out;
    if (!text::trim(f.value).empty()) {
        for (std::string_view part : text::split(f.value, ',')) {
            const auto v = text::parse_double(part);
            if (!v) throw Error(ErrorKind::ParseError, std::string("bad number in ") + key, f.line);
            out.push_back(*v);
        }
    }
    if (out.size() != expected) {
        throw Error(ErrorKind::ParseError,
                    std::string(key) + " has " + std::to_string(out.size()) + " values, expected " +
                        std::to_string(expected),
                    f.line);
    }
    return out;
}

}  // namespace

void write_model(std::ostream& out, const EnergyClassifier& clf) {
    const Priors p = clf.priors();
    out << "format_version=" << kModelFormatVersion << '\n'
        << "n=" << clf.dim() << '\n'
        << "mode=" << to_string(clf.mode()) << '\n'
        << "p1=" << text::format_double(p[0]) << '\n'
        << "p2=" << text::format_double(p[1]) << '\n'
        << "P1=" << text::format_list(clf.projector(1).matrix().matrix().data()) << '\n'
        << "trK1=" << text::format_double(clf.trace_k(1)) << '\n'
        << "trK2=" << text::format_double(clf.trace_k(2)) << '\n'
        << "m1=" << text::format_list(clf.mean(1)) << '\n'
        << "m2=" << text::format_list(clf.mean(2)) << '\n'
        << "spectrum=" << text::format_list(clf.spectrum()) << '\n';
}

EnergyClassifier read_model(std::istream& in) {
    std::map<std::string, Field, std::less<>> fields;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view view = text::trim(line);
        if (view.empty() || view.front() == '#') continue;
        const std::size_t eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::ParseError, "expected key=value", lineno);
        }
        const std::string key(text::trim(view.substr(0, eq)));
        if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
            throw Error(ErrorKind::ParseError, "unknown key '" + key + "'", lineno);
        }
        if (fields.count(key) != 0) {
            throw Error(ErrorKind::ParseError, "duplicate key '" + key + "'", lineno);
        }
        fields.emplace(key, Field{std::string(view.substr(eq + 1)), lineno});
    }
    for (const char* key : kKeys) {
        if (fields.count(key) == 0) {
            throw Error(ErrorKind::ParseError, std::string("missing key '") + key + "'");
        }
    }

    const Field& version = fields.at("format_version");
    if (text::parse_integer(version.value) != kModelFormatVersion) {
        throw Error(ErrorKind::ParseError, "unsupported format_version '" + version.value + "'",
                    version.line);
    }
    const Field& nfield = fields.at("n");
    const auto n = text::parse_integer(nfield.value);
    if (!n || *n <= 0) throw Error(ErrorKind::ParseError, "bad dimension", nfield.line);
    const auto dim = static_cast<std::size_t>(*n);

    NormalizationMode mode;
    try {
        mode = parse_mode(text::trim(fields.at("mode").value));
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what(), fields.at("mode").line);
    }

    const Priors priors{number(fields.at("p1"), "p1"), number(fields.at("p2"), "p2")};
    const Vector p1 = number_list(fields.at("P1"), "P1", dim * dim);
    const std::array<double, 2> traces{number(fields.at("trK1"), "trK1"),
                                       number(fields.at("trK2"), "trK2")};
    std::array<Vector, 2> means{number_list(fields.at("m1"), "m1", dim),
                                number_list(fields.at("m2"), "m2", dim)};
    Vector spectrum = number_list(fields.at("spectrum"), "spectrum", dim);

    return EnergyClassifier::restore(mode, priors, SymMatrix::from_row_major(dim, p1), traces,
                                     std::move(means), std::move(spectrum));
}

void save_model(const EnergyClassifier& clf, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
    write_model(out, clf);
    if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
}

EnergyClassifier load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    return read_model(in);
}

}  // namespace qlc
