#include "tt/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tt {

namespace {

bool json_path(const std::string& name) {
    return name.size() >= 5 && name.compare(name.size() - 5, 5, ".json") == 0;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_lines(std::istream& in, const std::string& name) {
    std::vector<double> vals;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // trim whitespace; skip blank lines
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        const std::string tok = line.substr(b, e - b + 1);
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": cannot parse real number from '" + tok + "'");
        }
    }
    return vals;
}

std::vector<double> parse_numbers(std::istream& in, bool json, const std::string& name) {
    if (!json) return parse_lines(in, name);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(name + ": JSON parse error: " + e.what());
    }
    if (!j.is_array()) throw std::runtime_error(name + ": expected a JSON array of numbers");
    std::vector<double> vals;
    vals.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw std::runtime_error(name + ": array element " + std::to_string(i) +
                                     " is not a number");
        vals.push_back(j[i].get<double>());
    }
    return vals;
}

void check_count(std::size_t got, std::size_t expected, const std::string& name) {
    if (expected != 0 && got != expected)
        throw std::runtime_error(name + ": expected " + std::to_string(expected) +
                                 " values, found " + std::to_string(got));
}

void write_numbers(std::ostream& out, const std::vector<double>& vals, bool json) {
    if (json) {
        out << '[';
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) out << ',';
            out << fmt17(vals[i]);
        }
        out << "]\n";
    } else {
        for (double v : vals) out << fmt17(v) << '\n';
    }
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error(path + ": cannot open for reading");
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error(path + ": cannot open for writing");
    return f;
}

}  // namespace

RealVec parse_real_vector(std::istream& in, bool json, std::size_t expected,
                          const std::string& name) {
    auto vals = parse_numbers(in, json, name);
    check_count(vals.size(), expected, name);
    return vals;
}

RealVec read_real_vector(const std::string& path, std::size_t expected) {
    auto f = open_in(path);
    return parse_real_vector(f, json_path(path), expected, path);
}

void write_real_vector(std::ostream& out, const RealVec& x, bool json) {
    write_numbers(out, x, json);
}

void write_real_vector(const std::string& path, const RealVec& x) {
    auto f = open_out(path);
    write_numbers(f, x, json_path(path));
}

ComplexVec read_complex_vector(const std::string& path, std::size_t expected) {
    auto f = open_in(path);
    auto vals = parse_numbers(f, json_path(path), path);
    check_count(vals.size(), 2 * expected, path);
    if (vals.size() % 2 != 0)
        throw std::runtime_error(path + ": complex vector needs an even number of values");
    ComplexVec x(vals.size() / 2);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = {vals[2 * i], vals[2 * i + 1]};
    return x;
}

void write_complex_vector(std::ostream& out, const ComplexVec& x, bool json) {
    std::vector<double> vals;
    vals.reserve(2 * x.size());
    for (const Cplx& z : x) {
        vals.push_back(z.real());
        vals.push_back(z.imag());
    }
    write_numbers(out, vals, json);
}

void write_complex_vector(const std::string& path, const ComplexVec& x) {
    auto f = open_out(path);
    write_complex_vector(f, x, json_path(path));
}

void CountTable::sort_rows() {
    std::stable_sort(rows.begin(), rows.end(), [](const CountReport& a, const CountReport& b) {
        const std::string ka = audit_kind_name(a.kind), kb = audit_kind_name(b.kind);
        return ka != kb ? ka < kb : a.n < b.n;
    });
}

std::string CountTable::to_csv() const {
    std::ostringstream out;
    out << "kind,N,adds,mults,flops,predicted,match\n";
    for (const CountReport& r : rows) {
        out << audit_kind_name(r.kind) << ',' << r.n << ',' << r.adds << ',' << r.mults << ','
            << r.flops() << ',' << r.predicted << ',' << (r.match ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string CountTable::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CountReport& r : rows) {
        arr.push_back({{"kind", audit_kind_name(r.kind)},
                       {"n", r.n},
                       {"adds", r.adds},
                       {"mults", r.mults},
                       {"flops", r.flops()},
                       {"predicted", r.predicted},
                       {"match", r.match}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace tt
