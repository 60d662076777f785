#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "helpers.hpp"
#include "tt/counts.hpp"
#include "tt/io.hpp"

using namespace tt;
namespace fs = std::filesystem;

namespace {
fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("tt_io_test_" + name);
}
}  // namespace

TEST_CASE("plain text vector round-trips doubles exactly") {
    RealVec x = tth::random_real(33, 4711);
    x.push_back(1.0 / 3.0);
    x.push_back(-0.1);
    x.push_back(1e-300);
    auto path = temp_file("roundtrip.txt");
    write_real_vector(path.string(), x);
    RealVec y = read_real_vector(path.string(), x.size());
    REQUIRE(y.size() == x.size());
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == y[i]);
    fs::remove(path);
}

TEST_CASE("json vector round-trips via the .json extension") {
    RealVec x = tth::random_real(8, 42);
    auto path = temp_file("roundtrip.json");
    write_real_vector(path.string(), x);

    // the file really is a JSON array
    std::ifstream f(path);
    nlohmann::json j;
    f >> j;
    REQUIRE(j.is_array());
    CHECK(j.size() == 8);

    RealVec y = read_real_vector(path.string(), 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(x[i] == y[i]);
    fs::remove(path);
}

TEST_CASE("complex vectors interleave re,im as 2N reals") {
    ComplexVec z = tth::random_complex(5, 7);
    auto path = temp_file("complex.txt");
    write_complex_vector(path.string(), z);

    std::ifstream f(path);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(f, line)) ++lines;
    CHECK(lines == 10);

    ComplexVec w = read_complex_vector(path.string(), 5);
    REQUIRE(w.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(z[i] == w[i]);
    fs::remove(path);
}

TEST_CASE("parse errors carry the line number") {
    std::istringstream in("1.0\n\n  not-a-number \n4.0\n");
    try {
        parse_real_vector(in, false, 0, "input");
        FAIL("expected a parse error");
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("input:3") != std::string::npos);
        CHECK(msg.find("not-a-number") != std::string::npos);
    }
}

TEST_CASE("trailing junk on a numeric line is rejected") {
    std::istringstream in("1.5x\n");
    CHECK_THROWS_AS(parse_real_vector(in, false, 0, "input"), std::runtime_error);
}

TEST_CASE("blank lines are skipped and whitespace trimmed") {
    std::istringstream in("  1.5 \n\n\t-2.25\r\n");
    RealVec v = parse_real_vector(in, false, 0, "input");
    REQUIRE(v.size() == 2);
    CHECK(v[0] == 1.5);
    CHECK(v[1] == -2.25);
}

TEST_CASE("declared length is enforced") {
    std::istringstream in("1\n2\n3\n");
    CHECK_THROWS_AS(parse_real_vector(in, false, 4, "input"), std::runtime_error);
    std::istringstream in2("1\n2\n3\n");
    CHECK(parse_real_vector(in2, false, 3, "input").size() == 3);
}

TEST_CASE("json input validation") {
    std::istringstream notarray("{\"a\":1}");
    CHECK_THROWS_AS(parse_real_vector(notarray, true, 0, "input"), std::runtime_error);
    std::istringstream badelem("[1, \"two\", 3]");
    CHECK_THROWS_AS(parse_real_vector(badelem, true, 0, "input"), std::runtime_error);
    std::istringstream garbage("[1, 2");
    CHECK_THROWS_AS(parse_real_vector(garbage, true, 0, "input"), std::runtime_error);
}

TEST_CASE("missing files are reported") {
    CHECK_THROWS_AS(read_real_vector("/nonexistent/path/vec.txt", 0), std::runtime_error);
}

TEST_CASE("count table sorts by kind name then size") {
    CountTable t;
    t.rows.push_back(audit(AuditKind::fft, 8));
    t.rows.push_back(audit(AuditKind::dct4, 16));
    t.rows.push_back(audit(AuditKind::dct4, 8));
    t.rows.push_back(audit(AuditKind::dct3_v1, 8));
    t.sort_rows();
    CHECK(t.rows[0].kind == AuditKind::dct3_v1);
    CHECK(t.rows[1].kind == AuditKind::dct4);
    CHECK(t.rows[1].n == 8);
    CHECK(t.rows[2].kind == AuditKind::dct4);
    CHECK(t.rows[2].n == 16);
    CHECK(t.rows[3].kind == AuditKind::fft);
}

TEST_CASE("count table CSV shape") {
    CountTable t;
    t.rows.push_back(audit(AuditKind::dct4, 8));
    t.rows.push_back(audit(AuditKind::mdct, 1));  // known honest mismatch row
    std::string csv = t.to_csv();

    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "kind,N,adds,mults,flops,predicted,match");
    REQUIRE(std::getline(in, line));
    CHECK(line == "dct4,8,30,24,54,54,true");
    REQUIRE(std::getline(in, line));
    CHECK(line == "mdct,1,0,0,0,2,false");
    CHECK(!std::getline(in, line));
}

TEST_CASE("count table JSON uses integer counts") {
    CountTable t;
    t.rows.push_back(audit(AuditKind::dct4, 32));
    nlohmann::json j = nlohmann::json::parse(t.to_json());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["kind"] == "dct4");
    CHECK(j[0]["n"] == 32);
    CHECK(j[0]["adds"].is_number_integer());
    CHECK(j[0]["mults"].is_number_integer());
    CHECK(j[0]["flops"] == 338);
    CHECK(j[0]["predicted"] == 338);
    CHECK(j[0]["match"] == true);
}
