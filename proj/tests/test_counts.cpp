#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tt/counts.hpp"
#include "tt/types.hpp"

using namespace tt;

namespace {
const AuditKind kAllKinds[] = {
    AuditKind::dct3_v0, AuditKind::dct3_v1, AuditKind::dct3_v2, AuditKind::dct3_v4,
    AuditKind::dst3_v0, AuditKind::dst3_v1, AuditKind::dst3_v2, AuditKind::dst3_v4,
    AuditKind::dct4,    AuditKind::dct4_scaled, AuditKind::dst4,
    AuditKind::mdct,    AuditKind::imdct,   AuditKind::fft,
};

std::int64_t lg(std::size_t n) { return static_cast<std::int64_t>(lg2(n)); }
}  // namespace

TEST_CASE("core transform cost formula") {
    CHECK(dct4_count_formula(1) == 1);
    CHECK(dct4_count_formula(2) == 6);
    CHECK(dct4_count_formula(8) == 54);
    CHECK(dct4_count_formula(1024) == 20520);
    CHECK(dct4_count_formula(4096) == 97548);
    CHECK_THROWS_AS(dct4_count_formula(12), std::invalid_argument);
    CHECK_THROWS_AS(dct4_count_formula(0), std::invalid_argument);
}

TEST_CASE("unscaled half-shifted transform cost formula") {
    CHECK(dct3_unscaled_count_formula(1) == 0);
    CHECK(dct3_unscaled_count_formula(2) == 3);
    CHECK(dct3_unscaled_count_formula(8) == 41);
    CHECK(dct3_unscaled_count_formula(16) == 113);
    CHECK_THROWS_AS(dct3_unscaled_count_formula(3), std::invalid_argument);
}

TEST_CASE("multiply-savings formula and companions") {
    CHECK(ms_formula(1) == 0);
    CHECK(ms_formula(2) == 0);
    CHECK(ms_formula(4) == 1);
    CHECK(ms_formula(8) == 2);
    CHECK(ms_formula(16) == 7);
    CHECK(ms2_formula(1) == -1);
    CHECK(ms2_formula(4) == -2);
    CHECK(ms4_formula(2) == -2);
    CHECK(m_formula(2) == 0);
    CHECK_THROWS_AS(ms_formula(6), std::invalid_argument);
    CHECK_THROWS_AS(ms2_formula(6), std::invalid_argument);
    CHECK_THROWS_AS(ms4_formula(6), std::invalid_argument);
    CHECK_THROWS_AS(m_formula(6), std::invalid_argument);
}

TEST_CASE("companion recurrences hold for the closed forms") {
    for (std::size_t n = 4; n <= (std::size_t{1} << 16); n <<= 1) {
        auto h = static_cast<std::int64_t>(n / 2);
        CHECK(m_formula(n) == m_formula(n / 2) + 2 * ms_formula(n / 4));
        CHECK(ms_formula(n) == ms2_formula(n / 2) + 2 * ms_formula(n / 4) + h);
        CHECK(ms2_formula(n) == ms4_formula(n / 2) + 2 * ms_formula(n / 4));
        CHECK(ms4_formula(n) == ms2_formula(n / 2) + 2 * ms_formula(n / 4) - h);
    }
}

TEST_CASE("lapped-forward cost formula") {
    CHECK(mdct_count_formula(1) == 2);
    CHECK(mdct_count_formula(8) == 62);
    CHECK(mdct_count_formula(1024) == 21544);
    for (std::size_t n = 1; n <= 4096; n <<= 1)
        CHECK(mdct_count_formula(n) == dct4_count_formula(n) + static_cast<std::int64_t>(n));
}

TEST_CASE("classic split-radix baseline formula") {
    CHECK(split_radix_count_formula(1) == 2);  // outside its honest range (true cost is 0)
    CHECK(split_radix_count_formula(2) == 4);
    CHECK(split_radix_count_formula(64) == 1160);
    CHECK(split_radix_count_formula(4096) == 172040);
}

TEST_CASE("core formula decomposes as the even/odd split predicts") {
    for (std::size_t n = 2; n <= (std::size_t{1} << 20); n <<= 1) {
        std::int64_t sn = static_cast<std::int64_t>(n);
        CHECK(dct4_count_formula(n) == 2 * sn * lg(n) + sn - 2 * ms_formula(n / 2));
    }
}

TEST_CASE("the prior state of the art is 2 N lg N + N") {
    const std::int64_t prev[] = {56, 144, 352, 832, 1920, 4352, 9728, 21504, 47104, 102400};
    std::size_t n = 8;
    for (std::int64_t want : prev) {
        std::int64_t sn = static_cast<std::int64_t>(n);
        CHECK(2 * sn * lg(n) + sn == want);
        CHECK(dct4_count_formula(n) <= want);
        n <<= 1;
    }
}

TEST_CASE("kind names round-trip") {
    for (AuditKind k : kAllKinds) CHECK(parse_audit_kind(audit_kind_name(k)) == k);
    CHECK(parse_audit_kind("dct3") == AuditKind::dct3_v0);
    CHECK(parse_audit_kind("dst3") == AuditKind::dst3_v0);
    CHECK_THROWS_AS(parse_audit_kind("dct5"), std::invalid_argument);
}

TEST_CASE("audit report examples") {
    CountReport a = audit(AuditKind::dct4, 32);
    CHECK(a.flops() == 338);
    CHECK(a.predicted == 338);
    CHECK(a.match);

    CountReport b = audit(AuditKind::dct3_v0, 16);
    CHECK(b.flops() == 113);
    CHECK(b.match);

    CountReport c = audit(AuditKind::mdct, 256);
    CHECK(c.flops() == 4420);
    CHECK(c.predicted == 4164 + 256);
    CHECK(c.match);

    const std::uint64_t v1[] = {12, 39, 106, 273};
    std::size_t n = 4;
    for (std::uint64_t want : v1) {
        CHECK(audit(AuditKind::dct3_v1, n).flops() == want);
        n <<= 1;
    }
}

TEST_CASE("audit matches its prediction for every kind at moderate sizes") {
    for (AuditKind k : kAllKinds) {
        for (std::size_t n = 2; n <= 256; n <<= 1) {
            CountReport r = audit(k, n);
            CHECK(r.match);
            if (k != AuditKind::fft) {
                CHECK(static_cast<std::int64_t>(r.flops()) == r.predicted);
            } else {
                CHECK(static_cast<std::int64_t>(r.flops()) <= r.predicted);
            }
        }
    }
}

TEST_CASE("audit is honest about the degenerate length-1 lapped blocks") {
    // the formulas predict 2 and 1 there, but the real kernels need no
    // arithmetic at that size; the report must expose the mismatch
    CountReport f = audit(AuditKind::mdct, 1);
    CHECK(f.flops() == 0);
    CHECK(f.predicted == 2);
    CHECK(!f.match);
    CountReport i = audit(AuditKind::imdct, 1);
    CHECK(i.flops() == 0);
    CHECK(i.predicted == 1);
    CHECK(!i.match);
}

TEST_CASE("fft audit treats the baseline as an upper bound") {
    CountReport r1 = audit(AuditKind::fft, 1);
    CHECK(r1.flops() == 0);
    CHECK(r1.match);  // 0 <= 2
    CountReport r64 = audit(AuditKind::fft, 64);
    CHECK(r64.flops() == 1152);
    CHECK(r64.predicted == 1160);
    CHECK(r64.match);
}

TEST_CASE("audit rejects bad sizes") {
    CHECK_THROWS_AS(audit(AuditKind::dct4, 12), std::invalid_argument);
    CHECK_THROWS_AS(audit(AuditKind::fft, 0), std::invalid_argument);
}

TEST_CASE("audited counts are identical under different seeds") {
    for (AuditKind k : kAllKinds) {
        for (std::size_t n : {1u, 2u, 16u, 128u}) {
            CountReport a = audit(k, n, 1);
            CountReport b = audit(k, n, 0xDEADBEEFull);
            CHECK(a.adds == b.adds);
            CHECK(a.mults == b.mults);
            CHECK(a.predicted == b.predicted);
            CHECK(a.match == b.match);
        }
    }
}
