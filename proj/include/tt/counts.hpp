#pragma once

#include <cstdint>
#include <string>

#include "tt/arith.hpp"
#include "tt/types.hpp"

namespace tt {

// Closed-form flop counts (exact integer arithmetic; every formula below is
// integral at powers of two, enforced by construction). All take N = 2^m and
// throw std::invalid_argument otherwise.

// (17/9) N lg N + (31/27) N + (2/9)(-1)^{lg N} lg N - (4/27)(-1)^{lg N}
std::int64_t dct4_count_formula(std::size_t N);

// 2 N lg N - N + 1
std::int64_t dct3_unscaled_count_formula(std::size_t N);

// (1/9) N lg N - (1/27) N + (1/9)(-1)^{lg N} lg N + (1/27)(-1)^{lg N}
// (the multiply savings of the variant-1 scaled DCT-III vs. unscaled)
std::int64_t ms_formula(std::size_t N);

// dct4_count_formula(N) + N
std::int64_t mdct_count_formula(std::size_t N);

// 4 N lg N - 6 N + 8 (classic split-radix complex-FFT flop count; intended
// range N >= 2 — at N = 1 the formula yields 2, not the true 0)
std::int64_t split_radix_count_formula(std::size_t N);

// Companion savings rows for the other scaled DCT-III variants, defined by
// the variant recurrences with bases ms2(1) = -1, ms2(2) = -1, ms4(1) = -1,
// ms4(2) = -2 (negative = the variant spends extra flops at the base).
std::int64_t ms2_formula(std::size_t N);
std::int64_t ms4_formula(std::size_t N);
// Savings of the rescaled-children unscaled variant vs. the plain one:
// m(1) = m(2) = 0, m(N) = m(N/2) + 2*ms(N/4).
std::int64_t m_formula(std::size_t N);

// ----------------------------------------------------------------- audits

enum class AuditKind {
    dct3_v0, dct3_v1, dct3_v2, dct3_v4,
    dst3_v0, dst3_v1, dst3_v2, dst3_v4,
    dct4, dct4_scaled, dst4,
    mdct, imdct,
    fft,
};

// CSV/CLI names: "dct3_v0".."dct3_v4", "dst3_v0".., "dct4", "dct4_scaled",
// "dst4", "mdct", "imdct", "fft".
std::string audit_kind_name(AuditKind kind);
AuditKind parse_audit_kind(const std::string& name);  // throws on unknown

struct CountReport {
    AuditKind kind;
    std::size_t n = 0;
    std::uint64_t adds = 0;
    std::uint64_t mults = 0;
    std::int64_t predicted = 0;
    bool match = false;  // exact equality; for fft: measured <= predicted

    std::uint64_t flops() const { return adds + mults; }
};

// Runs the fast transform of `kind` at size N in audited mode on seeded
// pseudo-random input and compares against its closed-form prediction
// (for fft, against the split-radix bound, match meaning "<=").
CountReport audit(AuditKind kind, std::size_t N, std::uint64_t seed = 1);

}  // namespace tt
