#include "tt/counts.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "tt/fft.hpp"
#include "tt/lapped.hpp"
#include "tt/rng.hpp"
#include "tt/trig.hpp"

namespace tt {

namespace {

std::int64_t checked_lg(std::size_t N, const char* who) {
    if (!is_pow2(N)) throw std::invalid_argument(std::string(who) + ": N must be a power of two");
    return static_cast<std::int64_t>(lg2(N));
}

// value given as (numerator scaled by `den`); the formulas are integral at
// powers of two, enforced here
std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* who) {
    if (num % den != 0) throw std::logic_error(std::string(who) + ": formula not integral");
    return num / den;
}

std::recursive_mutex g_memo_mutex;
std::map<std::size_t, std::int64_t> g_ms2_memo, g_ms4_memo, g_m_memo;

std::int64_t ms2_locked(std::size_t N);

std::int64_t ms4_locked(std::size_t N) {
    if (N == 1) return -1;
    if (N == 2) return -2;
    if (auto it = g_ms4_memo.find(N); it != g_ms4_memo.end()) return it->second;
    const std::int64_t v =
        ms2_locked(N / 2) + 2 * ms_formula(N / 4) - static_cast<std::int64_t>(N / 2);
    g_ms4_memo.emplace(N, v);
    return v;
}

std::int64_t ms2_locked(std::size_t N) {
    if (N <= 2) return -1;
    if (auto it = g_ms2_memo.find(N); it != g_ms2_memo.end()) return it->second;
    const std::int64_t v = ms4_locked(N / 2) + 2 * ms_formula(N / 4);
    g_ms2_memo.emplace(N, v);
    return v;
}

std::int64_t m_locked(std::size_t N) {
    if (N <= 2) return 0;
    if (auto it = g_m_memo.find(N); it != g_m_memo.end()) return it->second;
    const std::int64_t v = m_locked(N / 2) + 2 * ms_formula(N / 4);
    g_m_memo.emplace(N, v);
    return v;
}

RealVec random_real(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    RealVec x(n);
    for (auto& v : x) v = rng.uniform_pm1();
    return x;
}

}  // namespace

std::int64_t dct4_count_formula(std::size_t N) {
    const std::int64_t mm = checked_lg(N, "dct4_count_formula");
    const std::int64_t n = static_cast<std::int64_t>(N);
    const std::int64_t sg = mm % 2 ? -1 : 1;
    // 27 * value = 51 N m + 31 N + 6 sg m - 4 sg
    return exact_div(51 * n * mm + 31 * n + 6 * sg * mm - 4 * sg, 27, "dct4_count_formula");
}

std::int64_t dct3_unscaled_count_formula(std::size_t N) {
    const std::int64_t mm = checked_lg(N, "dct3_unscaled_count_formula");
    const std::int64_t n = static_cast<std::int64_t>(N);
    return 2 * n * mm - n + 1;
}

std::int64_t ms_formula(std::size_t N) {
    const std::int64_t mm = checked_lg(N, "ms_formula");
    const std::int64_t n = static_cast<std::int64_t>(N);
    const std::int64_t sg = mm % 2 ? -1 : 1;
    // 27 * value = 3 N m - N + 3 sg m + sg
    return exact_div(3 * n * mm - n + 3 * sg * mm + sg, 27, "ms_formula");
}

std::int64_t mdct_count_formula(std::size_t N) {
    return dct4_count_formula(N) + static_cast<std::int64_t>(N);
}

std::int64_t split_radix_count_formula(std::size_t N) {
    const std::int64_t mm = checked_lg(N, "split_radix_count_formula");
    const std::int64_t n = static_cast<std::int64_t>(N);
    return 4 * n * mm - 6 * n + 8;
}

std::int64_t ms2_formula(std::size_t N) {
    checked_lg(N, "ms2_formula");
    std::lock_guard lock(g_memo_mutex);
    return ms2_locked(N);
}

std::int64_t ms4_formula(std::size_t N) {
    checked_lg(N, "ms4_formula");
    std::lock_guard lock(g_memo_mutex);
    return ms4_locked(N);
}

std::int64_t m_formula(std::size_t N) {
    checked_lg(N, "m_formula");
    std::lock_guard lock(g_memo_mutex);
    return m_locked(N);
}

std::string audit_kind_name(AuditKind kind) {
    switch (kind) {
        case AuditKind::dct3_v0: return "dct3_v0";
        case AuditKind::dct3_v1: return "dct3_v1";
        case AuditKind::dct3_v2: return "dct3_v2";
        case AuditKind::dct3_v4: return "dct3_v4";
        case AuditKind::dst3_v0: return "dst3_v0";
        case AuditKind::dst3_v1: return "dst3_v1";
        case AuditKind::dst3_v2: return "dst3_v2";
        case AuditKind::dst3_v4: return "dst3_v4";
        case AuditKind::dct4: return "dct4";
        case AuditKind::dct4_scaled: return "dct4_scaled";
        case AuditKind::dst4: return "dst4";
        case AuditKind::mdct: return "mdct";
        case AuditKind::imdct: return "imdct";
        case AuditKind::fft: return "fft";
    }
    throw std::invalid_argument("audit_kind_name: unknown kind");
}

AuditKind parse_audit_kind(const std::string& name) {
    static const std::map<std::string, AuditKind> table = {
        {"dct3_v0", AuditKind::dct3_v0}, {"dct3_v1", AuditKind::dct3_v1},
        {"dct3_v2", AuditKind::dct3_v2}, {"dct3_v4", AuditKind::dct3_v4},
        {"dst3_v0", AuditKind::dst3_v0}, {"dst3_v1", AuditKind::dst3_v1},
        {"dst3_v2", AuditKind::dst3_v2}, {"dst3_v4", AuditKind::dst3_v4},
        {"dct3", AuditKind::dct3_v0},    {"dst3", AuditKind::dst3_v0},
        {"dct4", AuditKind::dct4},       {"dct4_scaled", AuditKind::dct4_scaled},
        {"dst4", AuditKind::dst4},       {"mdct", AuditKind::mdct},
        {"imdct", AuditKind::imdct},     {"fft", AuditKind::fft},
    };
    if (auto it = table.find(name); it != table.end()) return it->second;
    throw std::invalid_argument("unknown count kind: " + name);
}

CountReport audit(AuditKind kind, std::size_t N, std::uint64_t seed) {
    if (!is_pow2(N)) throw std::invalid_argument("audit: N must be a power of two");

    ExecutionContext ctx(ExecutionContext::Mode::audited);
    std::int64_t predicted = 0;
    bool bound_check = false;  // fft: match means measured <= predicted

    auto run_dct3 = [&](Dct3Variant variant, bool sine) {
        auto plan = dct3_plan(N, variant);
        const RealVec x = random_real(N, seed);
        if (sine)
            dst3_scaled(*plan, x, ctx);
        else
            dct3_scaled(*plan, x, ctx);
    };

    switch (kind) {
        case AuditKind::dct3_v0:
        case AuditKind::dst3_v0:
            run_dct3(Dct3Variant::unscaled, kind == AuditKind::dst3_v0);
            predicted = dct3_unscaled_count_formula(N);
            break;
        case AuditKind::dct3_v1:
        case AuditKind::dst3_v1:
            run_dct3(Dct3Variant::scaled1, kind == AuditKind::dst3_v1);
            predicted = dct3_unscaled_count_formula(N) - ms_formula(N);
            break;
        case AuditKind::dct3_v2:
        case AuditKind::dst3_v2:
            run_dct3(Dct3Variant::scaled2, kind == AuditKind::dst3_v2);
            predicted = dct3_unscaled_count_formula(N) - ms2_formula(N);
            break;
        case AuditKind::dct3_v4:
        case AuditKind::dst3_v4:
            run_dct3(Dct3Variant::scaled4, kind == AuditKind::dst3_v4);
            predicted = dct3_unscaled_count_formula(N) - ms4_formula(N);
            break;
        case AuditKind::dct4:
            dct4(random_real(N, seed), ctx);
            predicted = dct4_count_formula(N);
            break;
        case AuditKind::dct4_scaled:
            dct4_scaled_output(random_real(N, seed), ctx);
            predicted = dct4_count_formula(N) - static_cast<std::int64_t>(N);
            break;
        case AuditKind::dst4:
            dst4(random_real(N, seed), ctx);
            predicted = dct4_count_formula(N);
            break;
        case AuditKind::mdct:
            mdct(random_real(2 * N, seed), ctx);
            predicted = mdct_count_formula(N);
            break;
        case AuditKind::imdct:
            imdct(random_real(N, seed), ctx);
            predicted = dct4_count_formula(N);
            break;
        case AuditKind::fft: {
            SplitMix64 rng(seed);
            ComplexVec x(N);
            for (auto& z : x) z = {rng.uniform_pm1(), rng.uniform_pm1()};
            fft_scaled(N, 0, x, ctx);
            predicted = split_radix_count_formula(N);
            bound_check = true;
            break;
        }
    }

    CountReport r;
    r.kind = kind;
    r.n = N;
    r.adds = ctx.counter().adds;
    r.mults = ctx.counter().mults;
    r.predicted = predicted;
    const auto measured = static_cast<std::int64_t>(r.flops());
    r.match = bound_check ? measured <= predicted : measured == predicted;
    return r;
}

}  // namespace tt
