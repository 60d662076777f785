// Command-line front end: run transforms on data files, emit flop-count
// tables, and verify the fast paths against the naive references.
// Exit codes: 0 success, 1 check/verification failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tt/counts.hpp"
#include "tt/fft.hpp"
#include "tt/io.hpp"
#include "tt/lapped.hpp"
#include "tt/oracles.hpp"
#include "tt/rng.hpp"
#include "tt/trig.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kTransformKinds = {"dct3", "dst3",  "dct4", "dst4",
                                                  "mdct", "imdct", "fft"};

std::size_t require_pow2(std::size_t n) {
    if (!tt::is_pow2(n)) throw UsageError("--n must be a power of two, got " + std::to_string(n));
    return n;
}

tt::RealVec random_real(std::size_t n, std::uint64_t seed) {
    tt::SplitMix64 rng(seed);
    tt::RealVec x(n);
    for (auto& v : x) v = rng.uniform_pm1();
    return x;
}

tt::ComplexVec random_complex(std::size_t n, std::uint64_t seed) {
    tt::SplitMix64 rng(seed);
    tt::ComplexVec x(n);
    for (auto& z : x) z = {rng.uniform_pm1(), rng.uniform_pm1()};
    return x;
}

// --------------------------------------------------------------- transform

struct TransformArgs {
    std::string kind;
    std::size_t n = 0;
    std::string input;
    std::string output = "-";
    bool random = false;
    std::uint64_t seed = 1;
    int scale_variant = 0;
    bool scaled_output = false;
};

int run_transform(const TransformArgs& a) {
    const std::size_t N = require_pow2(a.n);
    if (!a.random && a.input.empty()) throw UsageError("need --input FILE or --random");

    tt::ExecutionContext ctx;
    const bool complex_io = a.kind == "fft";
    const std::size_t in_len = a.kind == "mdct" ? 2 * N : N;

    tt::RealVec xr;
    tt::ComplexVec xc;
    if (complex_io)
        xc = a.random ? random_complex(N, a.seed) : tt::read_complex_vector(a.input, N);
    else
        xr = a.random ? random_real(in_len, a.seed) : tt::read_real_vector(a.input, in_len);

    tt::RealVec outr;
    tt::ComplexVec outc;
    if (a.kind == "dct3" || a.kind == "dst3") {
        auto plan = tt::dct3_plan(N, tt::dct3_variant_from_code(a.scale_variant));
        outr = a.kind == "dct3" ? tt::dct3_scaled(*plan, xr, ctx) : tt::dst3_scaled(*plan, xr, ctx);
    } else if (a.kind == "dct4") {
        outr = a.scaled_output ? tt::dct4_scaled_output(xr, ctx) : tt::dct4(xr, ctx);
    } else if (a.kind == "dst4") {
        outr = tt::dst4(xr, ctx);
    } else if (a.kind == "mdct") {
        outr = tt::mdct(xr, ctx);
    } else if (a.kind == "imdct") {
        outr = tt::imdct(xr, ctx);
    } else if (a.kind == "fft") {
        if (a.scale_variant != 0 && a.scale_variant != 1 && a.scale_variant != 2 &&
            a.scale_variant != 4)
            throw UsageError("--scale-variant must be 0, 1, 2 or 4");
        outc = tt::fft_scaled(N, a.scale_variant, xc, ctx);
    }

    if (a.output == "-") {
        if (complex_io)
            tt::write_complex_vector(std::cout, outc, false);
        else
            tt::write_real_vector(std::cout, outr, false);
    } else {
        if (complex_io)
            tt::write_complex_vector(a.output, outc);
        else
            tt::write_real_vector(a.output, outr);
    }
    return kExitOk;
}

// ------------------------------------------------------------------- count

struct CountArgs {
    std::vector<std::string> kinds;
    std::size_t nmin = 8;
    std::size_t nmax = 4096;
    std::string format = "csv";
    std::string output = "-";
    bool check = false;
    std::uint64_t seed = 1;
};

int run_count(const CountArgs& a) {
    if (!tt::is_pow2(a.nmin) || !tt::is_pow2(a.nmax))
        throw UsageError("--min and --max must be powers of two");
    if (a.nmin > a.nmax) throw UsageError("--min must not exceed --max");
    if (a.format != "csv" && a.format != "json")
        throw UsageError("--format must be csv or json");

    std::vector<tt::AuditKind> kinds;
    if (a.kinds.empty()) {
        kinds = {tt::AuditKind::dct3_v0, tt::AuditKind::dct3_v1, tt::AuditKind::dct3_v2,
                 tt::AuditKind::dct3_v4, tt::AuditKind::dst3_v0, tt::AuditKind::dst3_v1,
                 tt::AuditKind::dst3_v2, tt::AuditKind::dst3_v4, tt::AuditKind::dct4,
                 tt::AuditKind::dct4_scaled, tt::AuditKind::dst4, tt::AuditKind::mdct,
                 tt::AuditKind::imdct, tt::AuditKind::fft};
    } else {
        for (const auto& name : a.kinds) {
            try {
                kinds.push_back(tt::parse_audit_kind(name));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
    }

    tt::CountTable table;
    for (tt::AuditKind kind : kinds)
        for (std::size_t n = a.nmin; n <= a.nmax; n *= 2)
            table.rows.push_back(tt::audit(kind, n, a.seed));
    table.sort_rows();

    const std::string text = a.format == "csv" ? table.to_csv() : table.to_json();
    if (a.output == "-") {
        std::cout << text;
    } else {
        std::ofstream f(a.output);
        if (!f) throw std::runtime_error(a.output + ": cannot open for writing");
        f << text;
    }

    if (a.check) {
        const bool all_match = std::all_of(table.rows.begin(), table.rows.end(),
                                           [](const tt::CountReport& r) { return r.match; });
        if (!all_match) {
            std::cerr << "count check failed: at least one row does not match its prediction\n";
            return kExitCheckFailed;
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    std::string kind;
    std::size_t n = 0;
    std::size_t trials = 20;
    double tol = 1e-10;
    std::uint64_t seed = 1;
    int scale_variant = 0;
    bool scaled_output = false;
};

double rel_l2(const tt::RealVec& got, const tt::RealVec& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        num += (got[i] - want[i]) * (got[i] - want[i]);
        den += want[i] * want[i];
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

int run_verify(const VerifyArgs& a) {
    const std::size_t N = require_pow2(a.n);
    if (a.trials < 1) throw UsageError("--trials must be >= 1");
    if (!(a.tol > 0.0)) throw UsageError("--tol must be > 0");

    tt::ExecutionContext ctx;
    double max_rel = 0.0, max_abs = 0.0;
    tt::SplitMix64 seeds(a.seed);

    for (std::size_t trial = 0; trial < a.trials; ++trial) {
        const std::uint64_t s = seeds.next();
        tt::RealVec got, want;
        if (a.kind == "fft") {
            const tt::ComplexVec x = random_complex(N, s);
            const tt::ComplexVec y = tt::fft_scaled(N, a.scale_variant, x, ctx);
            const tt::ComplexVec ref = tt::naive_dft(x);
            got.reserve(2 * N);
            want.reserve(2 * N);
            for (std::size_t k = 0; k < N; ++k) {
                const double sc =
                    a.scale_variant == 0
                        ? 1.0
                        : tt::scale_factor(static_cast<std::size_t>(a.scale_variant) * N,
                                           k % (static_cast<std::size_t>(a.scale_variant) * N));
                got.push_back(y[k].real() * sc);
                got.push_back(y[k].imag() * sc);
                want.push_back(ref[k].real());
                want.push_back(ref[k].imag());
            }
        } else if (a.kind == "dct3" || a.kind == "dst3") {
            auto variant = tt::dct3_variant_from_code(a.scale_variant);
            auto plan = tt::dct3_plan(N, variant);
            const tt::RealVec x = random_real(N, s);
            got = a.kind == "dct3" ? tt::dct3_scaled(*plan, x, ctx) : tt::dst3_scaled(*plan, x, ctx);
            want = a.kind == "dct3" ? tt::naive_dct3(x) : tt::naive_dst3(x);
            if (a.scale_variant != 0)
                for (std::size_t k = 0; k < N; ++k)
                    got[k] *= tt::scale_factor(4 * static_cast<std::size_t>(a.scale_variant) * N,
                                               2 * k + 1);
        } else if (a.kind == "dct4") {
            const tt::RealVec x = random_real(N, s);
            got = a.scaled_output ? tt::dct4_scaled_output(x, ctx) : tt::dct4(x, ctx);
            want = tt::naive_dct4(x);
            if (a.scaled_output)
                for (std::size_t k = 0; k < N; ++k) got[k] *= tt::scale_factor(8 * N, 2 * k + 1);
        } else if (a.kind == "dst4") {
            const tt::RealVec x = random_real(N, s);
            got = tt::dst4(x, ctx);
            want = tt::naive_dst4(x);
        } else if (a.kind == "mdct") {
            const tt::RealVec x = random_real(2 * N, s);
            got = tt::mdct(x, ctx);
            want = tt::naive_mdct(x);
        } else if (a.kind == "imdct") {
            const tt::RealVec x = random_real(N, s);
            got = tt::imdct(x, ctx);
            want = tt::naive_imdct(x);
        }

        max_rel = std::max(max_rel, rel_l2(got, want));
        for (std::size_t i = 0; i < want.size(); ++i)
            max_abs = std::max(max_abs, std::abs(got[i] - want[i]));
    }

    std::printf("verify %s n=%zu trials=%zu: max_abs_err=%.3e max_rel_l2=%.3e tol=%.3e\n",
                a.kind.c_str(), N, a.trials, max_abs, max_rel, a.tol);
    if (max_rel > a.tol) {
        std::fprintf(stderr, "verification failed: max relative error %.3e exceeds %.3e\n",
                     max_rel, a.tol);
        return kExitCheckFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trigonometric transform toolkit: reduced-flop DCT/DST/MDCT and a rescaled "
                 "split-radix FFT, with exact operation audits"};
    app.require_subcommand(1);

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "run one transform on a data vector");
    transform->add_option("--kind", ta.kind, "transform kind")
        ->required()
        ->check(CLI::IsMember(kTransformKinds));
    transform->add_option("--n", ta.n, "transform size (power of two)")->required();
    transform->add_option("--input", ta.input,
                          "input vector file (one real per line; .json = JSON array; fft: "
                          "re,im interleaved, 2N values; mdct: 2N values)");
    transform->add_flag("--random", ta.random, "use seeded random input instead of --input");
    transform->add_option("--seed", ta.seed, "random seed (default 1)");
    transform->add_option("--scale-variant", ta.scale_variant,
                          "output scaling variant for dct3/dst3/fft: 0, 1, 2 or 4 (default 0)");
    transform->add_flag("--scaled-output", ta.scaled_output,
                        "dct4 only: divide outputs by s(8N,2k+1) (saves N multiplies)");
    transform->add_option("--output", ta.output, "output file, or - for stdout (default)");

    CountArgs ca;
    auto* count = app.add_subcommand("count", "emit audited flop counts vs. predictions");
    count->add_option("--kind", ca.kinds,
                      "count kinds (repeatable; default all): dct3[_v0|_v1|_v2|_v4], "
                      "dst3[_v0|...], dct4, dct4_scaled, dst4, mdct, imdct, fft");
    count->add_option("--min", ca.nmin, "smallest size (power of two, default 8)");
    count->add_option("--max", ca.nmax, "largest size (power of two, default 4096)");
    count->add_option("--format", ca.format, "csv or json (default csv)");
    count->add_option("--output", ca.output, "output file, or - for stdout (default)");
    count->add_flag("--check", ca.check, "exit 1 unless every row matches its prediction");
    count->add_option("--seed", ca.seed, "random input seed (counts are data-independent)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "compare a fast transform against its naive reference");
    verify->add_option("--kind", va.kind, "transform kind")
        ->required()
        ->check(CLI::IsMember(kTransformKinds));
    verify->add_option("--n", va.n, "transform size (power of two)")->required();
    verify->add_option("--trials", va.trials, "random trials (default 20)");
    verify->add_option("--tol", va.tol, "max relative L2 error (default 1e-10)");
    verify->add_option("--seed", va.seed, "random seed (default 1)");
    verify->add_option("--scale-variant", va.scale_variant,
                       "scaling variant for dct3/dst3/fft (default 0)");
    verify->add_flag("--scaled-output", va.scaled_output, "dct4 only: scaled-output variant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (transform->parsed()) return run_transform(ta);
        if (count->parsed()) return run_count(ca);
        if (verify->parsed()) return run_verify(va);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        // bad input files / parse errors are usage errors by contract
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCheckFailed;
    }
    return kExitUsage;
}
