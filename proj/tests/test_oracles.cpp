#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "tt/oracles.hpp"
#include "tt/rng.hpp"

using namespace tt;

namespace {
constexpr double kPi = std::numbers::pi;

// independent reference DFT: long double accumulation, reverse summation order
ComplexVec reference_dft(const ComplexVec& x) {
    std::size_t n = x.size();
    ComplexVec out(n);
    for (std::size_t k = 0; k < n; ++k) {
        long double re = 0.0L, im = 0.0L;
        for (std::size_t j = n; j-- > 0;) {
            long double ang = -2.0L * kPi * static_cast<long double>(j * k) / n;
            long double c = std::cos(ang), s = std::sin(ang);
            re += x[j].real() * c - x[j].imag() * s;
            im += x[j].real() * s + x[j].imag() * c;
        }
        out[k] = {static_cast<double>(re), static_cast<double>(im)};
    }
    return out;
}
}  // namespace

TEST_CASE("reference transform: plain Fourier sum") {
    SUBCASE("length-1 identity") {
        ComplexVec x = {{3.5, -1.25}};
        ComplexVec y = naive_dft(x);
        CHECK(y[0].real() == doctest::Approx(3.5));
        CHECK(y[0].imag() == doctest::Approx(-1.25));
    }
    SUBCASE("impulse spreads flat") {
        ComplexVec x = {{1, 0}, {0, 0}, {0, 0}, {0, 0}};
        ComplexVec y = naive_dft(x);
        for (auto& z : y) {
            CHECK(z.real() == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(std::abs(z.imag()) < 1e-14);
        }
    }
    SUBCASE("agrees with an independent summation order") {
        ComplexVec x = tth::random_complex(8, 42);
        ComplexVec a = naive_dft(x);
        ComplexVec b = reference_dft(x);
        for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-12);
    }
    SUBCASE("double application is N times an index reversal") {
        ComplexVec x = tth::random_complex(16, 7);
        ComplexVec y = naive_dft(naive_dft(x));
        for (std::size_t k = 0; k < 16; ++k) {
            Cplx want = 16.0 * x[(16 - k) % 16];
            CHECK(std::abs(y[k] - want) < 1e-11);
        }
    }
}

TEST_CASE("reference cosine transform, half-shifted outputs") {
    SUBCASE("length 1 is identity") {
        RealVec y = naive_dct3({2.75});
        CHECK(y[0] == doctest::Approx(2.75));
    }
    SUBCASE("length 2 direct evaluation") {
        RealVec y = naive_dct3({1.0, 1.0});
        CHECK(y[0] == doctest::Approx(1.0 + std::cos(kPi / 4)).epsilon(1e-15));
        CHECK(y[1] == doctest::Approx(1.0 + std::cos(3 * kPi / 4)).epsilon(1e-15));
    }
}

TEST_CASE("reference sine transform, half-shifted outputs") {
    SUBCASE("length 1 is identity") {
        RealVec y = naive_dst3({-0.5});
        CHECK(y[0] == doctest::Approx(-0.5));
    }
    SUBCASE("length 2 direct evaluation") {
        RealVec y = naive_dst3({1.0, 0.0});
        CHECK(y[0] == doctest::Approx(std::sin(kPi / 4)).epsilon(1e-15));
        CHECK(y[1] == doctest::Approx(std::sin(3 * kPi / 4)).epsilon(1e-15));
    }
    SUBCASE("equals reversed-input cosine transform with alternating signs") {
        RealVec x = tth::random_real(8, 99);
        RealVec rev(x.rbegin(), x.rend());
        RealVec s = naive_dst3(x);
        RealVec c = naive_dct3(rev);
        for (std::size_t k = 0; k < 8; ++k) {
            double want = (k % 2 == 0) ? c[k] : -c[k];
            CHECK(s[k] == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("reference cosine transform, half-shifted both axes") {
    SUBCASE("length 1") {
        RealVec y = naive_dct4({1.0});
        CHECK(y[0] == doctest::Approx(std::cos(kPi / 4)).epsilon(1e-15));
    }
    SUBCASE("length 2 direct evaluation") {
        RealVec y = naive_dct4({1.0, 0.0});
        CHECK(y[0] == doctest::Approx(std::cos(kPi / 8)).epsilon(1e-15));
        CHECK(y[1] == doctest::Approx(std::cos(3 * kPi / 8)).epsilon(1e-15));
    }
    SUBCASE("self-inverse up to N/2") {
        for (std::size_t n : {1u, 2u, 4u, 8u, 16u, 32u}) {
            RealVec x = tth::random_real(n, 1000 + n);
            RealVec y = naive_dct4(naive_dct4(x));
            for (std::size_t i = 0; i < n; ++i)
                CHECK(y[i] == doctest::Approx(0.5 * n * x[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("reference sine transform, half-shifted both axes") {
    SUBCASE("length 1") {
        RealVec y = naive_dst4({1.0});
        CHECK(y[0] == doctest::Approx(std::sin(kPi / 4)).epsilon(1e-15));
    }
    SUBCASE("length 2 direct evaluation") {
        RealVec y = naive_dst4({0.0, 1.0});
        CHECK(y[0] == doctest::Approx(std::sin(3 * kPi / 8)).epsilon(1e-15));
        CHECK(y[1] == doctest::Approx(std::sin(9 * kPi / 8)).epsilon(1e-15));
    }
    SUBCASE("maps to the cosine kin with unit factor") {
        // alternate input signs + reverse outputs; the proportionality factor is exactly 1
        RealVec x = tth::random_real(8, 5);
        RealVec alt(8);
        for (std::size_t n = 0; n < 8; ++n) alt[n] = (n % 2 == 0) ? x[n] : -x[n];
        RealVec s = naive_dst4(x);
        RealVec c = naive_dct4(alt);
        for (std::size_t k = 0; k < 8; ++k)
            CHECK(s[7 - k] == doctest::Approx(c[k]).epsilon(1e-12));
    }
}

TEST_CASE("reference lapped transforms") {
    SUBCASE("zero in, zero out") {
        RealVec z(16, 0.0);
        for (double v : naive_mdct(z)) CHECK(v == 0.0);
        RealVec z2(8, 0.0);
        for (double v : naive_imdct(z2)) CHECK(v == 0.0);
    }
    SUBCASE("smallest forward block evaluates the kernel directly") {
        RealVec y = naive_mdct({3.0, 4.0});
        // kernel at N=1: cos(pi*(n+1)/2) -> {0, -1}
        CHECK(y.size() == 1);
        CHECK(y[0] == doctest::Approx(-4.0).epsilon(1e-14));
    }
    SUBCASE("smallest inverse block evaluates the kernel directly") {
        RealVec y = naive_imdct({2.0});
        CHECK(y.size() == 2);
        CHECK(std::abs(y[0]) < 1e-14);
        CHECK(y[1] == doctest::Approx(-2.0).epsilon(1e-14));
    }
    SUBCASE("forward block rejects odd lengths") {
        CHECK_THROWS(naive_mdct(RealVec(5, 1.0)));
    }
}

TEST_CASE("overlapped analysis/synthesis reconstructs N times the interior") {
    // constant established here by composing the two references over 50%-overlapped blocks
    const std::size_t N = 8;
    RealVec sig = tth::random_real(4 * N, 2024);

    auto block = [&](std::size_t off) {
        RealVec b(sig.begin() + off, sig.begin() + off + 2 * N);
        return naive_imdct(naive_mdct(b));
    };
    RealVec y0 = block(0), y1 = block(N), y2 = block(2 * N);

    RealVec recon(2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        recon[i] = y0[N + i] + y1[i];      // covers sig[N .. 2N)
        recon[N + i] = y1[N + i] + y2[i];  // covers sig[2N .. 3N)
    }
    for (std::size_t i = 0; i < 2 * N; ++i) {
        CHECK(std::abs(recon[i] - static_cast<double>(N) * sig[N + i]) <
              1e-10 * static_cast<double>(N));
    }
}

TEST_CASE("all references are linear") {
    SplitMix64 rng(31337);
    for (std::size_t n : {1u, 2u, 3u, 8u, 17u, 64u}) {
        RealVec x = tth::random_real(n, 10 * n + 1);
        RealVec y = tth::random_real(n, 10 * n + 2);
        double a = rng.uniform_pm1(), b = rng.uniform_pm1();
        RealVec mix(n);
        for (std::size_t i = 0; i < n; ++i) mix[i] = a * x[i] + b * y[i];

        auto check_lin = [&](auto&& f) {
            RealVec fx = f(x), fy = f(y), fm = f(mix);
            for (std::size_t i = 0; i < fm.size(); ++i)
                CHECK(fm[i] == doctest::Approx(a * fx[i] + b * fy[i]).epsilon(1e-12));
        };
        check_lin([](const RealVec& v) { return naive_dct3(v); });
        check_lin([](const RealVec& v) { return naive_dst3(v); });
        check_lin([](const RealVec& v) { return naive_dct4(v); });
        check_lin([](const RealVec& v) { return naive_dst4(v); });
        check_lin([](const RealVec& v) { return naive_imdct(v); });
        if (n % 2 == 0) check_lin([](const RealVec& v) { return naive_mdct(v); });
    }
}
