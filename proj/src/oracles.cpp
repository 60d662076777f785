#include "tt/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tt {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

// cos/sin of (pi * j / den) for j = 0..2*den-1 (full period)
struct TrigTable {
    std::vector<double> c, s;
    std::size_t period;

    explicit TrigTable(std::size_t den) : period(2 * den) {
        c.resize(period);
        s.resize(period);
        for (std::size_t j = 0; j < period; ++j) {
            const double ang = kPi * static_cast<double>(j) / static_cast<double>(den);
            c[j] = std::cos(ang);
            s[j] = std::sin(ang);
        }
    }

    double cos_at(std::size_t j) const { return c[j % period]; }
    double sin_at(std::size_t j) const { return s[j % period]; }
};

}  // namespace

ComplexVec naive_dft(const ComplexVec& x) {
    const std::size_t N = x.size();
    ComplexVec out(N);
    if (N == 0) return out;
    TrigTable tab(N);  // angle 2*pi*j/N == pi*j/(N/2); use pi*(2*j)/N
    for (std::size_t k = 0; k < N; ++k) {
        double re = 0.0, im = 0.0;
        for (std::size_t n = 0; n < N; ++n) {
            const std::size_t j = (2 * ((n * k) % N)) % tab.period;
            const double c = tab.c[j];
            const double s = -tab.s[j];  // e^{-i ang}
            re += x[n].real() * c - x[n].imag() * s;
            im += x[n].real() * s + x[n].imag() * c;
        }
        out[k] = {re, im};
    }
    return out;
}

RealVec naive_dct3(const RealVec& x) {
    const std::size_t N = x.size();
    RealVec out(N);
    TrigTable tab(2 * N);  // angle pi*n*(2k+1)/(2N)
    for (std::size_t k = 0; k < N; ++k) {
        double acc = 0.0;
        for (std::size_t n = 0; n < N; ++n) acc += x[n] * tab.cos_at(n * (2 * k + 1));
        out[k] = acc;
    }
    return out;
}

RealVec naive_dst3(const RealVec& x) {
    const std::size_t N = x.size();
    RealVec out(N);
    TrigTable tab(2 * N);  // angle pi*(n+1)*(2k+1)/(2N)
    for (std::size_t k = 0; k < N; ++k) {
        double acc = 0.0;
        for (std::size_t n = 0; n < N; ++n) acc += x[n] * tab.sin_at((n + 1) * (2 * k + 1));
        out[k] = acc;
    }
    return out;
}

RealVec naive_dct4(const RealVec& x) {
    const std::size_t N = x.size();
    RealVec out(N);
    TrigTable tab(4 * N);  // angle pi*(2n+1)*(2k+1)/(4N)
    for (std::size_t k = 0; k < N; ++k) {
        double acc = 0.0;
        for (std::size_t n = 0; n < N; ++n) acc += x[n] * tab.cos_at((2 * n + 1) * (2 * k + 1));
        out[k] = acc;
    }
    return out;
}

RealVec naive_dst4(const RealVec& x) {
    const std::size_t N = x.size();
    RealVec out(N);
    TrigTable tab(4 * N);
    for (std::size_t k = 0; k < N; ++k) {
        double acc = 0.0;
        for (std::size_t n = 0; n < N; ++n) acc += x[n] * tab.sin_at((2 * n + 1) * (2 * k + 1));
        out[k] = acc;
    }
    return out;
}

RealVec naive_mdct(const RealVec& x) {
    if (x.size() % 2 != 0) throw std::invalid_argument("naive_mdct: input length must be even");
    const std::size_t N = x.size() / 2;
    RealVec out(N);
    if (N == 0) return out;
    TrigTable tab(4 * N);  // angle pi*(2n+1+N)*(2k+1)/(4N)
    for (std::size_t k = 0; k < N; ++k) {
        double acc = 0.0;
        for (std::size_t n = 0; n < 2 * N; ++n)
            acc += x[n] * tab.cos_at((2 * n + 1 + N) * (2 * k + 1));
        out[k] = acc;
    }
    return out;
}

RealVec naive_imdct(const RealVec& C) {
    const std::size_t N = C.size();
    RealVec out(2 * N);
    if (N == 0) return out;
    TrigTable tab(4 * N);
    for (std::size_t n = 0; n < 2 * N; ++n) {
        double acc = 0.0;
        for (std::size_t k = 0; k < N; ++k)
            acc += C[k] * tab.cos_at((2 * n + 1 + N) * (2 * k + 1));
        out[n] = acc;
    }
    return out;
}

}  // namespace tt
