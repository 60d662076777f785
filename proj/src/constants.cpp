#include "tt/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "tt/types.hpp"

namespace tt {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

std::recursive_mutex g_scale_mutex;
std::map<std::size_t, ScaleTable> g_scale_tables;

const ScaleTable& scale_table_locked(std::size_t N) {
    auto it = g_scale_tables.find(N);
    if (it != g_scale_tables.end()) return it->second;

    ScaleTable t;
    t.n = N;
    if (N <= 4) {
        t.s.assign(1, 1.0);
    } else {
        const std::size_t q = N / 4;
        const ScaleTable& sub = scale_table_locked(q);
        t.s.resize(q);
        for (std::size_t k4 = 0; k4 < q; ++k4) {
            const double base = sub.at(k4);
            const double ang = 2.0 * kPi * static_cast<double>(k4) / static_cast<double>(N);
            t.s[k4] = k4 <= N / 8 ? base * std::cos(ang) : base * std::sin(ang);
        }
    }
    return g_scale_tables.emplace(N, std::move(t)).first->second;
}

}  // namespace

const ScaleTable& scale_table(std::size_t N) {
    if (!is_pow2(N)) throw std::invalid_argument("scale_table: N must be a power of two");
    std::lock_guard lock(g_scale_mutex);
    return scale_table_locked(N);
}

double scale_factor(std::size_t N, std::size_t k) {
    if (!is_pow2(N)) throw std::invalid_argument("scale_factor: N must be a power of two");
    if (k >= N) throw std::invalid_argument("scale_factor: k out of range");
    return scale_table(N).at(k);
}

TwiddleT twiddle_t(std::size_t N, std::size_t k) {
    if (!is_pow2(N) || N < 4) throw std::invalid_argument("twiddle_t: N must be a power of two >= 4");
    if (k >= N / 4) throw std::invalid_argument("twiddle_t: require 0 <= k < N/4");
    TwiddleT t;
    const double ang = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(N);
    if (k <= N / 8) {
        t.re = 1.0;  // exact: multiply-by-re is skipped structurally
        t.im = -std::tan(ang);
        t.unit_axis = TwiddleT::UnitAxis::real;
    } else {
        t.re = 1.0 / std::tan(ang);
        t.im = -1.0;  // exact
        t.unit_axis = TwiddleT::UnitAxis::imaginary;
    }
    return t;
}

FusedConstant fused_dct4_constant(std::size_t N, std::size_t k) {
    if (!is_pow2(N)) throw std::invalid_argument("fused_dct4_constant: N must be a power of two");
    if (k >= N) throw std::invalid_argument("fused_dct4_constant: k out of range");
    const std::size_t j = 2 * k + 1;
    const double mag = scale_factor(2 * N, j % (2 * N));
    const double ang = -2.0 * kPi * static_cast<double>(j) / static_cast<double>(8 * N);
    return {mag * std::cos(ang), mag * std::sin(ang)};
}

}  // namespace tt
