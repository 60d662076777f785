#pragma once

#include <cmath>
#include <cstdint>

#include "tt/arith.hpp"
#include "tt/rng.hpp"
#include "tt/types.hpp"

namespace tth {

inline tt::RealVec random_real(std::size_t n, std::uint64_t seed) {
    tt::SplitMix64 rng(seed);
    tt::RealVec x(n);
    for (auto& v : x) v = rng.uniform_pm1();
    return x;
}

inline tt::ComplexVec random_complex(std::size_t n, std::uint64_t seed) {
    tt::SplitMix64 rng(seed);
    tt::ComplexVec x(n);
    for (auto& z : x) z = {rng.uniform_pm1(), rng.uniform_pm1()};
    return x;
}

inline double rel_l2(const tt::RealVec& got, const tt::RealVec& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        num += (got[i] - want[i]) * (got[i] - want[i]);
        den += want[i] * want[i];
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

inline double max_abs_diff(const tt::RealVec& got, const tt::RealVec& want) {
    double m = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) m = std::max(m, std::abs(got[i] - want[i]));
    return m;
}

// run `f(ctx)` in a fresh audited context and return the counter
template <class F>
tt::OpCounter measure(F&& f) {
    tt::ExecutionContext ctx(tt::ExecutionContext::Mode::audited);
    f(ctx);
    return tt::counter_snapshot(ctx);
}

}  // namespace tth
