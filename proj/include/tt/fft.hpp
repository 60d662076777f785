#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tt/arith.hpp"
#include "tt/constants.hpp"
#include "tt/types.hpp"

namespace tt {

// Plan for the rescaled conjugate-pair split-radix FFT. The transform of
// variant v computes X_k = DFT(x)_k / s(v*N, k); variant 0 is the plain DFT.
// Child wiring is fixed: the half-size child of variant v in {0,1,2} has
// variant 2v, of variant 4 has variant 2; both quarter-size children are
// always variant 1 (they share one plan). Plans are immutable once built and
// safe to share across threads.
struct FftPlan {
    std::size_t n = 0;
    int variant = 0;  // 0, 1, 2, or 4

    std::shared_ptr<const FftPlan> half;     // size N/2
    std::shared_ptr<const FftPlan> quarter;  // size N/4, variant 1

    // Gather index sets of the two quarter-size subtransforms:
    // idx_fwd[j] = (4j+1) mod N, idx_rev[j] = (4j-1) mod N.
    std::vector<std::uint32_t> idx_fwd, idx_rev;

    // Per-k combine constants, k in [0, N/4). t[0] and t[N/8] are unused
    // (those iterations are peeled: t = 1 and t = 1-i respectively).
    std::vector<TwiddleT> t;
    // Output scale ratios s(N,k)/s(vN, k') per output line. Variants 0 and 2
    // use ratio1 (lines k, k+N/2) and ratio2 (lines k+N/4, k+3N/4); variant 4
    // uses ratio1..ratio4 for lines k, k+N/4, k+N/2, k+3N/4. Entries that are
    // structurally 1 (variant 1 entirely; ratio1[0]; variant 0's ratio2[0])
    // are never read.
    std::vector<double> ratio1, ratio2, ratio3, ratio4;

    // N = 2 applies 1/s(2v, 1) to the difference line; only variant 4's
    // constant differs from 1.
    double base2_scale = 1.0;
};

// Memoized plan lookup (variant in {0,1,2,4}, N a power of two).
std::shared_ptr<const FftPlan> fft_plan(std::size_t N, int variant);

// X_k = DFT(x)_k / s(variant*N, k). Out-of-place; reentrant given distinct
// contexts.
ComplexVec fft_scaled(const FftPlan& plan, const ComplexVec& x, ExecutionContext& ctx);

// Convenience: plan lookup + execution.
ComplexVec fft_scaled(std::size_t N, int variant, const ComplexVec& x, ExecutionContext& ctx);

// Runs the variant-0 transform at size N in audited mode on arbitrary
// complex input and returns the counter.
OpCounter fft_flop_measurement(std::size_t N);

}  // namespace tt
