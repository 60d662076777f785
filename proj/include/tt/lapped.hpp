#pragma once

#include <optional>
#include <vector>

#include "tt/arith.hpp"
#include "tt/types.hpp"

namespace tt {

// Lapped block transforms built on the fast DCT-IV. Kernels are unnormalized;
// overlap-adding imdct(mdct(.)) over 50%-overlapped blocks reconstructs N*x
// on interior samples (time-domain aliasing cancellation).

// C_k = sum_{n=0}^{2N-1} x_n cos[(pi/N)(n+1/2+N/2)(k+1/2)], k = 0..N-1.
// Folds the 2N inputs to N samples (N counted additions, negations free),
// then one DCT-IV: total cost = dct4 cost + N.
RealVec mdct(const RealVec& x, ExecutionContext& ctx);

// y_n = sum_k C_k cos[(pi/N)(n+1/2+N/2)(k+1/2)], n = 0..2N-1.
// One DCT-IV whose outputs are rearranged/negated (free): cost = dct4 cost.
RealVec imdct(const RealVec& C, ExecutionContext& ctx);

// Carry buffer for streaming overlap-add of length-2N blocks: push() sums the
// stored previous second half with the new block's first half and keeps the
// new second half. The first push only primes the carry.
struct OverlapState {
    RealVec carry;

    std::optional<RealVec> push(const RealVec& block);
};

// Overlap-add of consecutive length-2N blocks: emits one length-N segment per
// adjacent pair (block i second half + block i+1 first half).
RealVec tdac_overlap_add(const std::vector<RealVec>& blocks);

}  // namespace tt
