#include "tt/lapped.hpp"

#include <stdexcept>

#include "tt/trig.hpp"

namespace tt {

RealVec mdct(const RealVec& x, ExecutionContext& ctx) {
    if (x.size() % 2 != 0 || !is_pow2(x.size() / 2))
        throw std::invalid_argument("mdct: input length must be 2*(power of two)");
    const std::size_t N = x.size() / 2;
    if (N == 1) return {-x[1]};  // degenerate: the fold below needs even N

    RealVec xt(N);
    const std::size_t H = N / 2, base = 3 * N / 2;
    for (std::size_t n = 0; n < H; ++n)
        xt[n] = -scalar_add(x[base - 1 - n], x[base + n], ctx);  // negation free
    for (std::size_t n = H; n < N; ++n)
        xt[n] = scalar_add(x[n - H], -x[base - 1 - n], ctx);
    return dct4(xt, ctx);
}

RealVec imdct(const RealVec& C, ExecutionContext& ctx) {
    const std::size_t N = C.size();
    if (!is_pow2(N)) throw std::invalid_argument("imdct: input length must be a power of two");
    if (N == 1) return {0.0, -C[0]};  // degenerate direct evaluation

    const RealVec D = dct4(C, ctx);
    RealVec y(2 * N);
    // y_n = E_{n+N/2} with E the antiperiodic mirror extension of D:
    // E_m = D_m (m < N), -D_{2N-1-m} (N <= m < 2N), -E_{m-2N} beyond
    // (here m - 2N < N/2 always, so the last case reads D directly).
    for (std::size_t n = 0; n < 2 * N; ++n) {
        const std::size_t mi = n + N / 2;
        if (mi < N)
            y[n] = D[mi];
        else if (mi < 2 * N)
            y[n] = -D[2 * N - 1 - mi];
        else
            y[n] = -D[mi - 2 * N];
    }
    return y;
}

std::optional<RealVec> OverlapState::push(const RealVec& block) {
    if (block.size() % 2 != 0) throw std::invalid_argument("OverlapState: block length must be even");
    const std::size_t N = block.size() / 2;
    std::optional<RealVec> out;
    if (!carry.empty()) {
        if (carry.size() != N) throw std::invalid_argument("OverlapState: inconsistent block length");
        RealVec seg(N);
        for (std::size_t n = 0; n < N; ++n) seg[n] = carry[n] + block[n];
        out = std::move(seg);
    }
    carry.assign(block.begin() + static_cast<std::ptrdiff_t>(N), block.end());
    return out;
}

RealVec tdac_overlap_add(const std::vector<RealVec>& blocks) {
    RealVec out;
    OverlapState state;
    for (const RealVec& b : blocks) {
        if (!blocks.empty() && b.size() != blocks.front().size())
            throw std::invalid_argument("tdac_overlap_add: inconsistent block lengths");
        if (auto seg = state.push(b)) out.insert(out.end(), seg->begin(), seg->end());
    }
    return out;
}

}  // namespace tt
