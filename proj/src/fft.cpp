#include "tt/fft.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "tt/rng.hpp"

namespace tt {

namespace {

std::recursive_mutex g_plan_mutex;
std::map<std::pair<std::size_t, int>, std::shared_ptr<const FftPlan>> g_plans;

int child_variant(int v) { return v == 0 ? 0 : (v == 1 ? 2 : (v == 2 ? 4 : 2)); }

std::shared_ptr<const FftPlan> fft_plan_locked(std::size_t N, int variant) {
    const auto key = std::make_pair(N, variant);
    if (auto it = g_plans.find(key); it != g_plans.end()) return it->second;

    auto p = std::make_shared<FftPlan>();
    p->n = N;
    p->variant = variant;

    if (N == 2 && variant == 4) p->base2_scale = 1.0 / scale_factor(8, 1);

    if (N >= 4) {
        const std::size_t N2 = N / 2, N4 = N / 4;
        p->half = fft_plan_locked(N2, child_variant(variant));
        p->quarter = fft_plan_locked(N4, 1);

        p->idx_fwd.resize(N4);
        p->idx_rev.resize(N4);
        for (std::size_t j = 0; j < N4; ++j) {
            p->idx_fwd[j] = static_cast<std::uint32_t>((4 * j + 1) % N);
            p->idx_rev[j] = static_cast<std::uint32_t>((4 * j + N - 1) % N);
        }

        p->t.resize(N4);
        for (std::size_t k = 1; k < N4; ++k) {
            if (k == N / 8) continue;  // peeled: t = 1 - i
            p->t[k] = twiddle_t(N, k);
        }

        const ScaleTable& sN = scale_table(N);
        switch (variant) {
            case 0:
                p->ratio1.resize(N4);
                p->ratio2.resize(N4);
                for (std::size_t k = 1; k < N4; ++k) p->ratio1[k] = p->ratio2[k] = sN.at(k);
                break;
            case 1:
                break;  // all ratios structurally 1
            case 2: {
                const ScaleTable& s2 = scale_table(2 * N);
                p->ratio1.resize(N4);
                p->ratio2.resize(N4);
                for (std::size_t k = 1; k < N4; ++k) p->ratio1[k] = sN.at(k) / s2.at(k);
                for (std::size_t k = 0; k < N4; ++k) p->ratio2[k] = sN.at(k) / s2.at(k + N4);
                break;
            }
            case 4: {
                const ScaleTable& s4 = scale_table(4 * N);
                p->ratio1.resize(N4);
                p->ratio2.resize(N4);
                p->ratio3.resize(N4);
                p->ratio4.resize(N4);
                for (std::size_t k = 1; k < N4; ++k) p->ratio1[k] = sN.at(k) / s4.at(k);
                for (std::size_t k = 0; k < N4; ++k) {
                    p->ratio2[k] = sN.at(k) / s4.at(k + N4);
                    p->ratio3[k] = sN.at(k) / s4.at(k + N2);
                    p->ratio4[k] = sN.at(k) / s4.at(k + N2 + N4);
                }
                break;
            }
        }
    }

    g_plans.emplace(key, p);
    return p;
}

struct C2 {
    double re, im;
};

template <class M>
inline C2 cadd(const C2& a, const C2& b, M& m) { return {m.add(a.re, b.re), m.add(a.im, b.im)}; }
template <class M>
inline C2 csub(const C2& a, const C2& b, M& m) { return {m.sub(a.re, b.re), m.sub(a.im, b.im)}; }
template <class M>
inline C2 cscale(const C2& z, double c, M& m) { return {m.mul(c, z.re), m.mul(c, z.im)}; }

// t*z where one component of t is the structural unit: 2 mults + 2 adds
template <class M>
inline C2 tmul(const TwiddleT& t, const C2& z, M& m) {
    if (t.unit_axis == TwiddleT::UnitAxis::real) {
        const double g = -t.im;  // t = 1 - i g
        return {m.add(z.re, m.mul(g, z.im)), m.sub(z.im, m.mul(g, z.re))};
    }
    const double g = t.re;  // t = g - i
    return {m.add(m.mul(g, z.re), z.im), m.sub(m.mul(g, z.im), z.re)};
}

// conj(t)*z
template <class M>
inline C2 tconjmul(const TwiddleT& t, const C2& z, M& m) {
    if (t.unit_axis == TwiddleT::UnitAxis::real) {
        const double g = -t.im;
        return {m.sub(z.re, m.mul(g, z.im)), m.add(z.im, m.mul(g, z.re))};
    }
    const double g = t.re;
    return {m.sub(m.mul(g, z.re), z.im), m.add(m.mul(g, z.im), z.re)};
}

template <class M>
void fft_exec(const FftPlan& p, const C2* x, C2* out, M& m) {
    const std::size_t N = p.n;
    if (N == 1) {
        out[0] = x[0];
        return;
    }
    if (N == 2) {
        const C2 a = cadd(x[0], x[1], m);
        C2 b = csub(x[0], x[1], m);
        if (p.variant == 4) b = cscale(b, p.base2_scale, m);
        out[0] = a;
        out[1] = b;
        return;
    }

    const std::size_t N2 = N / 2, N4 = N / 4, N8 = N / 8;

    std::vector<C2> xe(N2), zf(N4), zr(N4);
    for (std::size_t j = 0; j < N2; ++j) xe[j] = x[2 * j];
    for (std::size_t j = 0; j < N4; ++j) zf[j] = x[p.idx_fwd[j]];
    for (std::size_t j = 0; j < N4; ++j) zr[j] = x[p.idx_rev[j]];

    std::vector<C2> U(N2), Z(N4), Zp(N4);
    fft_exec(*p.half, xe.data(), U.data(), m);
    fft_exec(*p.quarter, zf.data(), Z.data(), m);
    fft_exec(*p.quarter, zr.data(), Zp.data(), m);

    for (std::size_t k = 0; k < N4; ++k) {
        C2 G, H;
        if (k == 0) {
            G = Z[0];
            H = Zp[0];
        } else if (k == N8) {
            // t = 1 - i exactly: each product costs two adds
            G = {m.add(Z[k].re, Z[k].im), m.sub(Z[k].im, Z[k].re)};
            H = {m.sub(Zp[k].re, Zp[k].im), m.add(Zp[k].im, Zp[k].re)};
        } else {
            G = tmul(p.t[k], Z[k], m);
            H = tconjmul(p.t[k], Zp[k], m);
        }
        const C2 A = cadd(G, H, m);
        const C2 B = csub(G, H, m);
        const C2 iB = {B.im, -B.re};  // -i*B, free

        if (p.variant != 4) {
            C2 As = A, iBs = iB;
            if (p.variant == 0) {
                if (k != 0) {
                    As = cscale(A, p.ratio1[k], m);
                    iBs = cscale(iB, p.ratio2[k], m);
                }
            } else if (p.variant == 2) {
                if (k != 0) As = cscale(A, p.ratio1[k], m);
                iBs = cscale(iB, p.ratio2[k], m);
            }
            out[k] = cadd(U[k], As, m);
            out[k + N2] = csub(U[k], As, m);
            out[k + N4] = cadd(U[k + N4], iBs, m);
            out[k + N4 + N2] = csub(U[k + N4], iBs, m);
        } else {
            const C2 pl = cadd(U[k], A, m);
            const C2 mi = csub(U[k], A, m);
            const C2 qu = cadd(U[k + N4], iB, m);
            const C2 rs = csub(U[k + N4], iB, m);
            out[k] = k == 0 ? pl : cscale(pl, p.ratio1[k], m);
            out[k + N4] = cscale(qu, p.ratio2[k], m);
            out[k + N2] = cscale(mi, p.ratio3[k], m);
            out[k + N2 + N4] = cscale(rs, p.ratio4[k], m);
        }
    }
}

ComplexVec run_fft(const FftPlan& plan, const ComplexVec& x, ExecutionContext& ctx) {
    std::vector<C2> in(plan.n), out(plan.n);
    for (std::size_t j = 0; j < plan.n; ++j) in[j] = {x[j].real(), x[j].imag()};
    if (ctx.audited()) {
        AuditedMode m{&ctx.counter()};
        fft_exec(plan, in.data(), out.data(), m);
    } else {
        NumericMode m;
        fft_exec(plan, in.data(), out.data(), m);
    }
    ComplexVec res(plan.n);
    for (std::size_t j = 0; j < plan.n; ++j) res[j] = {out[j].re, out[j].im};
    return res;
}

}  // namespace

std::shared_ptr<const FftPlan> fft_plan(std::size_t N, int variant) {
    if (!is_pow2(N)) throw std::invalid_argument("fft_plan: N must be a power of two");
    if (variant != 0 && variant != 1 && variant != 2 && variant != 4)
        throw std::invalid_argument("fft_plan: variant must be 0, 1, 2 or 4");
    std::lock_guard lock(g_plan_mutex);
    return fft_plan_locked(N, variant);
}

ComplexVec fft_scaled(const FftPlan& plan, const ComplexVec& x, ExecutionContext& ctx) {
    if (x.size() != plan.n) throw std::invalid_argument("fft_scaled: input length != plan size");
    return run_fft(plan, x, ctx);
}

ComplexVec fft_scaled(std::size_t N, int variant, const ComplexVec& x, ExecutionContext& ctx) {
    return fft_scaled(*fft_plan(N, variant), x, ctx);
}

OpCounter fft_flop_measurement(std::size_t N) {
    auto plan = fft_plan(N, 0);
    SplitMix64 rng(1);
    ComplexVec x(N);
    for (auto& z : x) z = {rng.uniform_pm1(), rng.uniform_pm1()};
    ExecutionContext ctx(ExecutionContext::Mode::audited);
    fft_scaled(*plan, x, ctx);
    return counter_snapshot(ctx);
}

}  // namespace tt
