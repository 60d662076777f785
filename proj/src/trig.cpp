#include "tt/trig.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace tt {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

std::recursive_mutex g_plan_mutex;
std::map<std::pair<std::size_t, int>, std::shared_ptr<const Dct3Plan>> g_dct3_plans;
std::map<std::size_t, std::shared_ptr<const Dct4Plan>> g_dct4_plans;

int variant_key(Dct3Variant v) {
    switch (v) {
        case Dct3Variant::unscaled: return 0;
        case Dct3Variant::scaled1: return 1;
        case Dct3Variant::scaled2: return 2;
        case Dct3Variant::scaled4: return 4;
        case Dct3Variant::unscaled_rs: return 5;
    }
    return 0;
}

Dct3Variant half_child(Dct3Variant v) {
    switch (v) {
        case Dct3Variant::unscaled: return Dct3Variant::unscaled;
        case Dct3Variant::scaled1: return Dct3Variant::scaled2;
        case Dct3Variant::scaled2: return Dct3Variant::scaled4;
        case Dct3Variant::scaled4: return Dct3Variant::scaled2;
        case Dct3Variant::unscaled_rs: return Dct3Variant::unscaled_rs;
    }
    return Dct3Variant::unscaled;
}

Dct3Variant quarter_child(Dct3Variant v) {
    return v == Dct3Variant::unscaled ? Dct3Variant::unscaled : Dct3Variant::scaled1;
}

std::shared_ptr<const Dct3Plan> dct3_plan_locked(std::size_t N, Dct3Variant variant) {
    const auto key = std::make_pair(N, variant_key(variant));
    if (auto it = g_dct3_plans.find(key); it != g_dct3_plans.end()) return it->second;

    auto p = std::make_shared<Dct3Plan>();
    p->n = N;
    p->variant = variant;

    if (N == 1) {
        if (variant == Dct3Variant::scaled2) p->base0 = 1.0 / scale_factor(8, 1);
        if (variant == Dct3Variant::scaled4) p->base0 = 1.0 / scale_factor(16, 1);
    } else if (N == 2) {
        switch (variant) {
            case Dct3Variant::unscaled:
            case Dct3Variant::unscaled_rs:
                p->base0 = std::cos(kPi / 4);
                break;
            case Dct3Variant::scaled1:
                p->base0 = std::sqrt(2.0);
                break;
            case Dct3Variant::scaled2:
                p->base0 = 1.0 / scale_factor(16, 1);
                p->base1 = std::cos(kPi / 4) / scale_factor(16, 1);
                break;
            case Dct3Variant::scaled4:
                p->base0 = std::cos(kPi / 4);
                p->base1 = 1.0 / scale_factor(32, 1);
                p->base2 = 1.0 / scale_factor(32, 3);
                break;
        }
    } else {
        p->half = dct3_plan_locked(N / 2, half_child(variant));
        p->quarter = dct3_plan_locked(N / 4, quarter_child(variant));

        const std::size_t N2 = N / 2;
        if (variant == Dct3Variant::unscaled) {
            p->omega.resize(N2);
            for (std::size_t k = 0; k < N2; ++k) {
                const double ang =
                    -2.0 * kPi * static_cast<double>(2 * k + 1) / static_cast<double>(4 * N);
                p->omega[k] = {std::cos(ang), std::sin(ang)};
            }
        } else {
            p->t.resize(N2);
            for (std::size_t k = 0; k < N2; ++k) p->t[k] = twiddle_t(4 * N, 2 * k + 1);
            const ScaleTable& s4 = scale_table(4 * N);
            switch (variant) {
                case Dct3Variant::unscaled_rs:
                    p->ratio1.resize(N2);
                    for (std::size_t k = 0; k < N2; ++k) p->ratio1[k] = s4.at(2 * k + 1);
                    break;
                case Dct3Variant::scaled2: {
                    const ScaleTable& s8 = scale_table(8 * N);
                    p->ratio1.resize(N2);
                    for (std::size_t k = 0; k < N2; ++k)
                        p->ratio1[k] = s4.at(2 * k + 1) / s8.at(2 * k + 1);
                    break;
                }
                case Dct3Variant::scaled4: {
                    const ScaleTable& s16 = scale_table(16 * N);
                    p->ratio1.resize(N2);
                    p->ratio2.resize(N2);
                    for (std::size_t k = 0; k < N2; ++k) {
                        p->ratio1[k] = s4.at(2 * k + 1) / s16.at(2 * k + 1);
                        p->ratio2[k] = s4.at(2 * k + 1) / s16.at(2 * N + 2 * k + 1);
                    }
                    break;
                }
                default:
                    break;  // scaled1: ratios structurally 1
            }
        }
    }

    g_dct3_plans.emplace(key, p);
    return p;
}

std::shared_ptr<const Dct4Plan> dct4_plan_locked(std::size_t N) {
    if (auto it = g_dct4_plans.find(N); it != g_dct4_plans.end()) return it->second;

    auto p = std::make_shared<Dct4Plan>();
    p->n = N;
    p->base0 = std::cos(kPi / 4);
    if (N >= 2) {
        p->half = dct3_plan_locked(N / 2, Dct3Variant::scaled1);
        p->fused.resize(N);
        p->t.resize(N);
        for (std::size_t k = 0; k < N; ++k) {
            p->fused[k] = fused_dct4_constant(N, k);
            p->t[k] = twiddle_t(8 * N, 2 * k + 1);
        }
    }

    g_dct4_plans.emplace(N, p);
    return p;
}

// Re(t*z) with t's unit component skipped: 1 mult + 1 add
template <class M>
inline double re_tmul(const TwiddleT& t, double zr, double zi, M& m) {
    if (t.unit_axis == TwiddleT::UnitAxis::real) return m.add(zr, m.mul(-t.im, zi));
    return m.add(m.mul(t.re, zr), zi);
}

template <class M>
void dct3_exec(const Dct3Plan& p, const double* x, double* out, M& m);

// input reversed, odd outputs negated (both free)
template <class M>
void dst3_exec(const Dct3Plan& p, const double* x, double* out, M& m) {
    const std::size_t N = p.n;
    std::vector<double> rev(N);
    for (std::size_t j = 0; j < N; ++j) rev[j] = x[N - 1 - j];
    dct3_exec(p, rev.data(), out, m);
    for (std::size_t k = 1; k < N; k += 2) out[k] = M::neg(out[k]);
}

template <class M>
void dct3_exec(const Dct3Plan& p, const double* x, double* out, M& m) {
    const std::size_t N = p.n;
    if (N == 1) {
        switch (p.variant) {
            case Dct3Variant::scaled2:
            case Dct3Variant::scaled4:
                out[0] = m.mul(x[0], p.base0);
                break;
            default:
                out[0] = x[0];
                break;
        }
        return;
    }
    if (N == 2) {
        switch (p.variant) {
            case Dct3Variant::unscaled:
            case Dct3Variant::unscaled_rs: {
                const double u = m.mul(x[1], p.base0);
                out[0] = m.add(x[0], u);
                out[1] = m.sub(x[0], u);
                return;
            }
            case Dct3Variant::scaled1: {
                const double u = m.mul(x[0], p.base0);
                out[0] = m.add(u, x[1]);
                out[1] = m.sub(u, x[1]);
                return;
            }
            case Dct3Variant::scaled2: {
                const double a = m.mul(x[0], p.base0);
                const double b = m.mul(x[1], p.base1);
                out[0] = m.add(a, b);
                out[1] = m.sub(a, b);
                return;
            }
            case Dct3Variant::scaled4: {
                const double u = m.mul(x[1], p.base0);
                out[0] = m.mul(m.add(x[0], u), p.base1);
                out[1] = m.mul(m.sub(x[0], u), p.base2);
                return;
            }
        }
        return;
    }

    const std::size_t N2 = N / 2, N4 = N / 4;

    std::vector<double> w(N4), v(N4), xe(N2);
    w[0] = x[1];
    v[N4 - 1] = x[N - 1];
    for (std::size_t k = 1; k < N4; ++k) {
        w[k] = m.add(x[4 * k + 1], x[4 * k - 1]);
        v[k - 1] = m.sub(x[4 * k - 1], x[4 * k + 1]);
    }
    for (std::size_t j = 0; j < N2; ++j) xe[j] = x[2 * j];

    std::vector<double> U(N2), W(N4), V(N4);
    dct3_exec(*p.half, xe.data(), U.data(), m);
    dct3_exec(*p.quarter, w.data(), W.data(), m);
    dst3_exec(*p.quarter, v.data(), V.data(), m);

    for (std::size_t k = 0; k < N2; ++k) {
        double zr, zi;
        if (k < N4) {
            zr = W[k];
            zi = V[k];
        } else {
            const std::size_t j = N2 - 1 - k;
            zr = W[j];
            zi = M::neg(V[j]);
        }

        double D;
        if (p.variant == Dct3Variant::unscaled) {
            const FusedConstant& c = p.omega[k];
            D = m.sub(m.mul(c.re, zr), m.mul(c.im, zi));
        } else {
            D = re_tmul(p.t[k], zr, zi, m);
            if (p.variant == Dct3Variant::unscaled_rs || p.variant == Dct3Variant::scaled2) {
                D = m.mul(D, p.ratio1[k]);
            } else if (p.variant == Dct3Variant::scaled4) {
                out[k] = m.mul(m.add(U[k], D), p.ratio1[k]);
                out[N - 1 - k] = m.mul(m.sub(U[k], D), p.ratio2[k]);
                continue;
            }
        }
        out[k] = m.add(U[k], D);
        out[N - 1 - k] = m.sub(U[k], D);
    }
}

enum class Dct4Form { plain, scaled, dst };

template <class M>
void dct4_exec(const Dct4Plan& p, Dct4Form form, const double* x, double* out, M& m) {
    const std::size_t N = p.n;
    if (N == 1) {
        out[0] = form == Dct4Form::scaled ? x[0] : m.mul(x[0], p.base0);
        return;
    }

    const std::size_t N2 = N / 2;
    std::vector<double> w(N2), v(N2);
    if (form == Dct4Form::dst) {
        // (-1)^n input signs folded into the sequence builders (free)
        w[0] = x[0];
        v[N2 - 1] = -x[N - 1];
        for (std::size_t k = 1; k < N2; ++k) {
            w[k] = m.sub(x[2 * k], x[2 * k - 1]);
            v[k - 1] = M::neg(m.add(x[2 * k - 1], x[2 * k]));
        }
    } else {
        w[0] = x[0];
        v[N2 - 1] = x[N - 1];
        for (std::size_t k = 1; k < N2; ++k) {
            w[k] = m.add(x[2 * k], x[2 * k - 1]);
            v[k - 1] = m.sub(x[2 * k - 1], x[2 * k]);
        }
    }

    std::vector<double> W(N2), V(N2);
    dct3_exec(*p.half, w.data(), W.data(), m);
    dst3_exec(*p.half, v.data(), V.data(), m);

    for (std::size_t k = 0; k < N; ++k) {
        double zr, zi;
        if (k < N2) {
            zr = W[k];
            zi = V[k];
        } else {
            const std::size_t j = N - 1 - k;
            zr = W[j];
            zi = M::neg(V[j]);
        }
        double c;
        if (form == Dct4Form::scaled) {
            c = re_tmul(p.t[k], zr, zi, m);
        } else {
            const FusedConstant& f = p.fused[k];
            c = m.sub(m.mul(f.re, zr), m.mul(f.im, zi));
        }
        out[form == Dct4Form::dst ? N - 1 - k : k] = c;
    }
}

template <class F>
RealVec with_mode(std::size_t n, ExecutionContext& ctx, F&& run) {
    RealVec out(n);
    if (ctx.audited()) {
        AuditedMode m{&ctx.counter()};
        run(out.data(), m);
    } else {
        NumericMode m;
        run(out.data(), m);
    }
    return out;
}

}  // namespace

int dct3_variant_code(Dct3Variant v) {
    const int k = variant_key(v);
    return k == 5 ? 0 : k;
}

Dct3Variant dct3_variant_from_code(int code) {
    switch (code) {
        case 0: return Dct3Variant::unscaled;
        case 1: return Dct3Variant::scaled1;
        case 2: return Dct3Variant::scaled2;
        case 4: return Dct3Variant::scaled4;
    }
    throw std::invalid_argument("dct3 variant code must be 0, 1, 2 or 4");
}

std::shared_ptr<const Dct3Plan> dct3_plan(std::size_t N, Dct3Variant variant) {
    if (!is_pow2(N)) throw std::invalid_argument("dct3_plan: N must be a power of two");
    std::lock_guard lock(g_plan_mutex);
    return dct3_plan_locked(N, variant);
}

RealVec dct3_scaled(const Dct3Plan& plan, const RealVec& x, ExecutionContext& ctx) {
    if (x.size() != plan.n) throw std::invalid_argument("dct3_scaled: input length != plan size");
    return with_mode(plan.n, ctx, [&](double* out, auto& m) { dct3_exec(plan, x.data(), out, m); });
}

RealVec dst3_scaled(const Dct3Plan& plan, const RealVec& x, ExecutionContext& ctx) {
    if (x.size() != plan.n) throw std::invalid_argument("dst3_scaled: input length != plan size");
    return with_mode(plan.n, ctx, [&](double* out, auto& m) { dst3_exec(plan, x.data(), out, m); });
}

std::shared_ptr<const Dct4Plan> dct4_plan(std::size_t N) {
    if (!is_pow2(N)) throw std::invalid_argument("dct4_plan: N must be a power of two");
    std::lock_guard lock(g_plan_mutex);
    return dct4_plan_locked(N);
}

RealVec dct4(const Dct4Plan& plan, const RealVec& x, ExecutionContext& ctx) {
    if (x.size() != plan.n) throw std::invalid_argument("dct4: input length != plan size");
    return with_mode(plan.n, ctx,
                     [&](double* out, auto& m) { dct4_exec(plan, Dct4Form::plain, x.data(), out, m); });
}

RealVec dct4(const RealVec& x, ExecutionContext& ctx) { return dct4(*dct4_plan(x.size()), x, ctx); }

RealVec dct4_scaled_output(const RealVec& x, ExecutionContext& ctx) {
    auto plan = dct4_plan(x.size());
    return with_mode(plan->n, ctx,
                     [&](double* out, auto& m) { dct4_exec(*plan, Dct4Form::scaled, x.data(), out, m); });
}

RealVec dst4(const RealVec& x, ExecutionContext& ctx) {
    auto plan = dct4_plan(x.size());
    return with_mode(plan->n, ctx,
                     [&](double* out, auto& m) { dct4_exec(*plan, Dct4Form::dst, x.data(), out, m); });
}

}  // namespace tt
