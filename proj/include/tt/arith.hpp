#pragma once

#include <cstdint>
#include <stdexcept>

namespace tt {

// Tally of executed real additions (incl. subtractions) and multiplications.
struct OpCounter {
    std::uint64_t adds = 0;
    std::uint64_t mults = 0;
    std::uint64_t flops() const { return adds + mults; }
};

// A transform call runs either in numeric mode (plain double arithmetic) or in
// audited mode, where every executed add/sub and multiply also bumps the
// context's counter. Negation is free in both modes. One context owns one
// counter; contexts are single-owner and must not be shared across threads.
class ExecutionContext {
public:
    enum class Mode { numeric, audited };

    ExecutionContext() = default;
    explicit ExecutionContext(Mode m) : mode_(m) {}

    Mode mode() const { return mode_; }
    bool audited() const { return mode_ == Mode::audited; }

    OpCounter& counter() { return counter_; }
    const OpCounter& counter() const { return counter_; }

private:
    Mode mode_ = Mode::numeric;
    OpCounter counter_{};
};

// Counting policies. Kernels are templated on one of these so both modes run
// the identical expression tree (results are bit-identical); the audited
// instantiation only adds counter increments.
struct NumericMode {
    static constexpr bool audited = false;
    double add(double a, double b) const { return a + b; }
    double sub(double a, double b) const { return a - b; }
    double mul(double a, double b) const { return a * b; }
    static double neg(double a) { return -a; }
};

struct AuditedMode {
    static constexpr bool audited = true;
    OpCounter* c;
    double add(double a, double b) const { ++c->adds; return a + b; }
    double sub(double a, double b) const { ++c->adds; return a - b; }
    double mul(double a, double b) const { ++c->mults; return a * b; }
    static double neg(double a) { return -a; }
};

// Context-dispatched scalar ops. Subtraction is scalar_add with the sign
// folded by the caller; it costs one addition all the same.
inline double scalar_add(double a, double b, ExecutionContext& ctx) {
    if (ctx.audited()) ++ctx.counter().adds;
    return a + b;
}

inline double scalar_mul(double a, double c, ExecutionContext& ctx) {
    if (ctx.audited()) ++ctx.counter().mults;
    return a * c;
}

inline double scalar_negate(double a, ExecutionContext&) { return -a; }

inline OpCounter counter_snapshot(const ExecutionContext& ctx) {
    if (!ctx.audited())
        throw std::logic_error("counter_snapshot: numeric-mode context has no counter");
    return ctx.counter();
}

}  // namespace tt
