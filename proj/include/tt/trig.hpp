#pragma once

#include <memory>
#include <vector>

#include "tt/arith.hpp"
#include "tt/constants.hpp"
#include "tt/types.hpp"

namespace tt {

// Output-scaling variants of the DCT-III/DST-III. Variant v in {1,2,4}
// divides output k by s(4vN, 2k+1); `unscaled` (v = 0) is the plain
// transform. `unscaled_rs` also computes the plain transform but routes its
// quarter-size children through the scaled variant and rescales in the
// combine loop; it spends slightly fewer multiplies than `unscaled` and
// exists so the variant-savings recurrences can be measured end to end.
enum class Dct3Variant { unscaled, scaled1, scaled2, scaled4, unscaled_rs };

int dct3_variant_code(Dct3Variant v);              // 0, 1, 2, 4 (unscaled_rs -> 0)
Dct3Variant dct3_variant_from_code(int code);      // 0, 1, 2, 4

struct Dct3Plan {
    std::size_t n = 0;
    Dct3Variant variant = Dct3Variant::unscaled;

    std::shared_ptr<const Dct3Plan> half;     // even-index child, size N/2
    std::shared_ptr<const Dct3Plan> quarter;  // w/v child, size N/4

    // Combine constants for k in [0, N/2), all at odd index j = 2k+1:
    // unscaled uses the plain twiddle w_{4N}^j; the others use t(4N, j)
    // plus the variant's ratio constants.
    std::vector<FusedConstant> omega;       // unscaled only
    std::vector<TwiddleT> t;                // all scaled variants
    std::vector<double> ratio1, ratio2;     // see dct3_scaled for placement

    double base0 = 0.0, base1 = 0.0, base2 = 0.0;  // N <= 2 folded constants
};

std::shared_ptr<const Dct3Plan> dct3_plan(std::size_t N, Dct3Variant variant);

// C_k = (1/s(4vN, 2k+1)) * sum_n x_n cos[(pi/N) n (k+1/2)]
RealVec dct3_scaled(const Dct3Plan& plan, const RealVec& x, ExecutionContext& ctx);

// S_k = (1/s(4vN, 2k+1)) * sum_{n=1}^{N} x_n sin[(pi/N) n (k+1/2)], where
// element j of x holds x_{j+1}. Reverses the input, runs the same plan, and
// negates odd outputs (free); its count always equals dct3_scaled's.
RealVec dst3_scaled(const Dct3Plan& plan, const RealVec& x, ExecutionContext& ctx);

struct Dct4Plan {
    std::size_t n = 0;
    std::shared_ptr<const Dct3Plan> half;  // size N/2, variant scaled1
    std::vector<FusedConstant> fused;      // w_{8N}^{2k+1} s(2N,2k+1), k in [0,N)
    std::vector<TwiddleT> t;               // t(8N, 2k+1) for the scaled output
    double base0 = 0.0;                    // N = 1 constant
};

std::shared_ptr<const Dct4Plan> dct4_plan(std::size_t N);

// C_k = sum_n x_n cos[(pi/N) (n+1/2) (k+1/2)]
RealVec dct4(const Dct4Plan& plan, const RealVec& x, ExecutionContext& ctx);
RealVec dct4(const RealVec& x, ExecutionContext& ctx);

// DCT-IV output divided elementwise by s(8N, 2k+1); costs exactly N fewer
// multiplications than dct4 (the output constants have a unit component).
RealVec dct4_scaled_output(const RealVec& x, ExecutionContext& ctx);

// S_k = sum_n x_n sin[(pi/N) (n+1/2) (k+1/2)]: the DCT-IV of (-1)^n x_n with
// reversed outputs (signs folded into the first additions, reversal free);
// count equals dct4's.
RealVec dst4(const RealVec& x, ExecutionContext& ctx);

}  // namespace tt
