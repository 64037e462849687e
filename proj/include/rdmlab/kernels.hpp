#pragma once

#include <cstddef>

// Data-parallel inner loops shared by the model evaluator, the finite
// difference machinery and the quadrature reductions. Every operation has a
// scalar reference implementation and (on x86-64 with AVX2+FMA) a vectorized
// variant; the active lane is picked once at startup from CPUID and can be
// overridden with RDMLAB_SIMD=scalar|avx2 for testing.
//
// The two lanes are equivalence-tested against each other; they agree to
// rounding (reductions may differ in summation order).

namespace rdmlab::kernels {

enum class Lane { Scalar, Avx2 };

Lane active_lane();
const char* lane_name();
bool avx2_supported();

// Test hook. Throws PreconditionViolated if the lane is not available.
void force_lane(Lane lane);

// acc[i] += x[i]^2
void accumulate_sq(double* acc, const double* x, std::size_t n);

// acc[i] += (a[i] - b[i])^2
void accumulate_sq_diff(double* acc, const double* a, const double* b,
                        std::size_t n);

// acc[i] += scale * (x[i] - shift)^2
void accumulate_sq_shift(double* acc, const double* x, double shift,
                         double scale, std::size_t n);

// acc[i] += coeff * (sqrt(rsq[i]) - sqrt(1 + rsq[i]))
// rsq holds squared radii; the bracket is the cusp profile tau(|x|).
void tau_accum(double* acc, const double* rsq, double coeff, std::size_t n);

// acc[i] += coeff * sqrt(1 + rsq[i])
void sqrt1p_accum(double* acc, const double* rsq, double coeff, std::size_t n);

// y[i] += a * x[i]
void axpy(double* y, double a, const double* x, std::size_t n);

// y[i] *= x[i]
void multiply(double* y, const double* x, std::size_t n);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i w[i] * v[i]^2
double weighted_sumsq(const double* v, const double* w, std::size_t n);

// max_i |v[i]|; 0 for n = 0
double max_abs(const double* v, std::size_t n);

}  // namespace rdmlab::kernels
