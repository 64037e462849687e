#pragma once

#include <cstddef>

// Internal per-lane entry points. The public dispatch in kernels.hpp is the
// only supported interface; this header exists so dispatch.cpp can wire the
// lane tables together.

#define RDMLAB_KERNEL_LIST(ns)                                               \
  namespace ns {                                                             \
  void accumulate_sq(double* acc, const double* x, std::size_t n);           \
  void accumulate_sq_diff(double* acc, const double* a, const double* b,     \
                          std::size_t n);                                    \
  void accumulate_sq_shift(double* acc, const double* x, double shift,       \
                           double scale, std::size_t n);                     \
  void tau_accum(double* acc, const double* rsq, double coeff,               \
                 std::size_t n);                                             \
  void sqrt1p_accum(double* acc, const double* rsq, double coeff,            \
                    std::size_t n);                                          \
  void axpy(double* y, double a, const double* x, std::size_t n);            \
  void multiply(double* y, const double* x, std::size_t n);                  \
  double dot(const double* a, const double* b, std::size_t n);               \
  double weighted_sumsq(const double* v, const double* w, std::size_t n);    \
  double max_abs(const double* v, std::size_t n);                            \
  }

namespace rdmlab::kernels {

RDMLAB_KERNEL_LIST(scalar)

#if defined(RDMLAB_BUILD_AVX2)
RDMLAB_KERNEL_LIST(avx2)
#endif

}  // namespace rdmlab::kernels

#undef RDMLAB_KERNEL_LIST
