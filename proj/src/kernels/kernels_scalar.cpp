#include <cmath>
#include <cstddef>

#include "lanes.hpp"

// Reference lane. Plain loops, kept branch-free in the body so the compiler
// may auto-vectorize them, but correctness is defined by this file.

namespace rdmlab::kernels::scalar {

void accumulate_sq(double* acc, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i] * x[i];
}

void accumulate_sq_diff(double* acc, const double* a, const double* b,
                        std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double d = a[i] - b[i];
    acc[i] += d * d;
  }
}

void accumulate_sq_shift(double* acc, const double* x, double shift,
                         double scale, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double d = x[i] - shift;
    acc[i] += scale * d * d;
  }
}

void tau_accum(double* acc, const double* rsq, double coeff, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] += coeff * (std::sqrt(rsq[i]) - std::sqrt(1.0 + rsq[i]));
  }
}

void sqrt1p_accum(double* acc, const double* rsq, double coeff,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] += coeff * std::sqrt(1.0 + rsq[i]);
  }
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void multiply(double* y, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= x[i];
}

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double weighted_sumsq(const double* v, const double* w, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * v[i] * v[i];
  return s;
}

double max_abs(const double* v, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double a = std::fabs(v[i]);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace rdmlab::kernels::scalar
