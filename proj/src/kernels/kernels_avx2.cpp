#include "lanes.hpp"

#if defined(RDMLAB_BUILD_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

// AVX2+FMA lane, 4 doubles per step. Remainders fall through to scalar
// tails. Translation unit is compiled with -mavx2 -mfma; callers must only
// reach it through the runtime dispatch.

namespace rdmlab::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, swapped));
}

}  // namespace

void accumulate_sq(double* acc, const double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    __m256d av = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(xv, xv, av));
  }
  for (; i < n; ++i) acc[i] += x[i] * x[i];
}

void accumulate_sq_diff(double* acc, const double* a, const double* b,
                        std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    __m256d av = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(d, d, av));
  }
  for (; i < n; ++i) {
    double d = a[i] - b[i];
    acc[i] += d * d;
  }
}

void accumulate_sq_shift(double* acc, const double* x, double shift,
                         double scale, std::size_t n) {
  __m256d sh = _mm256_set1_pd(shift);
  __m256d sc = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), sh);
    __m256d av = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(_mm256_mul_pd(sc, d), d, av));
  }
  for (; i < n; ++i) {
    double d = x[i] - shift;
    acc[i] += scale * d * d;
  }
}

void tau_accum(double* acc, const double* rsq, double coeff, std::size_t n) {
  __m256d c = _mm256_set1_pd(coeff);
  __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r2 = _mm256_loadu_pd(rsq + i);
    __m256d r = _mm256_sqrt_pd(r2);
    __m256d hyp = _mm256_sqrt_pd(_mm256_add_pd(one, r2));
    __m256d av = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(c, _mm256_sub_pd(r, hyp), av));
  }
  for (; i < n; ++i) {
    acc[i] += coeff * (std::sqrt(rsq[i]) - std::sqrt(1.0 + rsq[i]));
  }
}

void sqrt1p_accum(double* acc, const double* rsq, double coeff,
                  std::size_t n) {
  __m256d c = _mm256_set1_pd(coeff);
  __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d hyp = _mm256_sqrt_pd(_mm256_add_pd(one, _mm256_loadu_pd(rsq + i)));
    __m256d av = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(c, hyp, av));
  }
  for (; i < n; ++i) acc[i] += coeff * std::sqrt(1.0 + rsq[i]);
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void multiply(double* y, const double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yv = _mm256_mul_pd(_mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, yv);
  }
  for (; i < n; ++i) y[i] *= x[i];
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d s = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), s);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return hsum(s) + tail;
}

double weighted_sumsq(const double* v, const double* w, std::size_t n) {
  __m256d s = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vv = _mm256_loadu_pd(v + i);
    s = _mm256_fmadd_pd(_mm256_mul_pd(_mm256_loadu_pd(w + i), vv), vv, s);
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += w[i] * v[i] * v[i];
  return hsum(s) + tail;
}

double max_abs(const double* v, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    m = _mm256_max_pd(m, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(v + i)));
  }
  double tail = hmax(m);
  for (; i < n; ++i) {
    double a = std::fabs(v[i]);
    if (a > tail) tail = a;
  }
  return tail;
}

}  // namespace rdmlab::kernels::avx2

#endif  // RDMLAB_BUILD_AVX2
