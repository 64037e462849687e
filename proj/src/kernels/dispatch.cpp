#include "rdmlab/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "lanes.hpp"
#include "rdmlab/common.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <cpuid.h>
#define RDMLAB_X86 1
#else
#define RDMLAB_X86 0
#endif

namespace rdmlab::kernels {

namespace {

struct LaneTable {
  void (*accumulate_sq)(double*, const double*, std::size_t);
  void (*accumulate_sq_diff)(double*, const double*, const double*,
                             std::size_t);
  void (*accumulate_sq_shift)(double*, const double*, double, double,
                              std::size_t);
  void (*tau_accum)(double*, const double*, double, std::size_t);
  void (*sqrt1p_accum)(double*, const double*, double, std::size_t);
  void (*axpy)(double*, double, const double*, std::size_t);
  void (*multiply)(double*, const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*weighted_sumsq)(const double*, const double*, std::size_t);
  double (*max_abs)(const double*, std::size_t);
};

constexpr LaneTable kScalarTable = {
    scalar::accumulate_sq,    scalar::accumulate_sq_diff,
    scalar::accumulate_sq_shift, scalar::tau_accum,
    scalar::sqrt1p_accum,     scalar::axpy,
    scalar::multiply,         scalar::dot,
    scalar::weighted_sumsq,   scalar::max_abs,
};

#if defined(RDMLAB_BUILD_AVX2)
constexpr LaneTable kAvx2Table = {
    avx2::accumulate_sq,    avx2::accumulate_sq_diff,
    avx2::accumulate_sq_shift, avx2::tau_accum,
    avx2::sqrt1p_accum,     avx2::axpy,
    avx2::multiply,         avx2::dot,
    avx2::weighted_sumsq,   avx2::max_abs,
};
#endif

bool cpu_has_avx2_fma() {
#if RDMLAB_X86
  unsigned eax, ebx, ecx, edx;
  if (!__get_cpuid(1, &eax, &ebx, &ecx, &edx)) return false;
  bool fma = (ecx & (1u << 12)) != 0;
  bool osxsave = (ecx & (1u << 27)) != 0;
  if (!fma || !osxsave) return false;
  if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
  bool avx2 = (ebx & (1u << 5)) != 0;
  if (!avx2) return false;
  // YMM state must be enabled by the OS.
  unsigned long long xcr0 = _xgetbv(0);
  return (xcr0 & 0x6) == 0x6;
#else
  return false;
#endif
}

struct Dispatch {
  Lane lane;
  const LaneTable* table;

  Dispatch() {
    lane = Lane::Scalar;
    table = &kScalarTable;
#if defined(RDMLAB_BUILD_AVX2)
    if (cpu_has_avx2_fma()) {
      lane = Lane::Avx2;
      table = &kAvx2Table;
    }
#endif
    if (const char* env = std::getenv("RDMLAB_SIMD")) {
      if (std::strcmp(env, "scalar") == 0) {
        lane = Lane::Scalar;
        table = &kScalarTable;
      }
      // "avx2" keeps the CPUID decision; requesting it on an unsupported
      // CPU is ignored rather than crashing later.
    }
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

Lane active_lane() { return dispatch().lane; }

const char* lane_name() {
  return dispatch().lane == Lane::Avx2 ? "avx2" : "scalar";
}

bool avx2_supported() {
#if defined(RDMLAB_BUILD_AVX2)
  return cpu_has_avx2_fma();
#else
  return false;
#endif
}

void force_lane(Lane lane) {
  if (lane == Lane::Scalar) {
    dispatch().lane = Lane::Scalar;
    dispatch().table = &kScalarTable;
    return;
  }
#if defined(RDMLAB_BUILD_AVX2)
  if (lane == Lane::Avx2 && cpu_has_avx2_fma()) {
    dispatch().lane = Lane::Avx2;
    dispatch().table = &kAvx2Table;
    return;
  }
#endif
  throw PreconditionViolated("requested SIMD lane is not available");
}

void accumulate_sq(double* acc, const double* x, std::size_t n) {
  dispatch().table->accumulate_sq(acc, x, n);
}

void accumulate_sq_diff(double* acc, const double* a, const double* b,
                        std::size_t n) {
  dispatch().table->accumulate_sq_diff(acc, a, b, n);
}

void accumulate_sq_shift(double* acc, const double* x, double shift,
                         double scale, std::size_t n) {
  dispatch().table->accumulate_sq_shift(acc, x, shift, scale, n);
}

void tau_accum(double* acc, const double* rsq, double coeff, std::size_t n) {
  dispatch().table->tau_accum(acc, rsq, coeff, n);
}

void sqrt1p_accum(double* acc, const double* rsq, double coeff,
                  std::size_t n) {
  dispatch().table->sqrt1p_accum(acc, rsq, coeff, n);
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  dispatch().table->axpy(y, a, x, n);
}

void multiply(double* y, const double* x, std::size_t n) {
  dispatch().table->multiply(y, x, n);
}

double dot(const double* a, const double* b, std::size_t n) {
  return dispatch().table->dot(a, b, n);
}

double weighted_sumsq(const double* v, const double* w, std::size_t n) {
  return dispatch().table->weighted_sumsq(v, w, n);
}

double max_abs(const double* v, std::size_t n) {
  return dispatch().table->max_abs(v, n);
}

}  // namespace rdmlab::kernels
