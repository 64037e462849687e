#include "rdmlab/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rdmlab::model {

namespace {

double block_norm(std::span<const double> x, int d, int j) {
  double s = 0.0;
  for (int c = 0; c < d; ++c) {
    double v = x[static_cast<std::size_t>(j) * d + c];
    s += v * v;
  }
  return std::sqrt(s);
}

double block_dist(std::span<const double> x, int d, int j, int k) {
  double s = 0.0;
  for (int c = 0; c < d; ++c) {
    double v = x[static_cast<std::size_t>(j) * d + c] -
               x[static_cast<std::size_t>(k) * d + c];
    s += v * v;
  }
  return std::sqrt(s);
}

double tau_of_radius(double r) { return r - std::sqrt(1.0 + r * r); }

double block_dot(std::span<const double> x, int d, int j, int k) {
  double s = 0.0;
  for (int c = 0; c < d; ++c) {
    s += x[static_cast<std::size_t>(j) * d + c] *
         x[static_cast<std::size_t>(k) * d + c];
  }
  return s;
}

}  // namespace

void ParticleConfig::validate() const {
  if (N < 2) throw ConfigError("particles.N: must be >= 2");
  if (d < 1 || d > 3) throw ConfigError("particles.d: must be 1, 2 or 3");
  if (K < 1 || K > N - 1)
    throw ConfigError("particles.K: must satisfy 1 <= K <= N-1");
  if (!(Z > 0.0)) throw ConfigError("particles.Z: must be > 0");
  if (!(kappa >= 0.0)) throw ConfigError("particles.kappa: must be >= 0");
}

double tau(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s) - std::sqrt(1.0 + s);
}

double one_norm(std::span<const double> x, int d) {
  const int n = static_cast<int>(x.size()) / d;
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += block_norm(x, d, j);
  return s;
}

double jastrow_exponent(std::span<const double> x, const ParticleConfig& cfg) {
  double nuclear = 0.0;
  for (int j = 0; j < cfg.N; ++j) nuclear += tau_of_radius(block_norm(x, cfg.d, j));
  double pair = 0.0;
  for (int j = 0; j < cfg.N; ++j)
    for (int k = j + 1; k < cfg.N; ++k)
      pair += tau_of_radius(block_dist(x, cfg.d, j, k));
  return -0.5 * cfg.Z * nuclear + 0.25 * pair;
}

double coulomb_potential(std::span<const double> x,
                         const ParticleConfig& cfg) {
  double v = 0.0;
  for (int j = 0; j < cfg.N; ++j) {
    double r = block_norm(x, cfg.d, j);
    if (r == 0.0)
      throw SingularConfiguration("particle " + std::to_string(j) +
                                  " at the nucleus");
    v -= cfg.Z / r;
  }
  for (int j = 0; j < cfg.N; ++j) {
    for (int k = j + 1; k < cfg.N; ++k) {
      double r = block_dist(x, cfg.d, j, k);
      if (r == 0.0)
        throw SingularConfiguration("particles " + std::to_string(j) + " and " +
                                    std::to_string(k) + " coalesce");
      v += 1.0 / r;
    }
  }
  return v;
}

double isolation_distance(int j, std::span<const double> x,
                          const ParticleConfig& cfg) {
  if (j < 0 || j >= cfg.N)
    throw PreconditionViolated("isolation_distance: particle index out of range");
  double m = 1.0;
  m = std::min(m, block_norm(x, cfg.d, j));
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  for (int k = 0; k < cfg.N; ++k) {
    if (k == j) continue;
    m = std::min(m, inv_sqrt2 * block_dist(x, cfg.d, j, k));
  }
  return m;
}

double coalescence_distance(int K, std::span<const double> x_check, int d) {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < K; ++j) m = std::min(m, block_norm(x_check, d, j));
  for (int j = 0; j < K; ++j)
    for (int k = j + 1; k < K; ++k)
      m = std::min(m, block_dist(x_check, d, j, k));
  return m;
}

double CutoffSpec::operator()(double t) const {
  if (t <= inner) return 1.0;
  if (t >= outer) return 0.0;
  double u = (t - inner) / (outer - inner);
  // descending quintic smoothstep, C^2 at both knots
  return 1.0 - u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

WavefunctionModel::WavefunctionModel(ParticleConfig cfg, CoreSpec core,
                                     JastrowFlags jastrow,
                                     std::optional<double> energy)
    : config_(cfg), core_(std::move(core)), jastrow_(jastrow), energy_(energy) {
  config_.validate();
  const std::size_t dim = static_cast<std::size_t>(config_.dim());
  for (std::size_t b = 0; b < core_.bumps.size(); ++b) {
    const auto& bump = core_.bumps[b];
    if (bump.center.size() != dim || bump.width.size() != dim)
      throw ConfigError("model.core.bumps[" + std::to_string(b) +
                        "]: center/width length must equal d*N");
    for (double w : bump.width)
      if (!(w > 0.0))
        throw ConfigError("model.core.bumps[" + std::to_string(b) +
                          "].width: entries must be > 0");
  }
  if (core_.bumps.empty())
    throw ConfigError("model.core: at least one bump required");
}

WavefunctionModel WavefunctionModel::standard(ParticleConfig cfg,
                                              JastrowFlags jastrow) {
  GaussianBump bump;
  bump.amplitude = 1.0;
  bump.center.assign(static_cast<std::size_t>(cfg.dim()), 0.0);
  bump.width.assign(static_cast<std::size_t>(cfg.dim()), 1.0);
  return WavefunctionModel(cfg, CoreSpec{{bump}}, jastrow);
}

double WavefunctionModel::mu(std::span<const double> x) const {
  double acc = 0.0;
  for (const auto& bump : core_.bumps) {
    double e = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) {
      double z = (x[c] - bump.center[c]) / bump.width[c];
      e += 0.5 * z * z;
    }
    acc += bump.amplitude * std::exp(-e);
  }
  return acc;
}

double WavefunctionModel::phi(std::span<const double> x) const {
  double decay = 0.0;
  for (int j = 0; j < config_.N; ++j) {
    double r = block_norm(x, config_.d, j);
    decay += std::sqrt(1.0 + r * r);
  }
  return mu(x) * std::exp(-config_.kappa * decay);
}

double WavefunctionModel::cusp_exponent(std::span<const double> x) const {
  double f = 0.0;
  if (jastrow_.nuclear) {
    double nuclear = 0.0;
    for (int j = 0; j < config_.N; ++j)
      nuclear += tau_of_radius(block_norm(x, config_.d, j));
    f -= 0.5 * config_.Z * nuclear;
  }
  if (jastrow_.electron_electron) {
    double pair = 0.0;
    for (int j = 0; j < config_.N; ++j)
      for (int k = j + 1; k < config_.N; ++k)
        pair += tau_of_radius(block_dist(x, config_.d, j, k));
    f += 0.25 * pair;
  }
  return f;
}

double WavefunctionModel::psi(std::span<const double> x) const {
  return std::exp(cusp_exponent(x)) * phi(x);
}

Factors WavefunctionModel::evaluate_factors(std::span<const double> x_check,
                                            std::span<const double> x_hat) const {
  const int d = config_.d;
  const int K = config_.K;
  const int N = config_.N;
  if (static_cast<int>(x_check.size()) != d * K ||
      static_cast<int>(x_hat.size()) != d * (N - K))
    throw PreconditionViolated("evaluate_factors: block sizes do not match K");

  std::vector<double> x(x_check.begin(), x_check.end());
  x.insert(x.end(), x_hat.begin(), x_hat.end());
  std::span<const double> xs(x);

  auto head_exponent = [&](int lo, int hi) {
    double e = 0.0;
    if (jastrow_.nuclear) {
      double nuclear = 0.0;
      for (int j = lo; j < hi; ++j) nuclear += tau_of_radius(block_norm(xs, d, j));
      e -= 0.5 * config_.Z * nuclear;
    }
    if (jastrow_.electron_electron) {
      double pair = 0.0;
      for (int j = lo; j < hi; ++j)
        for (int k = j + 1; k < hi; ++k)
          pair += tau_of_radius(block_dist(xs, d, j, k));
      e += 0.25 * pair;
    }
    double decay = 0.0;
    for (int j = lo; j < hi; ++j) {
      double r = block_norm(xs, d, j);
      decay += std::sqrt(1.0 + r * r);
    }
    return e - config_.kappa * decay;
  };

  Factors f;
  f.A = std::exp(head_exponent(0, K));
  f.B = std::exp(head_exponent(K, N));
  double cross = 0.0;
  if (jastrow_.electron_electron) {
    for (int l = 0; l < K; ++l)
      for (int m = K; m < N; ++m) cross += tau_of_radius(block_dist(xs, d, l, m));
  }
  f.C = std::exp(0.25 * cross);
  f.mu = mu(xs);
  f.psi = f.A * f.B * f.C * f.mu;
  return f;
}

CutoffFactors cutoff_jastrow_terms(std::span<const double> x,
                                   const ParticleConfig& cfg,
                                   const CutoffSpec& cutoff) {
  CutoffFactors out{0.0, 0.0};
  double nuclear = 0.0;
  for (int j = 0; j < cfg.N; ++j) {
    double r = block_norm(x, cfg.d, j);
    nuclear += cutoff(r) * r;
  }
  double pair = 0.0;
  for (int j = 0; j < cfg.N; ++j) {
    for (int k = j + 1; k < cfg.N; ++k) {
      double r = block_dist(x, cfg.d, j, k);
      pair += cutoff(r) * r;
    }
  }
  out.G = -0.5 * cfg.Z * nuclear + 0.25 * pair;

  double h = 0.0;
  for (int j = 0; j < cfg.N; ++j) {
    double rj = block_norm(x, cfg.d, j);
    for (int k = j + 1; k < cfg.N; ++k) {
      double rk = block_norm(x, cfg.d, k);
      double dot = block_dot(x, cfg.d, j, k);
      double ssq = rj * rj + rk * rk;
      if (dot == 0.0 || ssq == 0.0) continue;  // 0 * log 0 convention
      h += cutoff(rj) * cutoff(rk) * dot * std::log(ssq);
    }
  }
  out.H = kDotLogConstant * cfg.Z * h;
  return out;
}

int EnvelopeSpec::total_order() const {
  int s = 0;
  for (int m : order) s += m;
  return s;
}

double EnvelopeSpec::exponent() const {
  double e = alpha - total_order();
  return e < 0.0 ? e : 0.0;
}

double envelope_value(const EnvelopeSpec& spec, int j,
                      std::span<const double> x, const ParticleConfig& cfg) {
  const double e = spec.exponent();
  double s = 1.0;
  s += std::pow(block_norm(x, cfg.d, j), e);
  for (int k = 0; k < cfg.N; ++k) {
    if (k == j) continue;
    s += std::pow(block_dist(x, cfg.d, j, k), e);
  }
  return spec.constant * s;
}

namespace {

// Central-difference coefficients (offset, coeff/h^m) for d^m/dt^m, m <= 4,
// O(h^2) accurate.
struct Stencil {
  std::vector<std::pair<int, double>> taps;
};

Stencil central_stencil(int m) {
  switch (m) {
    case 0:
      return {{{0, 1.0}}};
    case 1:
      return {{{-1, -0.5}, {1, 0.5}}};
    case 2:
      return {{{-1, 1.0}, {0, -2.0}, {1, 1.0}}};
    case 3:
      return {{{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}}};
    case 4:
      return {{{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}}};
    default:
      throw PreconditionViolated("envelope_check: |m| per axis must be <= 4");
  }
}

// Mixed partial of mu with respect to the coordinates of particle j,
// tensor-product central stencil at step h.
double mixed_partial(const WavefunctionModel& m, std::span<const int> order,
                     int j, std::span<const double> x0, double h) {
  const int d = m.config().d;
  std::vector<Stencil> stencils;
  stencils.reserve(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) stencils.push_back(central_stencil(order[c]));

  std::vector<double> pt(x0.begin(), x0.end());
  double total_scale = 1.0;
  for (int c = 0; c < d; ++c)
    for (int k = 0; k < order[c]; ++k) total_scale /= h;

  // Iterate the tensor product of taps.
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  double acc = 0.0;
  while (true) {
    double coeff = 1.0;
    for (int c = 0; c < d; ++c) {
      const auto& tap = stencils[c].taps[idx[c]];
      coeff *= tap.second;
      pt[static_cast<std::size_t>(j) * d + c] =
          x0[static_cast<std::size_t>(j) * d + c] + tap.first * h;
    }
    acc += coeff * m.mu(pt);
    int c = 0;
    for (; c < d; ++c) {
      if (++idx[c] < stencils[c].taps.size()) break;
      idx[c] = 0;
    }
    if (c == d) break;
  }
  return acc * total_scale;
}

double richardson(double coarse, double fine) {
  // O(h^2) stencils: one extrapolation step removes the leading term.
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

EnvelopeReport envelope_check(const WavefunctionModel& m,
                              std::span<const int> order, int j,
                              const std::vector<std::vector<double>>& samples,
                              double step) {
  const auto& cfg = m.config();
  if (static_cast<int>(order.size()) != cfg.d)
    throw PreconditionViolated("envelope_check: order must have d entries");
  int total = 0;
  for (int c : order) total += c;
  if (total > 4)
    throw PreconditionViolated("envelope_check: |m| must be <= 4");

  EnvelopeSpec spec;
  spec.order.assign(order.begin(), order.end());
  spec.alpha = 2.0;
  spec.constant = 1.0;

  EnvelopeReport report{0.0, 0.0, 0, false};
  for (const auto& sample : samples) {
    double clearance = std::numeric_limits<double>::infinity();
    for (int p = 0; p < cfg.N; ++p)
      clearance = std::min(clearance, block_norm(sample, cfg.d, p));
    for (int p = 0; p < cfg.N; ++p)
      for (int q = p + 1; q < cfg.N; ++q)
        clearance = std::min(clearance, block_dist(sample, cfg.d, p, q));
    if (clearance < 10.0 * step)
      throw PreconditionViolated(
          "envelope_check: sample within 10*step of the singular set");

    double d_h = mixed_partial(m, order, j, sample, step);
    double d_h2 = mixed_partial(m, order, j, sample, step / 2.0);
    double d_h4 = mixed_partial(m, order, j, sample, step / 4.0);
    double r1 = richardson(d_h, d_h2);
    double r2 = richardson(d_h2, d_h4);
    double scale = std::max({std::fabs(r1), std::fabs(r2), 1e-300});
    if (std::fabs(r1 - r2) > 0.10 * scale)
      throw StepTooCoarse("envelope_check: Richardson estimates disagree by >10%");

    if (!std::isfinite(r2)) {
      report.violation = true;
      continue;
    }
    double env = envelope_value(spec, j, sample, cfg);
    report.max_derivative = std::max(report.max_derivative, std::fabs(r2));
    report.fitted_constant = std::max(report.fitted_constant, std::fabs(r2) / env);
    ++report.samples_used;
  }
  return report;
}

}  // namespace rdmlab::model
