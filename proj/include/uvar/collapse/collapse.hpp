// Copyright 2026 The uvar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Smooth collapse experiments: coefficient-blind linear schemes against a
// nonlinear gambler's-ruin scheme on branch weights.

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uvar::collapse {

using Amplitude = std::complex<double>;

enum class Scheme { linear_drift, linear_noise, nonlinear_ruin };

std::string to_string(Scheme s);
/// Throws BadParams on unknown names.
Scheme parse_scheme(std::string_view name);
bool is_linear(Scheme s);

inline constexpr double kCollapseThreshold = 1.0 - 1e-6;
inline constexpr double kNormTol = 1e-12;

struct CollapseConfig {
  std::vector<Amplitude> a;
  int runs = 1000;
  double dt = 1e-2;
  /// Horizon T = steps * dt.
  int steps = 10'000;
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::nonlinear_ruin;
  /// Keep full per-step arrays in each RunTrace; the trace hash is always
  /// computed.
  bool record_traces = false;

  /// Throws BadParams.
  void validate() const;
};

/// Seed of run m: splitmix64(master + m * 0x9E3779B97F4A7C15).
std::uint64_t run_seed(std::uint64_t master, std::uint64_t m);
std::uint64_t splitmix64(std::uint64_t x);

struct RunTrace {
  /// ln|beta(k, t)|, row-major (step, k), linear schemes only.
  std::vector<double> log_abs_beta;
  /// X(k, t), row-major (step, k). Row 0 is t = 0.
  std::vector<double> x;
  /// Outcome index absorbed at 1, or -1 if the horizon was reached first.
  int winner = -1;
  int steps_taken = 0;
  /// FNV-1a over the bit patterns of every X row, recorded or not.
  std::uint64_t trace_hash = 0;
};

struct MartingaleStat {
  /// Mean per-step increment of each weight and its standard error.
  std::vector<double> mean;
  std::vector<double> std_error;
  std::uint64_t samples = 0;
  /// Largest |sum_k w_k - 1| seen.
  double max_norm_error = 0;
  bool pass = false;
};

struct CollapseResult {
  std::vector<RunTrace> traces;
  std::vector<std::uint64_t> winner_counts;
  std::uint64_t nonconverged = 0;
  /// FNV-1a over the run hashes in run order.
  std::uint64_t ensemble_hash = 0;
  /// nonlinear_ruin only.
  MartingaleStat martingale;
};

/// Coefficient-blind per-run process on ln|beta|. Implementations receive
/// the outcome count and the run's generator, never the amplitudes.
class LinearProcess {
 public:
  virtual ~LinearProcess() = default;
  virtual void start(std::mt19937_64& rng, std::span<double> log_abs_beta) = 0;
  virtual void step(std::mt19937_64& rng, double dt, std::span<double> log_abs_beta) = 0;
};

/// beta(k, t) = exp(r_k t), rates r_k uniform in [-1, 1] per run.
std::unique_ptr<LinearProcess> make_linear_drift();
/// d beta = beta dW_k: ln|beta| moves by sqrt(dt) xi - dt / 2.
std::unique_ptr<LinearProcess> make_linear_noise();

/// Runs cfg.runs independent runs. NonConvergedRun is not thrown; such runs
/// have winner -1 and are counted in `nonconverged`.
CollapseResult run_scheme(const CollapseConfig& cfg);
/// Same, with a caller-supplied linear process in place of cfg.scheme.
CollapseResult run_linear(const CollapseConfig& cfg, LinearProcess& process);

struct BornTest {
  std::vector<double> target;
  std::vector<double> frequency;
  /// Binomial standard error sqrt(p (1 - p) / N) of each target.
  std::vector<double> sigma;
  std::vector<bool> within_3sigma;
  double chi2 = 0;
  int dof = 0;
  std::uint64_t nonconverged = 0;
  bool pass = false;
};

/// Frequencies are winner counts over all runs. Passes iff every outcome is
/// within 3 sigma of |a_k|^2 (exact equality where sigma = 0) and every run
/// converged.
BornTest born_test(const CollapseResult& result, std::span<const Amplitude> a);

}  // namespace uvar::collapse
