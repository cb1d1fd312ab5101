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

#include "uvar/collapse/collapse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "uvar/errors.hpp"

namespace uvar::collapse {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv(std::uint64_t& h, std::uint64_t word) {
  for (int b = 0; b < 8; ++b) {
    h ^= (word >> (8 * b)) & 0xffu;
    h *= kFnvPrime;
  }
}

void hash_row(std::uint64_t& h, std::span<const double> row) {
  for (double v : row) fnv(h, std::bit_cast<std::uint64_t>(v));
}

class LinearDrift final : public LinearProcess {
 public:
  void start(std::mt19937_64& rng, std::span<double> lb) override {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    rates_.resize(lb.size());
    for (auto& r : rates_) r = u(rng);
    std::fill(lb.begin(), lb.end(), 0.0);
  }
  void step(std::mt19937_64&, double dt, std::span<double> lb) override {
    for (std::size_t k = 0; k < lb.size(); ++k) lb[k] += rates_[k] * dt;
  }

 private:
  std::vector<double> rates_;
};

class LinearNoise final : public LinearProcess {
 public:
  void start(std::mt19937_64&, std::span<double> lb) override {
    std::fill(lb.begin(), lb.end(), 0.0);
  }
  void step(std::mt19937_64& rng, double dt, std::span<double> lb) override {
    const double s = std::sqrt(dt);
    for (auto& v : lb) v += s * g_(rng) - 0.5 * dt;
  }

 private:
  std::normal_distribution<double> g_;
};

// X(k) = |beta_k|^2 / sum_j |beta_j|^2, evaluated in log space.
void x_from_log_beta(std::span<const double> lb, std::span<double> x) {
  const double top = *std::max_element(lb.begin(), lb.end());
  double s = 0;
  for (std::size_t k = 0; k < lb.size(); ++k) s += x[k] = std::exp(2.0 * (lb[k] - top));
  for (auto& v : x) v /= s;
}

int collapsed_index(std::span<const double> x) {
  auto it = std::max_element(x.begin(), x.end());
  return *it >= kCollapseThreshold ? static_cast<int>(it - x.begin()) : -1;
}

RunTrace linear_run(const CollapseConfig& cfg, LinearProcess& process, std::uint64_t m) {
  const std::size_t n = cfg.a.size();
  std::mt19937_64 rng(run_seed(cfg.seed, m));
  std::vector<double> lb(n), x(n);
  RunTrace t;
  t.trace_hash = kFnvOffset;
  auto record = [&] {
    hash_row(t.trace_hash, x);
    if (cfg.record_traces) {
      t.log_abs_beta.insert(t.log_abs_beta.end(), lb.begin(), lb.end());
      t.x.insert(t.x.end(), x.begin(), x.end());
    }
  };
  process.start(rng, lb);
  x_from_log_beta(lb, x);
  record();
  t.winner = collapsed_index(x);
  while (t.winner < 0 && t.steps_taken < cfg.steps) {
    process.step(rng, cfg.dt, lb);
    x_from_log_beta(lb, x);
    ++t.steps_taken;
    record();
    t.winner = collapsed_index(x);
  }
  return t;
}

struct MartingaleAccumulator {
  std::vector<double> sum, sum2;
  std::uint64_t samples = 0;
  double max_norm_error = 0;
};

RunTrace ruin_run(const CollapseConfig& cfg, std::uint64_t m, MartingaleAccumulator& acc) {
  const std::size_t n = cfg.a.size();
  std::mt19937_64 rng(run_seed(cfg.seed, m));
  std::vector<double> w(n), before(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = std::norm(cfg.a[k]);
  RunTrace t;
  t.trace_hash = kFnvOffset;
  auto record = [&] {
    hash_row(t.trace_hash, w);
    if (cfg.record_traces) t.x.insert(t.x.end(), w.begin(), w.end());
    double s = 0;
    for (double v : w) s += v;
    acc.max_norm_error = std::max(acc.max_norm_error, std::abs(s - 1.0));
  };
  const double cap = std::sqrt(cfg.dt);
  std::vector<std::size_t> alive;
  std::uniform_int_distribution<int> coin(0, 1);

  record();
  t.winner = collapsed_index(w);
  while (t.winner < 0 && t.steps_taken < cfg.steps) {
    alive.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (w[k] > 0) alive.push_back(k);
    }
    before = w;
    std::uniform_int_distribution<std::size_t> pick(0, alive.size() - 1);
    std::size_t i = alive[pick(rng)], j;
    do {
      j = alive[pick(rng)];
    } while (j == i);
    const double eps = std::min({cap, w[i], w[j]});
    if (coin(rng)) std::swap(i, j);
    // i gains, j loses; eps == w[j] lands exactly on zero.
    w[i] += eps;
    w[j] = eps == w[j] ? 0.0 : w[j] - eps;
    std::size_t left = 0, last = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (w[k] > 0) ++left, last = k;
    }
    if (left == 1) w[last] = 1.0;

    for (std::size_t k = 0; k < n; ++k) {
      const double d = w[k] - before[k];
      acc.sum[k] += d;
      acc.sum2[k] += d * d;
    }
    ++acc.samples;
    ++t.steps_taken;
    record();
    t.winner = collapsed_index(w);
  }
  return t;
}

CollapseResult finish(std::vector<RunTrace> traces, std::size_t n) {
  CollapseResult r;
  r.winner_counts.assign(n, 0);
  r.ensemble_hash = kFnvOffset;
  for (const auto& t : traces) {
    if (t.winner < 0) {
      ++r.nonconverged;
    } else {
      ++r.winner_counts[t.winner];
    }
    fnv(r.ensemble_hash, t.trace_hash);
  }
  r.traces = std::move(traces);
  return r;
}

}  // namespace

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::linear_drift: return "linear_drift";
    case Scheme::linear_noise: return "linear_noise";
    case Scheme::nonlinear_ruin: return "nonlinear_ruin";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  for (auto s : {Scheme::linear_drift, Scheme::linear_noise, Scheme::nonlinear_ruin}) {
    if (to_string(s) == name) return s;
  }
  throw BadParams("unknown scheme: " + std::string(name));
}

bool is_linear(Scheme s) { return s != Scheme::nonlinear_ruin; }

void CollapseConfig::validate() const {
  if (a.empty()) throw BadParams("need at least one outcome");
  double s = 0;
  for (auto v : a) s += std::norm(v);
  if (!(std::abs(s - 1.0) <= kNormTol)) throw BadParams("sum |a_k|^2 must be 1 within 1e-12");
  if (runs < 1) throw BadParams("runs must be positive");
  if (steps < 0) throw BadParams("steps must be non-negative");
  if (!(dt > 0) || !std::isfinite(dt)) throw BadParams("dt must be positive");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t run_seed(std::uint64_t master, std::uint64_t m) {
  return splitmix64(master + m * 0x9E3779B97F4A7C15ULL);
}

std::unique_ptr<LinearProcess> make_linear_drift() { return std::make_unique<LinearDrift>(); }
std::unique_ptr<LinearProcess> make_linear_noise() { return std::make_unique<LinearNoise>(); }

CollapseResult run_linear(const CollapseConfig& cfg, LinearProcess& process) {
  cfg.validate();
  std::vector<RunTrace> traces;
  traces.reserve(cfg.runs);
  for (int m = 0; m < cfg.runs; ++m) traces.push_back(linear_run(cfg, process, m));
  return finish(std::move(traces), cfg.a.size());
}

CollapseResult run_scheme(const CollapseConfig& cfg) {
  cfg.validate();
  if (cfg.scheme == Scheme::linear_drift) {
    auto p = make_linear_drift();
    return run_linear(cfg, *p);
  }
  if (cfg.scheme == Scheme::linear_noise) {
    auto p = make_linear_noise();
    return run_linear(cfg, *p);
  }

  const std::size_t n = cfg.a.size();
  MartingaleAccumulator acc{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  std::vector<RunTrace> traces;
  traces.reserve(cfg.runs);
  for (int m = 0; m < cfg.runs; ++m) traces.push_back(ruin_run(cfg, m, acc));
  CollapseResult r = finish(std::move(traces), n);

  MartingaleStat& ms = r.martingale;
  ms.samples = acc.samples;
  ms.max_norm_error = acc.max_norm_error;
  ms.pass = ms.max_norm_error <= kNormTol;
  for (std::size_t k = 0; k < n; ++k) {
    const double c = static_cast<double>(acc.samples);
    const double mean = c > 0 ? acc.sum[k] / c : 0.0;
    const double var = c > 1 ? (acc.sum2[k] - c * mean * mean) / (c - 1) : 0.0;
    const double se = c > 0 ? std::sqrt(std::max(var, 0.0) / c) : 0.0;
    ms.mean.push_back(mean);
    ms.std_error.push_back(se);
    ms.pass = ms.pass && (se > 0 ? std::abs(mean) <= 3 * se : mean == 0);
  }
  return r;
}

BornTest born_test(const CollapseResult& result, std::span<const Amplitude> a) {
  if (a.size() != result.winner_counts.size()) {
    throw BadParams("amplitude count differs from outcome count");
  }
  BornTest b;
  const double runs = static_cast<double>(result.traces.size());
  b.nonconverged = result.nonconverged;
  b.pass = result.nonconverged == 0 && runs > 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double p = std::norm(a[k]);
    const double count = static_cast<double>(result.winner_counts[k]);
    const double f = runs > 0 ? count / runs : 0.0;
    const double sigma = runs > 0 ? std::sqrt(p * (1 - p) / runs) : 0.0;
    const bool ok = sigma > 0 ? std::abs(f - p) <= 3 * sigma : f == p;
    b.target.push_back(p);
    b.frequency.push_back(f);
    b.sigma.push_back(sigma);
    b.within_3sigma.push_back(ok);
    b.pass = b.pass && ok;
    const double expected = p * runs;
    if (expected > 0) {
      b.chi2 += (count - expected) * (count - expected) / expected;
      ++b.dof;
    } else if (count > 0) {
      b.chi2 = INFINITY;
    }
  }
  b.dof = std::max(b.dof - 1, 0);
  return b;
}

}  // namespace uvar::collapse
