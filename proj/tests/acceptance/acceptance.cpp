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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                      exit 0 iff every criterion passes
//   acceptance --expect-fail 1,3    exit 0 iff exactly the listed ones fail

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "uvar/branching/lemma.hpp"
#include "uvar/branching/scenarios.hpp"
#include "uvar/cli/cli.hpp"
#include "uvar/collapse/collapse.hpp"
#include "uvar/fock/antisym.hpp"
#include "uvar/fock/ladder.hpp"
#include "uvar/oplib/flow.hpp"
#include "uvar/oplib/operators.hpp"
#include "uvar/oplib/relations.hpp"
#include "uvar/oplib/report_io.hpp"
#include "uvar/oplib/spacetime.hpp"
#include "uvar/oplib/variational.hpp"
#include "uvar/repr/repr.hpp"
#include "uvar/weyl/substitution.hpp"
#include "unit/spectral.hpp"

namespace {

using namespace uvar;
using oplib::NamedOperatorSet;
using oplib::OperatorFamily;
using oplib::RelationReport;
using weyl::Matrix;
using weyl::Poly;
using weyl::Scalar;
using weyl::Variable;

// Pinned tolerances and sizes.
constexpr double kSpinOneTol = 1e-12;
constexpr int kMonteCarloSamples = 1'000'000;
constexpr double kMonteCarloTol = 1e-2;
constexpr int kHomomorphismPairs = 10;
constexpr int kFiniteUnitaries = 10;
constexpr int kVariationalMatrices = 20;
constexpr double kVariationalTol = 1e-6;
constexpr double kVariationalStep = 1e-5;
constexpr int kLemmaInstances = 50;
constexpr int kLemmaMaxDim = 8;
constexpr int kRuinRuns = 20'000;
constexpr double kRuinTol = 0.010;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::size_t failures(const std::vector<RelationReport>& rs) {
  std::size_t n = 0;
  for (const auto& r : rs) n += !r.pass;
  return n;
}

bool exact_all_pass(const std::vector<RelationReport>& rs) {
  for (const auto& r : rs) {
    if (!r.pass || r.residual != "0") return false;
  }
  return !rs.empty();
}

Poly mono(int a, int b) {
  weyl::Monomial m;
  if (a) m.add(Variable::u(), a);
  if (b) m.add(Variable::v(), b);
  return Poly::monomial(1, m);
}

// ---------------------------------------------------------------- criteria

Verdict angular_momentum_xyz() {
  Verdict v;
  auto rs = oplib::verify_commutator_table(oplib::build_operators(OperatorFamily::xyz_angular),
                                           oplib::angular_momentum_table("L"));
  v.require(rs.size() == 3, "expected 3 relations");
  v.require(exact_all_pass(rs), std::to_string(failures(rs)) + "/3 relations fail");
  for (const auto& r : rs) {
    if (!r.pass) v.detail += "; " + r.relation + " actual " + r.actual;
  }
  return v;
}

Verdict spin_table() {
  Verdict v;
  auto s = oplib::build_operators(OperatorFamily::su2_spin);
  auto rs = oplib::verify_commutator_table(s, oplib::angular_momentum_table("S"));
  v.require(rs.size() == 3 && exact_all_pass(rs), "S table fails");
  auto h = oplib::verify_hermiticity(s);
  v.require(h.size() == 3 && exact_all_pass(h), "hermiticity fails");
  return v;
}

Verdict spin_matrices() {
  Verdict v;
  auto s = oplib::build_operators(OperatorFamily::su2_spin);

  // Degree 1: the monomial basis is already orthonormal, so the exact
  // monomial-basis matrix is the normalized one.
  const repr::RepSpace d1 = repr::RepSpace::of_degree(1);
  const Matrix half{{Scalar(0), Scalar::rational(1, 2)}, {Scalar::rational(1, 2), Scalar(0)}};
  v.require(d1.norms2()[0] == Scalar(1) && d1.norms2()[1] == Scalar(1), "degree-1 norms not 1");
  v.require(repr::matrix_rep(s.at("Sx"), d1).exact == half, "degree-1 S_x != (1/2) sigma_x");
  Eigen::MatrixXcd half_f(2, 2);
  half_f << 0, 0.5, 0.5, 0;
  v.require(repr::matrix_rep(s.at("Sx"), d1, true).numeric == half_f,
            "normalized degree-1 S_x not exact");

  Eigen::MatrixXcd spin1(3, 3);
  spin1 << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  spin1 /= std::sqrt(2.0);
  repr::RepMatrix m2 = repr::matrix_rep(s.at("Sx"), repr::RepSpace::of_degree(2), true);
  const double dev = (m2.numeric - spin1).cwiseAbs().maxCoeff();
  char buf[96];
  std::snprintf(buf, sizeof buf, "degree-2 S_x differs from the spin-1 matrix by %.3g", dev);
  v.require(dev <= kSpinOneTol, buf);
  return v;
}

// 2/pi^2 times the integral over two unit disks is 2 E[conj(f) g] for u, v
// uniform on the disk.
std::complex<double> disk_average(int a1, int b1, int a2, int b2, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto disk = [&] { return std::polar(std::sqrt(unit(rng)), 2 * std::numbers::pi * unit(rng)); };
  std::complex<double> sum = 0;
  for (int k = 0; k < kMonteCarloSamples; ++k) {
    auto u = disk(), w = disk();
    sum += std::conj(std::pow(u, a1) * std::pow(w, b1)) * std::pow(u, a2) * std::pow(w, b2);
  }
  return 2.0 * sum / double(kMonteCarloSamples);
}

Verdict inner_products() {
  Verdict v;
  struct Case {
    int a, b;
    Scalar expected;
  };
  const Case cases[] = {{1, 0, Scalar(1)}, {2, 0, Scalar::rational(2, 3)},
                        {1, 1, Scalar::rational(1, 2)}};
  std::uint64_t seed = 1;
  for (const auto& c : cases) {
    const Scalar exact = repr::inner_product(mono(c.a, c.b), mono(c.a, c.b));
    v.require(exact == c.expected, "closed form <" + mono(c.a, c.b).to_string() + "> wrong");
    const double mc = std::abs(disk_average(c.a, c.b, c.a, c.b, seed++) - exact.to_complex());
    char buf[80];
    std::snprintf(buf, sizeof buf, "Monte Carlo off by %.3g", mc);
    v.require(mc <= kMonteCarloTol, buf);
  }
  // Orthonormal spin-1/2 and spin-1 bases: u, v; sqrt(3/2) u^2, sqrt(2) uv, sqrt(3/2) v^2.
  v.require(repr::inner_product(mono(0, 1), mono(0, 1)) == Scalar(1), "<v|v> != 1");
  v.require(repr::inner_product(mono(1, 0), mono(0, 1)) == Scalar(0), "<u|v> != 0");
  v.require(Scalar::rational(3, 2) * repr::inner_product(mono(2, 0), mono(2, 0)) == Scalar(1),
            "sqrt(3/2) u^2 not normalized");
  v.require(Scalar(2) * repr::inner_product(mono(1, 1), mono(1, 1)) == Scalar(1),
            "sqrt(2) uv not normalized");
  v.require(Scalar::rational(3, 2) * repr::inner_product(mono(0, 2), mono(0, 2)) == Scalar(1),
            "sqrt(3/2) v^2 not normalized");
  v.require(repr::inner_product(mono(2, 0), mono(1, 1)) == Scalar(0) &&
                repr::inner_product(mono(2, 0), mono(0, 2)) == Scalar(0),
            "spin-1 basis not orthogonal");
  return v;
}

Verdict homomorphism() {
  Verdict v;
  for (int d = 1; d <= 3; ++d) {
    const repr::RepSpace space = repr::RepSpace::of_degree(d);
    const auto g = repr::random_su2(2 * kHomomorphismPairs, 100 + d);
    int bad = 0;
    for (int k = 0; k < kHomomorphismPairs; ++k) {
      const Matrix& a = g[2 * k];
      const Matrix& b = g[2 * k + 1];
      const Matrix lhs = repr::rep_of_group_element(b, space).exact *
                         repr::rep_of_group_element(a, space).exact;
      bad += !(lhs == repr::rep_of_group_element(b * a, space).exact);
    }
    v.require(bad == 0, "degree " + std::to_string(d) + ": " + std::to_string(bad) + " pairs fail");
  }
  return v;
}

Verdict casimir() {
  Verdict v;
  auto s = oplib::build_operators(OperatorFamily::su2_spin);
  for (int d = 0; d <= 4; ++d) {
    const repr::RepSpace space = repr::RepSpace::of_degree(d);
    const Matrix expected =
        Matrix::identity(space.dim()) * Scalar(mpq_class(d * (d + 2), 4));
    v.require(repr::casimir_spectrum(s, space).matrix == expected,
              "degree " + std::to_string(d) + " not s(s+1) I");
  }
  const int ds[] = {1, 2};
  repr::CasimirResult c = repr::casimir_spectrum(s, repr::RepSpace::span(ds));
  v.require(c.blocks.size() == 2, "span 1+2 should give two blocks");
  if (c.blocks.size() == 2) {
    v.require(c.blocks[0].eigenvalue == Scalar::rational(3, 4) && c.blocks[0].dim == 2,
              "first block not 3/4 (dim 2)");
    v.require(c.blocks[1].eigenvalue == Scalar(2) && c.blocks[1].dim == 3,
              "second block not 2 (dim 3)");
  }
  return v;
}

Verdict finite_invariance() {
  Verdict v;
  const auto ob1 = oplib::build_operators(OperatorFamily::b1_laplacian).at("O");
  const Variable uv[] = {Variable::u(), Variable::v()};
  std::vector<Matrix> unitaries = repr::random_su2(kFiniteUnitaries, 20261015);
  const Scalar i = Scalar::i();
  unitaries.push_back(Matrix{{i, Scalar(0)}, {Scalar(0), Scalar(1)}});
  unitaries.push_back(Matrix{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}});
  unitaries.push_back(Matrix{{Scalar::rational(3, 5), Scalar::rational(4, 5) * i},
                             {Scalar::rational(4, 5) * i, Scalar::rational(3, 5)}});
  std::vector<weyl::Substitution> subs;
  for (const auto& a : unitaries) {
    v.require(a.dagger() * a == Matrix::identity(2), "sample not unitary");
    subs.push_back(weyl::Substitution::from_matrix(a, uv));
  }
  auto rs = oplib::verify_finite_invariance(ob1, subs);
  v.require(rs.size() >= 10 && exact_all_pass(rs),
            std::to_string(failures(rs)) + "/" + std::to_string(rs.size()) + " fail");
  return v;
}

// Any single-coefficient mutation must change the outcome. For a set that
// passes this means some relation fails; for one that already fails, the
// residual report differs.
std::pair<int, int> mutation_detection(const NamedOperatorSet& base,
                                       const oplib::CommutatorTable& table) {
  const auto reference = oplib::verify_commutator_table(base, table);
  const bool base_passes = oplib::all_pass(reference);
  int total = 0, caught = 0;
  for (const auto& [label, op] : base.ops) {
    for (std::size_t t = 0; t < op.size(); ++t) {
      for (const Scalar& f : {Scalar(3), Scalar(-1), Scalar::i()}) {
        auto rs = oplib::verify_commutator_table(oplib::mutate_coefficient(base, label, t, f), table);
        ++total;
        caught += base_passes ? !oplib::all_pass(rs) : rs != reference;
      }
    }
  }
  return {caught, total};
}

Verdict translations_and_mutations() {
  Verdict v;
  for (int n = 1; n <= 3; ++n) {
    auto rs = oplib::verify_commutator_table(oplib::build_operators(OperatorFamily::translations, n),
                                             oplib::translation_table());
    v.require(rs.size() == 6 && exact_all_pass(rs), "[P,P] fails at n = " + std::to_string(n));
  }

  // (a) residual reports for both index readings, reproducible.
  const auto p2 = oplib::build_operators(OperatorFamily::translations, 2);
  for (auto reading : {oplib::IndexReading::slot_site_swapped, oplib::IndexReading::literal}) {
    auto once = oplib::verify_spacetime_relations(p2, oplib::build_spacetime_map(oplib::default_eta(), reading));
    auto twice = oplib::verify_spacetime_relations(p2, oplib::build_spacetime_map(oplib::default_eta(), reading));
    v.require(once.size() == 16 && once == twice,
              "spacetime report not reproducible for " + std::string(oplib::to_string(reading)));
  }
  const auto poincare = oplib::merge(oplib::build_operators(OperatorFamily::lorentz, 1),
                                     oplib::build_operators(OperatorFamily::translations, 1), "poincare");
  v.require(oplib::verify_commutator_table(poincare, oplib::poincare_table()) ==
                oplib::verify_commutator_table(poincare, oplib::poincare_table()),
            "full table report not reproducible");

  // (b) seeded single-coefficient errors.
  for (auto [family, prefix] : {std::pair{OperatorFamily::xyz_angular, "L"},
                                std::pair{OperatorFamily::su2_spin, "S"}}) {
    auto [caught, total] =
        mutation_detection(oplib::build_operators(family), oplib::angular_momentum_table(prefix));
    v.require(total > 0 && caught == total, std::string(prefix) + " mutations caught " +
                                                std::to_string(caught) + "/" + std::to_string(total));
  }
  return v;
}

Verdict translation_flow() {
  Verdict v;
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  for (int n = 1; n <= 2; ++n) {
    const auto p = oplib::build_operators(OperatorFamily::translations, n);
    for (int trial = 0; trial < 5; ++trial) {
      std::array<Scalar, 4> x;
      for (auto& s : x) s = Scalar::rational(num(rng), den(rng));
      oplib::FlowReport f = oplib::translation_flow_check(p, x);
      v.require(f.series_order <= 2, "series order " + std::to_string(f.series_order));
      for (const auto& r : f.reports) {
        const bool slot1 = r.relation.find("u1_") != std::string::npos ||
                           r.relation.find("v1_") != std::string::npos;
        if (slot1) v.require(r.pass && r.residual == "0", r.relation + " fails");
      }
    }
  }
  return v;
}

Verdict variational() {
  Verdict v;
  std::mt19937_64 rng(14);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> kernel_dim(1, 3);
  auto rand_c = [&] { return std::complex<double>(g(rng), g(rng)); };
  int agree = 0, total = 0;
  for (int k = 0; k < kVariationalMatrices; ++k) {
    Eigen::MatrixXcd q = Eigen::MatrixXcd::NullaryExpr(5, 5, rand_c).householderQr().householderQ();
    const int kd = kernel_dim(rng);
    Eigen::VectorXd eig(5);
    for (int j = 0; j < 5; ++j) eig(j) = j < kd ? 0.0 : (j % 2 ? -1.0 : 1.0) * (1.0 + std::abs(g(rng)));
    Eigen::MatrixXcd o = q * eig.cast<std::complex<double>>().asDiagonal() * q.adjoint();
    o = (o + o.adjoint()) / 2.0;

    Eigen::VectorXcd in_kernel = Eigen::VectorXcd::Zero(5);
    for (int j = 0; j < kd; ++j) in_kernel += rand_c() * q.col(j);
    const Eigen::VectorXcd generic = Eigen::VectorXcd::NullaryExpr(5, rand_c);
    for (const auto& psi : {in_kernel, generic}) {
      auto r = oplib::variational_equivalence_check(o, psi, kVariationalTol, kVariationalStep);
      ++total;
      agree += r.gradient_zero == r.residual_zero;
    }
    auto zero = oplib::variational_equivalence_check(o, in_kernel, kVariationalTol, kVariationalStep);
    v.require(zero.gradient_zero && zero.residual_zero, "kernel vector not stationary");
  }
  v.require(agree == total, std::to_string(total - agree) + "/" + std::to_string(total) + " disagree");
  return v;
}

Verdict car_and_slater() {
  Verdict v;
  for (int m = 1; m <= 4; ++m) {
    v.require(exact_all_pass(fock::verify_car(m)), "CAR fails at M = " + std::to_string(m));
  }
  int bad = 0;
  for (int modes = 1; modes <= 6; ++modes) {
    for (int k = 1; k <= std::min(4, modes); ++k) {
      std::vector<int> pick;
      std::function<void()> rec = [&] {
        if (static_cast<int>(pick.size()) == k) {
          fock::SignedState s = fock::create_sequence(modes, pick);
          fock::LabeledKet p;
          for (int j = 0; j < k; ++j) {
            p.factors.emplace_back(fock::OrbitalLabel::named(std::to_string(pick[j])), j + 1);
          }
          std::vector<int> sorted = pick;
          std::sort(sorted.begin(), sorted.end());
          fock::KetSum::Assignment canon;
          for (int j = 0; j < k; ++j) {
            canon.emplace(j + 1, fock::OrbitalLabel::named(std::to_string(sorted[j])));
          }
          bad += !(fock::antisymmetrize(p).coeff(canon) == Scalar(s.sign));
          return;
        }
        for (int m = 0; m < modes; ++m) {
          if (std::find(pick.begin(), pick.end(), m) != pick.end()) continue;
          pick.push_back(m);
          rec();
          pick.pop_back();
        }
      };
      rec();
    }
  }
  v.require(bad == 0, std::to_string(bad) + " Slater signs disagree");
  return v;
}

Verdict exchange_signs() {
  Verdict v;
  using fock::OrbitalLabel;
  auto ket = [](std::initializer_list<const char*> labels) {
    fock::LabeledKet k;
    int s = 1;
    for (const char* l : labels) k.factors.emplace_back(OrbitalLabel::named(l), s++);
    return k;
  };
  const OrbitalLabel A = OrbitalLabel::named("A"), B = OrbitalLabel::named("B"),
                     C = OrbitalLabel::named("C");
  fock::KetSum pair = fock::antisymmetrize(ket({"A", "B"}));
  v.require(pair.exchange_sets(1, 2) == pair.scaled(-1), "pair: set exchange sign");
  v.require(pair.exchange_labels(A, B) == pair.scaled(-1), "pair: label exchange sign");
  fock::KetSum triple = fock::antisymmetrize(ket({"A", "B", "C"}));
  v.require(triple.exchange_sets(1, 3) == triple.scaled(-1), "triple: set exchange sign");
  v.require(triple.exchange_labels(A, C) == triple.scaled(-1), "triple: label exchange sign");
  v.require(fock::antisymmetrize(ket({"A", "A"})).is_zero(), "repeated pair not zero");
  v.require(fock::antisymmetrize(ket({"A", "B", "A"})).is_zero(), "repeated triple not zero");
  return v;
}

Verdict branching_scenarios() {
  Verdict v;
  using namespace branching;
  ScenarioResult m = run_scenario(ScenarioKind::mirror, {});
  v.require(m.pass() && m.state.branches.size() == 2, "mirror checks fail");
  if (m.state.branches.size() == 2) {
    const Records h{{"DetH", "yes"}, {"DetV", "no"}, {"Obs1", "I see only yes, no"}, {"photon", "H"}};
    const Records vv{{"DetH", "no"}, {"DetV", "yes"}, {"Obs1", "I see only no, yes"}, {"photon", "V"}};
    v.require(m.state.branches[0].records == h && m.state.branches[1].records == vv,
              "mirror record strings differ");
  }

  ScenarioResult two = run_scenario(ScenarioKind::two_observers, {});
  int disagree = 0;
  for (const auto& b : two.state.branches) {
    const auto& r = b.records;
    const bool first_h = r.at("Obs1") == "I see only yes, no";
    const bool second_h = r.at("Obs2").rfind("I see yes, no", 0) == 0;
    disagree += first_h != second_h;
  }
  v.require(two.pass() && disagree == 0, std::to_string(disagree) + " disagreeing branches");

  ScenarioParams g;
  g.grains = 8;
  ScenarioResult grains = run_scenario(ScenarioKind::grains, g);
  bool one_each = grains.state.branches.size() == 8;
  for (const auto& b : grains.state.branches) {
    int exposed = 0;
    for (int j = 1; j <= 8; ++j) exposed += b.records.at(grain_key(j)) == "exposed";
    one_each = one_each && exposed == 1;
  }
  v.require(grains.pass() && one_each, "grains(8) is not 8 branches with one exposure each");

  g.layers = 3;
  ScenarioResult t = run_scenario(ScenarioKind::trajectory, g);
  bool collinear = t.state.branches.size() == 8;
  for (const auto& b : t.state.branches) {
    int track = -1;
    for (int l = 1; l <= 3; ++l) {
      int hit = 0, at = -1;
      for (int j = 1; j <= 8; ++j) {
        if (b.records.at(layer_grain_key(l, j)) == "exposed") ++hit, at = j;
      }
      collinear = collinear && hit == 1 && (track < 0 || track == at);
      track = at;
    }
  }
  v.require(t.pass() && collinear, "trajectory(8, 3) not 8 collinear tracks");

  const Amplitude even[] = {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
  const Amplitude skew[] = {std::sqrt(0.3), std::sqrt(0.7)};
  bool independent = coefficient_independence_check(ScenarioKind::mirror, {}, even, skew) &&
                     coefficient_independence_check(ScenarioKind::two_observers, {}, even, skew);
  const auto a = random_weights(8, 1), b = random_weights(8, 2);
  ScenarioParams gp;
  gp.grains = 8;
  independent = independent && coefficient_independence_check(ScenarioKind::grains, gp, a, b);
  gp.layers = 3;
  independent = independent && coefficient_independence_check(ScenarioKind::trajectory, gp, a, b);
  v.require(independent, "record structure depends on the coefficients");
  return v;
}

Verdict eigen_lemma() {
  Verdict v;
  std::mt19937_64 rng(5);
  const std::pair<double, double> phases[] = {{0.0, 0.3}, {1.1, -0.4}, {2.0, 2.9}};
  int holds = 0, hypothesis_true = 0;
  for (int k = 0; k < kLemmaInstances; ++k) {
    const int dim = 2 + k % (kLemmaMaxDim - 1);
    auto s = uvar::testing::spectral_instance(rng, dim, 1 + k % (dim - 1));
    // Every third instance pairs x with a vector from another eigenvalue.
    const Eigen::VectorXcd& y = k % 3 == 2 ? s.other : s.y;
    auto r = branching::eigen_branch_check(s.m, s.x, y, s.e, phases);
    hypothesis_true += r.hypothesis;
    bool ok = !r.hypothesis || (r.x_residual <= branching::kConclusionTol &&
                                r.y_residual <= branching::kConclusionTol);
    holds += ok;
  }
  v.require(holds == kLemmaInstances, std::to_string(kLemmaInstances - holds) + " violations");
  v.require(hypothesis_true > 0, "no instance satisfied the hypothesis");
  return v;
}

Verdict collapse_schemes() {
  Verdict v;
  using namespace collapse;
  auto amps = [](std::initializer_list<double> p) {
    std::vector<Amplitude> a;
    for (double x : p) a.emplace_back(std::sqrt(x), 0.0);
    return a;
  };
  for (Scheme s : {Scheme::linear_drift, Scheme::linear_noise}) {
    CollapseConfig c1, c2;
    c1.scheme = c2.scheme = s;
    c1.runs = c2.runs = 200;
    c1.seed = c2.seed = 15;
    c1.record_traces = c2.record_traces = true;
    c1.a = amps({0.5, 0.5});
    c2.a = amps({0.3, 0.7});
    CollapseResult r1 = run_scheme(c1), r2 = run_scheme(c2);
    bool same = r1.traces.size() == r2.traces.size() && r1.ensemble_hash == r2.ensemble_hash;
    for (std::size_t m = 0; same && m < r1.traces.size(); ++m) same = r1.traces[m].x == r2.traces[m].x;
    v.require(same, to_string(s) + ": X traces differ between amplitude vectors");
    BornTest b1 = born_test(r1, c1.a), b2 = born_test(r2, c2.a);
    v.require(b1.frequency == b2.frequency && !(b1.pass && b2.pass),
              to_string(s) + ": both amplitude vectors pass");
  }

  CollapseConfig ruin;
  ruin.scheme = Scheme::nonlinear_ruin;
  ruin.runs = kRuinRuns;
  ruin.seed = 7;
  ruin.a = amps({0.3, 0.7});
  CollapseResult r = run_scheme(ruin);
  BornTest b = born_test(r, ruin.a);
  char buf[80];
  std::snprintf(buf, sizeof buf, "ruin frequency %.4f", b.frequency[0]);
  v.require(r.nonconverged == 0 && std::abs(b.frequency[0] - 0.3) <= kRuinTol && b.pass, buf);
  v.require(r.martingale.pass, "martingale drift check fails");

  ruin.a = amps({0.1, 0.2, 0.7});
  BornTest b3 = born_test(run_scheme(ruin), ruin.a);
  v.require(b3.pass, "three-outcome frequencies outside 3 sigma");
  return v;
}

Verdict cli_determinism() {
  Verdict v;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "uvar-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string scenario = (dir / "trajectory.json").string();
  std::ofstream(scenario) << R"({"scenario": "trajectory", "params": {"N": 8, "L": 3, "seed": 4}})";

  const std::vector<std::vector<std::string>> commands = {
      {"collapse", "run", "--scheme", "nonlinear_ruin", "--amps", "0.3,0.7", "--runs", "2000",
       "--seed", "7"},
      {"collapse", "run", "--scheme", "linear_noise", "--amps", "0.5,0.5", "--runs", "100",
       "--steps", "500", "--seed", "7"},
      {"repr", "homomorphism", "--degree", "3", "--pairs", "10", "--seed", "42"},
      {"verify", "spacetime", "--random-eta", "9", "--n", "3"},
      {"verify", "invariance", "--target", "b1", "--finite", "10", "--seed", "3"},
      {"verify", "lie", "--set", "poincare"},
      {"sim", "branch", scenario},
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  int k = 0;
  for (auto args : commands) {
    std::string files[2], stdout_text[2];
    int codes[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / ("r" + std::to_string(k) + "_" + std::to_string(rep) + ".json");
      auto full = args;
      full.insert(full.end(), {"--out", out.string(), "--format", "json"});
      std::ostringstream o, e;
      codes[rep] = cli::run(full, o, e);
      stdout_text[rep] = o.str();
      files[rep] = slurp(out);
    }
    const std::string name = args[0] + " " + args[1];
    v.require(codes[0] != cli::kExitUsage, name + ": usage error");
    v.require(codes[0] == codes[1] && files[0] == files[1] && stdout_text[0] == stdout_text[1] &&
                  !files[0].empty(),
              name + ": reports differ");
    ++k;
  }
  fs::remove_all(dir);
  return v;
}

struct Criterion {
  int id;
  const char* title;
  Verdict (*run)();
};

const Criterion kCriteria[] = {
    {1, "angular momentum table on the xyz generators, exact", angular_momentum_xyz},
    {2, "spin table and hermiticity on u, v generators, exact", spin_table},
    {3, "S_x matrices: degree 1 exact, degree 2 vs spin-1 within 1e-12", spin_matrices},
    {4, "closed-form inner products vs 1e6-sample Monte Carlo, normalizations", inner_products},
    {5, "rep(B) rep(A) = rep(BA), 10 random SU(2) pairs, degrees 1-3", homomorphism},
    {6, "Casimir s(s+1) I on degrees 0-4, blocks 3/4 and 2 on 1+2", casimir},
    {7, "bidisk laplacian invariant under exact unitary substitutions", finite_invariance},
    {8, "[P,P] = 0 for n = 1..3, reproducible reports, mutation detection", translations_and_mutations},
    {9, "translation flow terminates by order 2, slot-1 lines exact", translation_flow},
    {10, "variational stationarity agrees with O psi = 0 on 20 matrices", variational},
    {11, "CAR on 1-4 modes, Slater signs match the antisymmetrizer", car_and_slater},
    {12, "exchange signs -1, repeated labels vanish", exchange_signs},
    {13, "branching scenarios: records, agreement, exposures, tracks, independence", branching_scenarios},
    {14, "eigen-branch lemma on 50 spectral instances", eigen_lemma},
    {15, "linear schemes blind to coefficients, ruin reproduces frequencies", collapse_schemes},
    {16, "identical CLI invocations give byte-identical reports", cli_determinism},
};

std::set<int> parse_ids(const std::string& s) {
  std::set<int> ids;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) ids.insert(std::stoi(tok));
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_fail;
  bool expectation_given = false;
  for (int k = 1; k < argc; ++k) {
    const std::string a = argv[k];
    if (a == "--expect-fail" && k + 1 < argc) {
      expected_fail = parse_ids(argv[++k]);
      expectation_given = true;
    } else {
      std::cerr << "usage: acceptance [--expect-fail ID,ID,...]\n";
      return 1;
    }
  }

  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::set<int> failed;
  for (const auto& c : kCriteria) {
    const auto t0 = clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (!v.pass) failed.insert(c.id);
    std::printf("%s %2d  %-72s %6.2fs%s%s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                v.detail.empty() ? "" : "  | ", v.detail.c_str());
  }
  const double total = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%zu/%zu criteria pass in %.2fs\n", std::size(kCriteria) - failed.size(),
              std::size(kCriteria), total);

  if (!expectation_given) return failed.empty() ? 0 : 1;
  if (failed != expected_fail) {
    std::printf("failing set differs from the expected one\n");
    return 1;
  }
  return 0;
}
