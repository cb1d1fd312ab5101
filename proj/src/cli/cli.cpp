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

#include "uvar/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "uvar/branching/scenarios.hpp"
#include "uvar/collapse/collapse.hpp"
#include "uvar/errors.hpp"
#include "uvar/fock/antisym.hpp"
#include "uvar/fock/ladder.hpp"
#include "uvar/oplib/flow.hpp"
#include "uvar/oplib/operators.hpp"
#include "uvar/oplib/relations.hpp"
#include "uvar/oplib/report_io.hpp"
#include "uvar/oplib/spacetime.hpp"
#include "uvar/repr/repr.hpp"
#include "uvar/weyl/substitution.hpp"

namespace uvar::cli {

namespace {

using nlohmann::ordered_json;
using oplib::NamedOperatorSet;
using oplib::OperatorFamily;
using oplib::RelationReport;
using oplib::Report;
using weyl::DiffOp;
using weyl::Matrix;
using weyl::Scalar;
using weyl::Variable;

/// Input the user can fix: bad files, bad values. Maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    auto b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json matrix_json(const Eigen::MatrixXcd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json operators_json(const NamedOperatorSet& s) {
  ordered_json j = ordered_json::object();
  for (const auto& [label, op] : s.ops) j[label] = op.to_string();
  return j;
}

Report make(std::string command) {
  Report r;
  r.command = std::move(command);
  return r;
}

void finish(Report& r, std::vector<RelationReport> relations) {
  r.relations = std::move(relations);
  r.pass = oplib::all_pass(r.relations);
}

// ---------------------------------------------------------------- verify

enum class Translations { printed, reconstructed };

NamedOperatorSet translations(int n, Translations t) {
  return t == Translations::printed ? oplib::build_operators(OperatorFamily::translations, n)
                                    : oplib::reconstructed_translations(n);
}

std::string to_string(Translations t) {
  return t == Translations::printed ? "printed" : "reconstructed";
}

struct LieOptions {
  std::string set = "xyz";
  int n = 1;
  std::string reading = "printed";
  std::string translations = "printed";
};

Translations parse_translations(const std::string& s) {
  if (s == "printed") return Translations::printed;
  if (s == "reconstructed") return Translations::reconstructed;
  throw UsageError("--translations must be printed or reconstructed");
}

oplib::LorentzReading parse_lorentz_reading(const std::string& s) {
  if (s == "printed") return oplib::LorentzReading::printed;
  if (s == "k2_conjugate_flipped") return oplib::LorentzReading::k2_conjugate_flipped;
  throw UsageError("--reading must be printed or k2_conjugate_flipped");
}

Report verify_lie(const LieOptions& o) {
  Report r = make("verify lie");
  r.parameters["set"] = o.set;
  r.parameters["n"] = o.n;
  const auto tr = parse_translations(o.translations);
  const auto reading = parse_lorentz_reading(o.reading);

  NamedOperatorSet ops;
  oplib::CommutatorTable table;
  if (o.set == "xyz") {
    ops = oplib::build_operators(OperatorFamily::xyz_angular);
    table = oplib::angular_momentum_table("L");
  } else if (o.set == "su2") {
    ops = oplib::build_operators(OperatorFamily::su2_spin);
    table = oplib::angular_momentum_table("S");
  } else if (o.set == "eq18") {
    ops = oplib::build_operators(OperatorFamily::lorentz, o.n, {}, reading);
    table = oplib::lorentz_table();
    r.parameters["reading"] = o.reading;
  } else if (o.set == "eq19") {
    ops = translations(o.n, tr);
    table = oplib::translation_table();
    r.parameters["translations"] = to_string(tr);
  } else if (o.set == "eq19-mutated") {
    ops = oplib::mutated_translations(o.n);
    table = oplib::translation_table();
  } else if (o.set == "poincare") {
    ops = oplib::merge(oplib::build_operators(OperatorFamily::lorentz, o.n, {}, reading),
                       translations(o.n, tr), "poincare");
    table = oplib::poincare_table();
    r.parameters["reading"] = o.reading;
    r.parameters["translations"] = to_string(tr);
  } else {
    throw UsageError("unknown --set " + o.set);
  }
  if (ops.reconstructed) r.notes.push_back("operator set is reconstructed, not transcribed");
  r.data["operators"] = operators_json(ops);
  finish(r, oplib::verify_commutator_table(ops, table));
  return r;
}

struct InvarianceOptions {
  std::string target = "o1";
  std::string op;
  std::string groups;
  int n = 2;
  int finite = 0;
  std::uint64_t seed = 1;
};

Report verify_invariance(const InvarianceOptions& o) {
  Report r = make("verify invariance");
  DiffOp target;
  std::string default_groups;
  if (!o.op.empty()) {
    try {
      target = DiffOp::parse(o.op);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--op: ") + e.what());
    }
    r.parameters["op"] = target.to_string();
    default_groups = "su2";
  } else if (o.target == "o1") {
    target = oplib::build_operators(OperatorFamily::O1, o.n).at("O1");
    r.parameters["target"] = "o1";
    default_groups = "lorentz,translations,su-n";
  } else if (o.target == "b1") {
    target = oplib::build_operators(OperatorFamily::b1_laplacian).at("O");
    r.parameters["target"] = "b1";
    default_groups = "su2";
  } else {
    throw UsageError("--target must be o1 or b1");
  }
  r.parameters["n"] = o.n;
  const std::string groups = o.groups.empty() ? default_groups : o.groups;
  r.parameters["groups"] = groups;

  std::vector<RelationReport> out;
  for (const auto& g : split(groups)) {
    NamedOperatorSet gens;
    if (g == "lorentz") {
      gens = oplib::build_operators(OperatorFamily::lorentz, o.n);
    } else if (g == "translations") {
      gens = oplib::build_operators(OperatorFamily::translations, o.n);
    } else if (g == "translations-reconstructed") {
      gens = oplib::reconstructed_translations(o.n);
    } else if (g == "su-n") {
      if (o.n != 2) throw UsageError("su-n uses the Pauli matrices and needs --n 2");
      gens = oplib::build_operators(OperatorFamily::su_n, 2, oplib::pauli_matrices());
    } else if (g == "su2") {
      gens = oplib::build_operators(OperatorFamily::su2_spin);
    } else if (g == "xyz") {
      gens = oplib::build_operators(OperatorFamily::xyz_angular);
    } else {
      throw UsageError("unknown group " + g);
    }
    for (auto& rep : oplib::verify_invariance(target, gens, "invariance[" + g + "]")) {
      out.push_back(std::move(rep));
    }
  }
  if (o.finite > 0) {
    r.parameters["finite"] = o.finite;
    r.parameters["seed"] = o.seed;
    const Variable uv[] = {Variable::u(), Variable::v()};
    std::vector<weyl::Substitution> elems;
    for (const auto& a : repr::random_su2(static_cast<std::size_t>(o.finite), o.seed)) {
      elems.push_back(weyl::Substitution::from_matrix(a, uv));
    }
    for (auto& rep : oplib::verify_finite_invariance(target, elems, "invariance[SU(2)]")) {
      out.push_back(std::move(rep));
    }
  }
  r.data["target"] = target.to_string();
  finish(r, std::move(out));
  return r;
}

Report verify_hermiticity(const std::string& set, int n) {
  Report r = make("verify hermiticity");
  r.parameters["set"] = set;
  r.parameters["n"] = n;
  NamedOperatorSet ops;
  if (set == "xyz") {
    ops = oplib::build_operators(OperatorFamily::xyz_angular);
  } else if (set == "su2") {
    ops = oplib::build_operators(OperatorFamily::su2_spin);
  } else if (set == "eq18") {
    ops = oplib::build_operators(OperatorFamily::lorentz, n);
  } else if (set == "eq19") {
    ops = oplib::build_operators(OperatorFamily::translations, n);
  } else if (set == "eq19-reconstructed") {
    ops = oplib::reconstructed_translations(n);
  } else if (set == "o1") {
    ops = oplib::build_operators(OperatorFamily::O1, n);
  } else if (set == "b1") {
    ops = oplib::build_operators(OperatorFamily::b1_laplacian);
  } else {
    throw UsageError("unknown --set " + set);
  }
  r.data["operators"] = operators_json(ops);
  finish(r, oplib::verify_hermiticity(ops));
  return r;
}

Matrix parse_eta_file(const std::string& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("eta file is not valid JSON: " + std::string(e.what()));
  }
  if (j.is_object() && j.contains("eta")) j = j["eta"];
  if (!j.is_array() || j.empty()) throw UsageError("eta must be a non-empty list of rows");
  Matrix m(j.size(), j.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != j.size()) throw UsageError("eta must be square");
    for (std::size_t c = 0; c < j.size(); ++c) {
      const auto& e = j[r][c];
      try {
        m(r, c) = e.is_string() ? Scalar::parse(e.get<std::string>())
                                : Scalar(e.get<long>());
      } catch (const std::exception& ex) {
        throw UsageError("bad eta entry: " + e.dump());
      }
    }
  }
  return m;
}

struct SpacetimeOptions {
  std::string eta_file;
  std::optional<std::uint64_t> random_eta;
  int n = 2;
  std::string reading = "slot_site_swapped";
  std::string translations = "printed";
};

Report verify_spacetime(const SpacetimeOptions& o) {
  Report r = make("verify spacetime");
  Matrix eta;
  if (!o.eta_file.empty()) {
    eta = parse_eta_file(o.eta_file);
    r.parameters["eta"] = "file";
  } else if (o.random_eta) {
    eta = oplib::random_eta(o.n, *o.random_eta);
    r.parameters["random_eta"] = *o.random_eta;
  } else {
    eta = oplib::default_eta();
    r.parameters["eta"] = "default";
  }
  const auto reading = oplib::parse_reading(o.reading);
  const auto tr = parse_translations(o.translations);
  r.parameters["n"] = static_cast<int>(eta.rows());
  r.parameters["reading"] = std::string(oplib::to_string(reading));
  r.parameters["translations"] = to_string(tr);

  oplib::SpacetimeMap st = oplib::build_spacetime_map(eta, reading);
  const NamedOperatorSet p = translations(static_cast<int>(eta.rows()), tr);
  r.data["eta"] = matrix_json(eta);
  r.data["Z"] = st.z.to_string();
  ordered_json xs = ordered_json::object();
  for (int mu = 0; mu < 4; ++mu) xs["x" + std::to_string(mu)] = st.x[mu].to_string();
  r.data["x"] = std::move(xs);
  finish(r, oplib::verify_spacetime_relations(p, st));
  return r;
}

Report verify_translation_flow(const std::string& x, int n, const std::string& translations_name) {
  Report r = make("verify translation-flow");
  auto parts = split(x);
  if (parts.size() != 4) throw UsageError("--x takes four comma-separated scalars");
  std::array<Scalar, 4> xs;
  for (int k = 0; k < 4; ++k) {
    try {
      xs[k] = Scalar::parse(parts[k]);
    } catch (const std::exception&) {
      throw UsageError("bad scalar in --x: " + parts[k]);
    }
  }
  const auto tr = parse_translations(translations_name);
  ordered_json xj = ordered_json::array();
  for (const auto& s : xs) xj.push_back(s.to_string());
  r.parameters["x"] = std::move(xj);
  r.parameters["n"] = n;
  r.parameters["translations"] = to_string(tr);
  oplib::FlowReport f = oplib::translation_flow_check(translations(n, tr), xs);
  r.data["series_order"] = f.series_order;
  finish(r, std::move(f.reports));
  return r;
}

// ---------------------------------------------------------------- repr

std::vector<int> parse_degrees(const std::vector<std::string>& raw) {
  std::vector<int> ds;
  for (const auto& chunk : raw) {
    for (const auto& s : split(chunk)) {
      try {
        std::size_t used = 0;
        int d = std::stoi(s, &used);
        if (used != s.size() || d < 0) throw std::invalid_argument(s);
        ds.push_back(d);
      } catch (const std::exception&) {
        throw UsageError("bad degree: " + s);
      }
    }
  }
  if (ds.empty()) throw UsageError("--degree is required");
  return ds;
}

std::string spin_of_degree(int d) {
  return d % 2 ? std::to_string(d) + "/2" : std::to_string(d / 2);
}

Report repr_table(const std::vector<std::string>& degree_args, const std::string& op_list,
                  bool normalized) {
  Report r = make("repr table");
  const std::vector<int> degrees = parse_degrees(degree_args);
  ordered_json dj = ordered_json::array();
  for (int d : degrees) dj.push_back(d);
  r.parameters["degrees"] = dj;
  r.parameters["ops"] = op_list;
  r.parameters["normalized"] = normalized;

  const repr::RepSpace space = repr::RepSpace::span(degrees);
  const NamedOperatorSet s = oplib::build_operators(OperatorFamily::su2_spin);

  ordered_json spaces = ordered_json::array();
  const repr::RepMatrix sz = repr::matrix_rep(s.at("Sz"), space);
  for (int d : degrees) {
    ordered_json e;
    e["degree"] = d;
    e["spin"] = spin_of_degree(d);
    e["basis"] = ordered_json::array();
    e["norms2"] = ordered_json::array();
    e["sz"] = ordered_json::array();
    for (std::size_t k = 0; k < space.dim(); ++k) {
      if (space.degree_of(k) != d) continue;
      e["basis"].push_back(weyl::Poly::monomial(Scalar(1), space.basis()[k]).to_string());
      e["norms2"].push_back(space.norms2()[k].to_string());
      e["sz"].push_back(sz.exact(k, k).to_string());
    }
    spaces.push_back(std::move(e));
  }
  r.data["spaces"] = std::move(spaces);

  repr::CasimirResult c = repr::casimir_spectrum(s, space);
  ordered_json blocks = ordered_json::array();
  for (const auto& b : c.blocks) {
    ordered_json bj;
    bj["eigenvalue"] = b.eigenvalue.to_string();
    bj["degrees"] = b.degrees;
    bj["dim"] = b.dim;
    blocks.push_back(std::move(bj));
  }
  r.data["casimir"] = std::move(blocks);

  ordered_json mats = ordered_json::object();
  for (const auto& label : split(op_list)) {
    if (label.empty()) continue;
    if (!s.contains(label)) throw UsageError("unknown operator " + label);
    repr::RepMatrix m = repr::matrix_rep(s.at(label), space, normalized);
    ordered_json mj;
    mj["exact"] = m.exactness == repr::Exactness::exact;
    mj["entries"] = m.exactness == repr::Exactness::exact ? matrix_json(m.exact)
                                                           : matrix_json(m.numeric);
    mats[label] = std::move(mj);
  }
  r.data["matrices"] = std::move(mats);

  // Casimir = s(s+1) I on each degree, as exact reports.
  std::vector<RelationReport> rel;
  Matrix expected(space.dim(), space.dim());
  for (std::size_t k = 0; k < space.dim(); ++k) {
    const int d = space.degree_of(k);
    expected(k, k) = Scalar(mpq_class(d * (d + 2), 4));
  }
  Matrix residual = c.matrix - expected;
  rel.push_back({"repr", "S^2 = s(s+1) I", expected.to_string(), c.matrix.to_string(),
                 residual.to_string(), residual.is_zero()});
  finish(r, std::move(rel));
  return r;
}

Report repr_homomorphism(int degree, int pairs, std::uint64_t seed, const std::string& action) {
  Report r = make("repr homomorphism");
  if (degree < 0) throw UsageError("--degree must be non-negative");
  if (pairs < 1) throw UsageError("--pairs must be positive");
  if (action != "group" && action != "substitution") {
    throw UsageError("--action must be group or substitution");
  }
  r.parameters["degree"] = degree;
  r.parameters["pairs"] = pairs;
  r.parameters["seed"] = seed;
  r.parameters["action"] = action;
  const repr::RepSpace space = repr::RepSpace::of_degree(degree);
  auto rep = [&](const Matrix& a) {
    return action == "group" ? repr::rep_of_group_element(a, space).exact
                             : repr::rep_of_substitution(a, space).exact;
  };
  const auto g = repr::random_su2(static_cast<std::size_t>(2 * pairs), seed);
  std::vector<RelationReport> rel;
  for (int k = 0; k < pairs; ++k) {
    const Matrix& a = g[2 * k];
    const Matrix& b = g[2 * k + 1];
    Matrix lhs = rep(b) * rep(a), rhs = rep(b * a);
    char id[48];
    std::snprintf(id, sizeof id, "rep(B)rep(A)=rep(BA) #%03d", k);
    Matrix res = lhs - rhs;
    rel.push_back({"homomorphism", id, rhs.to_string(), lhs.to_string(), res.to_string(),
                   res.is_zero()});
  }
  finish(r, std::move(rel));
  return r;
}

// ---------------------------------------------------------------- fock

Report fock_car(int modes, bool printed, const std::string& convention) {
  Report r = make("fock car");
  fock::LadderConvention conv;
  if (convention == "standard") {
    conv = fock::LadderConvention::standard;
  } else if (convention == "no_sign") {
    conv = fock::LadderConvention::no_sign;
  } else {
    throw UsageError("--convention must be standard or no_sign");
  }
  if (modes < 1 || modes > fock::kMaxCarModes) {
    throw UsageError("--modes must be in 1.." + std::to_string(fock::kMaxCarModes));
  }
  r.parameters["modes"] = modes;
  r.parameters["convention"] = convention;
  r.parameters["printed"] = printed;

  std::vector<RelationReport> rel = fock::verify_car(modes, conv);
  if (conv == fock::LadderConvention::standard) rel.push_back(fock::verify_number_operator(modes));
  auto variant = fock::verify_car_printed_variant(modes);
  std::size_t failing = 0;
  for (const auto& v : variant) failing += !v.pass;
  ordered_json pv;
  pv["relation"] = "a*_i a_j + a_i a*_j = delta_ij";
  pv["checked"] = variant.size();
  pv["failing"] = failing;
  pv["reports"] = variant;
  r.data["printed_variant"] = std::move(pv);
  if (printed) {
    rel.insert(rel.end(), variant.begin(), variant.end());
  } else {
    r.notes.push_back("printed index placement reported under data.printed_variant only");
  }
  finish(r, std::move(rel));
  return r;
}

fock::LabeledKet ket(std::initializer_list<std::pair<const char*, int>> fs) {
  fock::LabeledKet k;
  for (const auto& [l, s] : fs) k.factors.emplace_back(fock::OrbitalLabel::named(l), s);
  return k;
}

RelationReport ket_report(std::string relation, const fock::KetSum& expected,
                          const fock::KetSum& actual) {
  const bool ok = actual.same_vector(expected) ||
                  (actual.is_zero() && expected.is_zero());
  return {"antisym", std::move(relation), expected.to_string(), actual.to_string(),
          ok ? "0" : "differs", ok};
}

Report fock_antisym(const std::string& demo) {
  Report r = make("fock antisym");
  r.parameters["demo"] = demo;
  using fock::OrbitalLabel;
  std::vector<RelationReport> rel;
  const OrbitalLabel A = OrbitalLabel::named("A"), B = OrbitalLabel::named("B"),
                     C = OrbitalLabel::named("C");
  auto run_pair = [&] {
    fock::KetSum a = fock::antisymmetrize(ket({{"A", 1}, {"B", 2}}));
    r.data["pair"] = a.to_string();
    rel.push_back(ket_report("pair: exchange sets 1<->2 = -psi", a.scaled(-1), a.exchange_sets(1, 2)));
    rel.push_back(ket_report("pair: exchange labels A<->B = -psi", a.scaled(-1),
                             a.exchange_labels(A, B)));
  };
  auto run_triple = [&] {
    fock::KetSum a = fock::antisymmetrize(ket({{"A", 1}, {"B", 2}, {"C", 3}}));
    r.data["triple"] = a.to_string();
    for (auto [x, y] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
      rel.push_back(ket_report("triple: exchange sets " + std::to_string(x) + "<->" +
                                   std::to_string(y) + " = -psi",
                               a.scaled(-1), a.exchange_sets(x, y)));
    }
    rel.push_back(ket_report("triple: exchange labels A<->C = -psi", a.scaled(-1),
                             a.exchange_labels(A, C)));
  };
  auto run_repeated = [&] {
    fock::KetSum zero;
    rel.push_back(ket_report("repeated: A(|A>1|A>2) = 0", zero,
                             fock::antisymmetrize(ket({{"A", 1}, {"A", 2}}))));
    rel.push_back(ket_report("repeated: A(|A>1|B>2|A>3) = 0", zero,
                             fock::antisymmetrize(ket({{"A", 1}, {"B", 2}, {"A", 3}}))));
  };
  auto run_symmetric = [&] {
    fock::KetSum s = fock::symmetrize(ket({{"A", 1}, {"B", 2}}));
    r.data["symmetric"] = s.to_string();
    rel.push_back(ket_report("symmetric: exchange sets 1<->2 = +psi", s, s.exchange_sets(1, 2)));
  };
  if (demo == "pair") {
    run_pair();
  } else if (demo == "triple") {
    run_triple();
  } else if (demo == "repeated") {
    run_repeated();
  } else if (demo == "symmetric") {
    run_symmetric();
  } else if (demo == "all") {
    run_pair();
    run_triple();
    run_repeated();
    run_symmetric();
  } else {
    throw UsageError("unknown demo " + demo + " (pair, triple, repeated, symmetric, all)");
  }
  finish(r, std::move(rel));
  return r;
}

// ---------------------------------------------------------------- sim, collapse

Report sim_branch(const std::string& path) {
  Report r = make("sim branch");
  branching::ScenarioFile f;
  try {
    f = branching::parse_scenario_file(read_file(path));
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
  r.parameters = f.echo;
  branching::ScenarioResult res = branching::run_scenario(f.kind, f.params, f.rules);
  r.data["branch_count"] = res.state.branches.size();
  r.data["ledger"] = branching::ledger_to_json(res.state);
  finish(r, std::move(res.checks));
  return r;
}

struct CollapseOptions {
  std::string scheme = "nonlinear_ruin";
  std::string amps;
  int runs = 1000;
  std::uint64_t seed = 0;
  double dt = 1e-2;
  int steps = 10'000;
};

Report collapse_run(const CollapseOptions& o) {
  Report r = make("collapse run");
  collapse::CollapseConfig cfg;
  cfg.scheme = collapse::parse_scheme(o.scheme);
  std::vector<double> probs;
  for (const auto& s : split(o.amps)) {
    try {
      std::size_t used = 0;
      double p = std::stod(s, &used);
      if (used != s.size() || p < 0) throw std::invalid_argument(s);
      probs.push_back(p);
    } catch (const std::exception&) {
      throw UsageError("bad probability in --amps: " + s);
    }
  }
  for (double p : probs) cfg.a.emplace_back(std::sqrt(p), 0.0);
  cfg.runs = o.runs;
  cfg.seed = o.seed;
  cfg.dt = o.dt;
  cfg.steps = o.steps;
  cfg.validate();

  ordered_json config;
  config["scheme"] = collapse::to_string(cfg.scheme);
  config["probabilities"] = probs;
  config["runs"] = cfg.runs;
  config["seed"] = cfg.seed;
  config["dt"] = cfg.dt;
  config["steps"] = cfg.steps;
  r.parameters = config;

  collapse::CollapseResult res = collapse::run_scheme(cfg);
  collapse::BornTest b = collapse::born_test(res, cfg.a);
  char hash[24];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(res.ensemble_hash));

  r.data["config"] = config;
  r.data["frequencies"] = b.frequency;
  r.data["sigma"] = b.sigma;
  r.data["chi2"] = b.chi2;
  r.data["dof"] = b.dof;
  r.data["pass"] = b.pass;
  r.data["nonconverged_count"] = b.nonconverged;
  r.data["trace_hash"] = hash;

  std::vector<RelationReport> rel;
  for (std::size_t k = 0; k < b.target.size(); ++k) {
    rel.push_back({"born", "frequency[" + std::to_string(k) + "] within 3 sigma",
                   fmt(b.target[k]), fmt(b.frequency[k]), fmt(b.frequency[k] - b.target[k]),
                   b.within_3sigma[k]});
  }
  rel.push_back({"born", "nonconverged runs", "0", std::to_string(b.nonconverged),
                 std::to_string(b.nonconverged), b.nonconverged == 0});
  if (cfg.scheme == collapse::Scheme::nonlinear_ruin) {
    const auto& m = res.martingale;
    ordered_json mj;
    mj["mean"] = m.mean;
    mj["std_error"] = m.std_error;
    mj["samples"] = m.samples;
    mj["max_norm_error"] = m.max_norm_error;
    mj["pass"] = m.pass;
    r.data["martingale"] = std::move(mj);
    double worst = 0;
    for (std::size_t k = 0; k < m.mean.size(); ++k) {
      if (m.std_error[k] > 0) worst = std::max(worst, std::abs(m.mean[k]) / m.std_error[k]);
    }
    rel.push_back({"martingale", "mean weight drift within 3 standard errors", "0",
                   fmt(worst) + " standard errors", fmt(worst), m.pass});
  } else {
    r.notes.push_back("linear scheme: X traces never read the amplitudes");
  }
  finish(r, std::move(rel));
  return r;
}

// ---------------------------------------------------------------- plumbing

struct Output {
  std::string out_path;
  std::string format = "text";
};

void add_output(CLI::App* sub, Output& o) {
  sub->add_option("--out", o.out_path, "Write the JSON report to this file");
  sub->add_option("--format", o.format, "Standard output format")
      ->check(CLI::IsMember({"json", "text"}));
}

std::string slug(const std::string& command) {
  std::string s = command;
  for (auto& c : s) {
    if (c == ' ') c = '-';
  }
  return s + ".json";
}

void write_report(const Report& r, const Output& o) {
  std::filesystem::path path;
  if (!o.out_path.empty()) {
    path = o.out_path;
  } else if (const char* dir = std::getenv(kReportDirEnv); dir && *dir) {
    path = std::filesystem::path(dir) / slug(r.command);
  } else {
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << oplib::render_json(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification suites and simulators for underlying-variable models"};
  app.name("uvar");
  app.require_subcommand(1);
  app.set_version_flag("--version", "uvar 0.1.0");

  Output output;
  std::function<Report()> action;

  // verify
  auto* verify = app.add_subcommand("verify", "Exact relation suites");
  verify->require_subcommand(1);

  LieOptions lie;
  auto* v_lie = verify->add_subcommand("lie", "Commutator tables");
  v_lie->add_option("--set", lie.set, "xyz, su2, eq18, eq19, eq19-mutated or poincare");
  v_lie->add_option("--n", lie.n, "Sites per slot")->check(CLI::Range(1, 6));
  v_lie->add_option("--reading", lie.reading, "printed or k2_conjugate_flipped");
  v_lie->add_option("--translations", lie.translations, "printed or reconstructed");
  add_output(v_lie, output);
  v_lie->callback([&] { action = [&] { return verify_lie(lie); }; });

  InvarianceOptions inv;
  auto* v_inv = verify->add_subcommand("invariance", "[G, O] = 0 for generator sets");
  v_inv->add_option("--target", inv.target, "o1 or b1");
  v_inv->add_option("--op", inv.op, "Target operator in the text format");
  v_inv->add_option("--groups", inv.groups,
                    "Comma list: lorentz, translations, translations-reconstructed, su-n, su2, "
                    "xyz");
  v_inv->add_option("--n", inv.n, "Sites per slot")->check(CLI::Range(1, 6));
  v_inv->add_option("--finite", inv.finite, "Also check K exact SU(2) substitutions on u, v")
      ->check(CLI::NonNegativeNumber);
  v_inv->add_option("--seed", inv.seed, "Seed for --finite");
  add_output(v_inv, output);
  v_inv->callback([&] { action = [&] { return verify_invariance(inv); }; });

  std::string herm_set = "su2";
  int herm_n = 1;
  auto* v_herm = verify->add_subcommand("hermiticity", "X^dagger = X for every operator");
  v_herm->add_option("--set", herm_set,
                     "xyz, su2, eq18, eq19, eq19-reconstructed, o1 or b1");
  v_herm->add_option("--n", herm_n, "Sites per slot")->check(CLI::Range(1, 6));
  add_output(v_herm, output);
  v_herm->callback([&] { action = [&] { return verify_hermiticity(herm_set, herm_n); }; });

  SpacetimeOptions st;
  std::uint64_t random_eta = 0;
  auto* v_st = verify->add_subcommand("spacetime", "[P_mu, x_nu] relations");
  auto* eta_opt = v_st->add_option("--eta", st.eta_file, "JSON file with an antisymmetric eta");
  auto* reta_opt = v_st->add_option("--random-eta", random_eta, "Seed for a random eta");
  eta_opt->excludes(reta_opt);
  v_st->add_option("--n", st.n, "Size of a random eta")->check(CLI::Range(2, 6));
  v_st->add_option("--reading", st.reading, "slot_site_swapped or literal");
  v_st->add_option("--translations", st.translations, "printed or reconstructed");
  add_output(v_st, output);
  v_st->callback([&] {
    if (reta_opt->count()) st.random_eta = random_eta;
    action = [&] { return verify_spacetime(st); };
  });

  std::string flow_x = "1,2,-1,1/2";
  int flow_n = 1;
  std::string flow_tr = "printed";
  auto* v_flow = verify->add_subcommand("translation-flow", "exp(iPx) acting on the variables");
  v_flow->add_option("--x", flow_x, "Four comma-separated exact scalars");
  v_flow->add_option("--n", flow_n, "Sites per slot")->check(CLI::Range(1, 6));
  v_flow->add_option("--translations", flow_tr, "printed or reconstructed");
  add_output(v_flow, output);
  v_flow->callback([&] {
    action = [&] { return verify_translation_flow(flow_x, flow_n, flow_tr); };
  });

  // repr
  auto* rep = app.add_subcommand("repr", "SU(2) representations on polynomials in u, v");
  rep->require_subcommand(1);
  std::vector<std::string> table_degrees;
  std::string table_ops = "Sx,Sy,Sz";
  bool table_normalized = false;
  auto* r_table = rep->add_subcommand("table", "Basis, norms, spectra and matrices");
  r_table->add_option("--degree", table_degrees, "Degree(s); several give a direct sum")
      ->required();
  r_table->add_option("--ops", table_ops, "Operators to print as matrices");
  r_table->add_flag("--normalized", table_normalized, "Use the orthonormal basis");
  add_output(r_table, output);
  r_table->callback([&] {
    action = [&] { return repr_table(table_degrees, table_ops, table_normalized); };
  });

  int hom_degree = 1, hom_pairs = 10;
  std::uint64_t hom_seed = 1;
  std::string hom_action = "group";
  auto* r_hom = rep->add_subcommand("homomorphism", "rep(B) rep(A) = rep(BA) on random pairs");
  r_hom->add_option("--degree", hom_degree, "Polynomial degree")->required();
  r_hom->add_option("--pairs", hom_pairs, "Number of random pairs");
  r_hom->add_option("--seed", hom_seed, "Sampler seed");
  r_hom->add_option("--action", hom_action, "group or substitution");
  add_output(r_hom, output);
  r_hom->callback([&] {
    action = [&] { return repr_homomorphism(hom_degree, hom_pairs, hom_seed, hom_action); };
  });

  // fock
  auto* fk = app.add_subcommand("fock", "Antisymmetrization and ladder operators");
  fk->require_subcommand(1);
  int car_modes = 3;
  bool car_printed = false;
  std::string car_convention = "standard";
  auto* f_car = fk->add_subcommand("car", "Canonical anticommutation relations");
  f_car->add_option("--modes", car_modes, "Number of modes");
  f_car->add_flag("--printed", car_printed, "Count the printed index placement in the verdict");
  f_car->add_option("--convention", car_convention, "standard or no_sign");
  add_output(f_car, output);
  f_car->callback([&] {
    action = [&] { return fock_car(car_modes, car_printed, car_convention); };
  });

  std::string demo;
  auto* f_anti = fk->add_subcommand("antisym", "Exchange signs of labeled kets");
  f_anti->add_option("demo", demo, "pair, triple, repeated, symmetric or all")->required();
  add_output(f_anti, output);
  f_anti->callback([&] { action = [&] { return fock_antisym(demo); }; });

  // sim
  auto* sim = app.add_subcommand("sim", "Branch simulators");
  sim->require_subcommand(1);
  std::string scenario_path;
  auto* s_branch = sim->add_subcommand("branch", "Run a scenario file");
  s_branch->add_option("file", scenario_path, "Scenario JSON")->required();
  add_output(s_branch, output);
  s_branch->callback([&] { action = [&] { return sim_branch(scenario_path); }; });

  // collapse
  auto* col = app.add_subcommand("collapse", "Collapse scheme experiments");
  col->require_subcommand(1);
  CollapseOptions co;
  auto* c_run = col->add_subcommand("run", "Run a scheme and test the Born frequencies");
  c_run->add_option("--scheme", co.scheme, "linear_drift, linear_noise or nonlinear_ruin");
  c_run->add_option("--amps", co.amps, "Comma-separated |a_k|^2")->required();
  c_run->add_option("--runs", co.runs, "Number of runs");
  c_run->add_option("--seed", co.seed, "Master seed");
  c_run->add_option("--dt", co.dt, "Time step");
  c_run->add_option("--steps", co.steps, "Steps before a run counts as non-converged");
  add_output(c_run, output);
  c_run->callback([&] { action = [&] { return collapse_run(co); }; });

  // report
  std::string report_path;
  auto* rp = app.add_subcommand("report", "Re-render a saved report");
  rp->add_option("file", report_path, "Report JSON")->required();
  rp->add_option("--format", output.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  bool rendering_only = false;
  rp->callback([&] {
    rendering_only = true;
    action = [&] { return oplib::parse_report(read_file(report_path)); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    Report r = action();
    if (!rendering_only) write_report(r, output);
    out << (output.format == "json" ? oplib::render_json(r) : oplib::render_text(r));
    return r.pass ? kExitPass : kExitRelationFailed;
  } catch (const UsageError& e) {
    err << "uvar: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "uvar: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "uvar: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "uvar: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace uvar::cli
