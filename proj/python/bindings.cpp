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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "uvar/branching/lemma.hpp"
#include "uvar/branching/scenarios.hpp"
#include "uvar/cli/cli.hpp"
#include "uvar/collapse/collapse.hpp"
#include "uvar/errors.hpp"
#include "uvar/fock/antisym.hpp"
#include "uvar/fock/ladder.hpp"
#include "uvar/oplib/operators.hpp"
#include "uvar/oplib/relations.hpp"
#include "uvar/repr/repr.hpp"

namespace py = pybind11;
using namespace uvar;
using weyl::DiffOp;

namespace {

py::dict relation_dict(const oplib::RelationReport& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["relation"] = r.relation;
  d["expected"] = r.expected;
  d["actual"] = r.actual;
  d["residual"] = r.residual;
  d["pass"] = r.pass;
  return d;
}

py::list relation_list(const std::vector<oplib::RelationReport>& rs) {
  py::list out;
  for (const auto& r : rs) out.append(relation_dict(r));
  return out;
}

std::map<std::string, std::string> operator_texts(const oplib::NamedOperatorSet& s) {
  std::map<std::string, std::string> out;
  for (const auto& [label, op] : s.ops) out[label] = op.to_string();
  return out;
}

oplib::NamedOperatorSet set_from_texts(const std::map<std::string, std::string>& ops) {
  oplib::NamedOperatorSet s;
  s.name = "python";
  for (const auto& [label, text] : ops) s.ops[label] = DiffOp::parse(text);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Weyl-algebra verification suites and branch simulators";

  py::register_exception<Error>(m, "UvarError", PyExc_ValueError);

  // Operators travel as strings in the operator text format.
  m.def("canonical", [](const std::string& text) { return DiffOp::parse(text).to_string(); },
        py::arg("text"), "Parse an operator and return its canonical text.");
  m.def("commutator",
        [](const std::string& a, const std::string& b) {
          return weyl::commutator(DiffOp::parse(a), DiffOp::parse(b)).to_string();
        },
        py::arg("a"), py::arg("b"));
  m.def("adjoint", [](const std::string& a) { return weyl::adjoint(DiffOp::parse(a)).to_string(); },
        py::arg("op"));
  m.def("apply",
        [](const std::string& op, const std::string& f) {
          return weyl::apply(DiffOp::parse(op), weyl::Poly(DiffOp::parse(f))).to_string();
        },
        py::arg("op"), py::arg("f"));

  m.def("build_operators",
        [](const std::string& family, int n) {
          return operator_texts(oplib::build_operators(oplib::parse_family(family), n,
                                                       family == "su_n"
                                                           ? std::span<const weyl::Matrix>(oplib::pauli_matrices())
                                                           : std::span<const weyl::Matrix>{}));
        },
        py::arg("family"), py::arg("n") = 1,
        "Labels to operator text. su_n uses the Pauli matrices.");
  m.def("verify_angular_momentum",
        [](const std::map<std::string, std::string>& ops, const std::string& prefix) {
          return relation_list(oplib::verify_commutator_table(
              set_from_texts(ops), oplib::angular_momentum_table(prefix)));
        },
        py::arg("ops"), py::arg("prefix"),
        "[A_x, A_y] = i A_z and cyclic for labels prefix + x, y, z.");
  m.def("verify_invariance",
        [](const std::string& target, const std::map<std::string, std::string>& gens) {
          return relation_list(oplib::verify_invariance(DiffOp::parse(target), set_from_texts(gens)));
        },
        py::arg("target"), py::arg("generators"));
  m.def("verify_hermiticity",
        [](const std::map<std::string, std::string>& ops) {
          return relation_list(oplib::verify_hermiticity(set_from_texts(ops)));
        },
        py::arg("ops"));

  m.def("matrix_rep",
        [](const std::string& op, std::vector<int> degrees, bool normalized) {
          return repr::matrix_rep(DiffOp::parse(op), repr::RepSpace::span(degrees), normalized).numeric;
        },
        py::arg("op"), py::arg("degrees"), py::arg("normalized") = false,
        "Matrix of an operator on the span of the given degrees, as complex floats.");
  m.def("casimir_blocks",
        [](std::vector<int> degrees) {
          auto c = repr::casimir_spectrum(oplib::build_operators(oplib::OperatorFamily::su2_spin),
                                          repr::RepSpace::span(degrees));
          py::list out;
          for (const auto& b : c.blocks) {
            py::dict d;
            d["eigenvalue"] = b.eigenvalue.to_string();
            d["degrees"] = b.degrees;
            d["dim"] = b.dim;
            out.append(d);
          }
          return out;
        },
        py::arg("degrees"));

  m.def("antisymmetrize",
        [](const std::vector<std::string>& labels, bool symmetric) {
          fock::LabeledKet k;
          int s = 1;
          for (const auto& l : labels) k.factors.emplace_back(fock::OrbitalLabel::named(l), s++);
          return (symmetric ? fock::symmetrize(k) : fock::antisymmetrize(k)).to_string();
        },
        py::arg("labels"), py::arg("symmetric") = false,
        "Label i goes to variable set i + 1.");
  m.def("verify_car", [](int modes) { return relation_list(fock::verify_car(modes)); },
        py::arg("modes"));

  m.def("run_scenario",
        [](const std::string& json_text) {
          auto f = branching::parse_scenario_file(json_text);
          auto r = branching::run_scenario(f.kind, f.params, f.rules);
          py::dict d;
          d["pass"] = r.pass();
          d["checks"] = relation_list(r.checks);
          d["ledger"] = branching::ledger_to_json(r.state).dump();
          d["branch_count"] = r.state.branches.size();
          return d;
        },
        py::arg("scenario_json"), "Run a scenario file given as text. The ledger is JSON text.");
  m.def("eigen_branch_check",
        [](const Eigen::MatrixXcd& mat, const Eigen::VectorXcd& x, const Eigen::VectorXcd& y,
           std::complex<double> e, const std::vector<std::pair<double, double>>& phases) {
          auto r = branching::eigen_branch_check(mat, x, y, e, phases);
          py::dict d;
          d["hypothesis"] = r.hypothesis;
          d["conclusion"] = r.conclusion;
          d["hypothesis_residual"] = r.hypothesis_residual;
          d["x_residual"] = r.x_residual;
          d["y_residual"] = r.y_residual;
          return d;
        },
        py::arg("m"), py::arg("x"), py::arg("y"), py::arg("e"), py::arg("phases"));

  m.def("run_collapse",
        [](const std::string& scheme, const std::vector<double>& probabilities, int runs,
           std::uint64_t seed, double dt, int steps) {
          collapse::CollapseConfig c;
          c.scheme = collapse::parse_scheme(scheme);
          for (double p : probabilities) c.a.emplace_back(std::sqrt(p), 0.0);
          c.runs = runs;
          c.seed = seed;
          c.dt = dt;
          c.steps = steps;
          auto r = collapse::run_scheme(c);
          auto b = collapse::born_test(r, c.a);
          py::dict d;
          d["winner_counts"] = r.winner_counts;
          d["frequencies"] = b.frequency;
          d["sigma"] = b.sigma;
          d["chi2"] = b.chi2;
          d["nonconverged"] = r.nonconverged;
          d["ensemble_hash"] = r.ensemble_hash;
          d["pass"] = b.pass;
          return d;
        },
        py::arg("scheme"), py::arg("probabilities"), py::arg("runs") = 1000, py::arg("seed") = 0,
        py::arg("dt") = 1e-2, py::arg("steps") = 10'000,
        "Probabilities are |a_k|^2 and must sum to 1.");

  m.def("cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run one uvar command line in-process: (exit code, stdout, stderr).");
}
