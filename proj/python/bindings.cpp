// Copyright 2026 The qansible developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

#include "qansible/analysis.hpp"
#include "qansible/protocol.hpp"
#include "qansible/quantum.hpp"

namespace py = pybind11;

using namespace qansible;

namespace {

py::tuple weighted_outcome_tuple(const WeightedOutcome& entry) {
  return py::make_tuple(to_double(entry.statistic.mean_sx),
                        to_double(entry.statistic.mean_sz), entry.probability);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Simulator and auditor for the singlet-pair ansible protocol: state "
      "construction, the CNOT amplification cascade, exact outcome "
      "enumeration and the channel metrics that test the signalling claim.";
  m.attr("__version__") = QANSIBLE_VERSION;

  py::enum_<Sign>(m, "Sign")
      .value("PLUS", Sign::Plus)
      .value("MINUS", Sign::Minus);

  py::enum_<BellKind>(m, "BellKind")
      .value("PSI_MINUS", BellKind::PsiMinus)
      .value("PSI_PLUS", BellKind::PsiPlus)
      .value("PHI_PLUS", BellKind::PhiPlus)
      .value("PHI_MINUS", BellKind::PhiMinus);

  py::enum_<Decision>(m, "Decision")
      .value("ZERO", Decision::Zero)
      .value("ONE", Decision::One)
      .value("INDETERMINATE", Decision::Indeterminate);

  py::enum_<ModelKind>(m, "ModelKind")
      .value("TRUE_DYNAMICS", ModelKind::TrueDynamics)
      .value("PAPER_INDEPENDENT_MIXTURE", ModelKind::PaperIndependentMixture);

  py::class_<PureState>(m, "PureState",
                        "Normalised amplitude vector over n qubits.")
      .def(py::init<int, lin::CVector>(), py::arg("n_qubits"),
           py::arg("amplitudes"))
      .def_property_readonly("n_qubits", &PureState::n_qubits)
      .def_property_readonly("dim", &PureState::dim)
      .def_property_readonly("amplitudes",
                             [](const PureState& s) { return s.amplitudes(); });

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<int, lin::CMatrix>(), py::arg("n_qubits"), py::arg("matrix"))
      .def_property_readonly("n_qubits", &DensityMatrix::n_qubits)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly("matrix",
                             [](const DensityMatrix& r) { return r.matrix(); });

  py::class_<Gate>(m, "Gate")
      .def(py::init<int, lin::CMatrix>(), py::arg("arity"), py::arg("matrix"))
      .def_property_readonly("arity", &Gate::arity)
      .def_property_readonly("matrix", [](const Gate& g) { return g.matrix(); });

  py::class_<MeasurementAxis>(m, "MeasurementAxis")
      .def(py::init<const Eigen::Vector3d&>(), py::arg("direction"))
      .def_readonly("direction", &MeasurementAxis::direction)
      .def_static("x", &MeasurementAxis::x)
      .def_static("y", &MeasurementAxis::y)
      .def_static("z", &MeasurementAxis::z);

  py::class_<MeasurementBranch>(m, "MeasurementBranch")
      .def_readonly("outcome", &MeasurementBranch::outcome)
      .def_readonly("probability", &MeasurementBranch::probability)
      .def_readonly("post_state", &MeasurementBranch::post_state);

  m.def("basis_state", &basis_state, py::arg("bits"));
  m.def("x_eigenstate", &x_eigenstate, py::arg("sign"));
  m.def("axis_eigenstate", &axis_eigenstate, py::arg("axis"), py::arg("sign"));
  m.def("bell_state", &bell_state, py::arg("kind"));
  m.def("ghz_state", &ghz_state, py::arg("n_qubits"));
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def("cnot", &cnot);
  m.def("identity_gate", &identity_gate, py::arg("arity"));
  m.def("known_state_cloner", &known_state_cloner, py::arg("psi"), py::arg("blank"));
  m.def("apply_gate", &apply_gate, py::arg("state"), py::arg("gate"),
        py::arg("targets"));
  m.def("to_density", &to_density, py::arg("state"));
  m.def("reduced_state", &reduced_state, py::arg("rho"), py::arg("keep"));
  m.def("purity", &purity, py::arg("rho"));
  m.def(
      "expectation",
      [](const DensityMatrix& rho, const MeasurementAxis& axis, int qubit) {
        return expectation(rho, SpinObservable{axis}, qubit);
      },
      py::arg("rho"), py::arg("axis"), py::arg("qubit"),
      "Expectation of the spin projection onto `axis` for one qubit.");
  m.def("measure_branches", &measure_branches, py::arg("state"), py::arg("axis"),
        py::arg("qubit"));
  m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));

  py::class_<ProtocolConfig>(m, "ProtocolConfig")
      .def(py::init([](int n_total, int k_x, int k_z, int bob_bit,
                       std::uint64_t seed) {
             ProtocolConfig config{n_total, k_x, k_z, bob_bit, seed};
             config.validate();
             return config;
           }),
           py::arg("n_total"), py::arg("k_x"), py::arg("k_z"), py::arg("bob_bit"),
           py::arg("seed") = 0)
      .def_readwrite("n_total", &ProtocolConfig::n_total)
      .def_readwrite("k_x", &ProtocolConfig::k_x)
      .def_readwrite("k_z", &ProtocolConfig::k_z)
      .def_readwrite("bob_bit", &ProtocolConfig::bob_bit)
      .def_readwrite("seed", &ProtocolConfig::seed);

  py::class_<DecisionRule>(m, "DecisionRule")
      .def(py::init<double>(), py::arg("threshold") = 0.25)
      .def_readonly("threshold", &DecisionRule::threshold);

  py::class_<RunRecord>(m, "RunRecord")
      .def_readonly("bob_bit", &RunRecord::bob_bit)
      .def_property_readonly(
          "bob_axis", [](const RunRecord& r) { return r.bob_axis.direction; })
      .def_readonly("bob_outcome", &RunRecord::bob_outcome)
      .def_readonly("alice_x_outcomes", &RunRecord::alice_x_outcomes)
      .def_readonly("alice_z_outcomes", &RunRecord::alice_z_outcomes)
      .def_readonly("mean_sx", &RunRecord::mean_sx)
      .def_readonly("mean_sz", &RunRecord::mean_sz)
      .def_readonly("decoded", &RunRecord::decoded);

  py::class_<EquationCheck>(m, "EquationCheck")
      .def_readonly("id", &EquationCheck::id)
      .def_readonly("deviation", &EquationCheck::deviation)
      .def_readonly("pass_", &EquationCheck::pass);

  py::class_<EquationAuditReport>(m, "EquationAuditReport")
      .def_readonly("checks", &EquationAuditReport::checks)
      .def("all_pass", &EquationAuditReport::all_pass);

  m.def(
      "bob_encode_branches",
      [](int bob_bit) {
        std::vector<std::pair<MeasurementBranch, PureState>> out;
        for (auto& branch : bob_encode_branches(bob_bit)) {
          out.emplace_back(std::move(branch.bob), std::move(branch.alice_state));
        }
        return out;
      },
      py::arg("bob_bit"),
      "Both branches of Bob's measurement with Alice's collapsed qubit.");
  m.def("alice_amplify", &alice_amplify, py::arg("initial"), py::arg("n_total"),
        py::arg("budget") = kDefaultQubitBudget);
  m.def("alice_decide", &alice_decide, py::arg("mean_sx"), py::arg("mean_sz"),
        py::arg("rule"));
  m.def("run_single_trial", &run_single_trial, py::arg("config"),
        py::arg("rule") = DecisionRule{});
  m.def("audit_equations", py::overload_cast<>(&audit_equations));

  py::class_<OutcomeDistribution>(m, "OutcomeDistribution")
      .def_property_readonly(
          "entries",
          [](const OutcomeDistribution& dist) {
            py::list rows;
            for (const auto& entry : dist.entries) {
              rows.append(weighted_outcome_tuple(entry));
            }
            return rows;
          },
          "List of (mean_sx, mean_sz, prob) tuples.")
      .def("total_probability", &OutcomeDistribution::total_probability);

  py::class_<ChannelReport>(m, "ChannelReport")
      .def_readonly("tvd_true", &ChannelReport::tvd_true)
      .def_readonly("tvd_paper_gap", &ChannelReport::tvd_paper_gap)
      .def_readonly("mutual_information_true",
                    &ChannelReport::mutual_information_true)
      .def_readonly("mutual_information_paper_model",
                    &ChannelReport::mutual_information_paper_model)
      .def_readonly("trace_distance_states", &ChannelReport::trace_distance_states);

  py::class_<NoSignalingReport>(m, "NoSignalingReport")
      .def_readonly("tvd_true", &NoSignalingReport::tvd_true)
      .def_readonly("alice_reduced_deviation_z",
                    &NoSignalingReport::alice_reduced_deviation_z)
      .def_readonly("alice_reduced_deviation_x",
                    &NoSignalingReport::alice_reduced_deviation_x)
      .def_readonly("trace_distance_reduced",
                    &NoSignalingReport::trace_distance_reduced);

  py::class_<MonteCarloResult>(m, "MonteCarloResult")
      .def_readonly("distribution", &MonteCarloResult::distribution)
      .def_readonly("chi_square", &MonteCarloResult::chi_square)
      .def_readonly("degrees_of_freedom", &MonteCarloResult::degrees_of_freedom)
      .def_readonly("p_value", &MonteCarloResult::p_value)
      .def_readonly("trials", &MonteCarloResult::trials);

  m.def("enumerate_alice_distribution", &enumerate_alice_distribution,
        py::arg("bob_bit"), py::arg("n_total"), py::arg("k_x"), py::arg("k_z"),
        py::arg("model"), py::arg("budget") = kDefaultQubitBudget);
  m.def("total_variation", &total_variation, py::arg("p"), py::arg("q"));
  m.def("trace_distance", &trace_distance, py::arg("a"), py::arg("b"));
  m.def("no_signaling_check", &no_signaling_check, py::arg("n_total"),
        py::arg("k_x"), py::arg("k_z"));
  m.def("decision_distribution", &decision_distribution, py::arg("dist"),
        py::arg("rule"));
  m.def("channel_mutual_information", &channel_mutual_information,
        py::arg("given_zero"), py::arg("given_one"));
  m.def("monte_carlo_distribution", &monte_carlo_distribution, py::arg("config"),
        py::arg("trials"));
  m.def("paper_gap_report", &paper_gap_report, py::arg("n_total"), py::arg("k_x"),
        py::arg("k_z"), py::arg("rule") = DecisionRule{});
}
