# Copyright 2026 The qansible developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Simulator and auditor for the singlet-pair ansible protocol.

The heavy lifting lives in the compiled extension ``qansible._core``: qubit
state vectors, the CNOT amplification cascade, exact enumeration of Alice's
outcome statistics, and the channel metrics (total variation, trace
distance, mutual information) that test whether the protocol signals.
"""

from ._core import (
    BellKind,
    ChannelReport,
    Decision,
    DecisionRule,
    DensityMatrix,
    EquationAuditReport,
    EquationCheck,
    Gate,
    MeasurementAxis,
    MeasurementBranch,
    ModelKind,
    MonteCarloResult,
    NoSignalingReport,
    OutcomeDistribution,
    ProtocolConfig,
    PureState,
    RunRecord,
    Sign,
    __version__,
    alice_amplify,
    alice_decide,
    apply_gate,
    audit_equations,
    axis_eigenstate,
    basis_state,
    bell_state,
    bob_encode_branches,
    channel_mutual_information,
    cnot,
    decision_distribution,
    enumerate_alice_distribution,
    expectation,
    fidelity,
    ghz_state,
    identity_gate,
    known_state_cloner,
    measure_branches,
    monte_carlo_distribution,
    no_signaling_check,
    paper_gap_report,
    purity,
    reduced_state,
    run_single_trial,
    tensor,
    to_density,
    total_variation,
    trace_distance,
    x_eigenstate,
)

__all__ = [
    "BellKind",
    "ChannelReport",
    "Decision",
    "DecisionRule",
    "DensityMatrix",
    "EquationAuditReport",
    "EquationCheck",
    "Gate",
    "MeasurementAxis",
    "MeasurementBranch",
    "ModelKind",
    "MonteCarloResult",
    "NoSignalingReport",
    "OutcomeDistribution",
    "ProtocolConfig",
    "PureState",
    "RunRecord",
    "Sign",
    "__version__",
    "alice_amplify",
    "alice_decide",
    "apply_gate",
    "audit_equations",
    "axis_eigenstate",
    "basis_state",
    "bell_state",
    "bob_encode_branches",
    "channel_mutual_information",
    "cnot",
    "decision_distribution",
    "enumerate_alice_distribution",
    "expectation",
    "fidelity",
    "ghz_state",
    "identity_gate",
    "known_state_cloner",
    "measure_branches",
    "monte_carlo_distribution",
    "no_signaling_check",
    "paper_gap_report",
    "purity",
    "reduced_state",
    "run_single_trial",
    "tensor",
    "to_density",
    "total_variation",
    "trace_distance",
    "x_eigenstate",
]
