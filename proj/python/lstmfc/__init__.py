# Copyright 2026 The LSTM-FC-VQE Authors.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Meta-learned parameter initialization for UCCSD VQE."""

from ._lstmfc import (
    NOT_CONVERGED,
    Circuit,
    LstmfcError,
    MetaModel,
    Molecule,
    RunTrace,
    energy,
    gradient,
    ground_state_energy,
    hardware_efficient,
    load_checkpoint,
    load_directory,
    load_molecule,
    load_series,
    meta_train,
    reference_energy,
    run_vqe,
    uccsd,
)

__all__ = [
    "NOT_CONVERGED",
    "Circuit",
    "LstmfcError",
    "MetaModel",
    "Molecule",
    "RunTrace",
    "energy",
    "gradient",
    "ground_state_energy",
    "hardware_efficient",
    "load_checkpoint",
    "load_directory",
    "load_molecule",
    "load_series",
    "meta_train",
    "reference_energy",
    "run_vqe",
    "uccsd",
]
