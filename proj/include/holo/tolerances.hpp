// Copyright 2026 The holonomic-gates Authors
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

#pragma once

namespace holo {

// Every numerical threshold used by the library lives here. Functions that
// validate or classify take a Tolerances argument defaulting to these values,
// so a caller (e.g. the acceptance suite) can tighten them in one place.
struct Tolerances {
  // max |A - A^dag| entrywise for a matrix to count as Hermitian.
  double hermitian = 1e-13;
  // ||U^dag U - 1||_max for a matrix to count as unitary.
  double unitary = 1e-10;
  // Relative singular-value threshold for the operator Schmidt rank.
  double schmidt_rank = 1e-8;
  // |D - sqrt(1/2)| for the two leading Schmidt values of a CNOT-class gate.
  double cnot_class = 1e-6;
  // Residual of Omega^2 + Delta (Delta - omega) (in units of omega^2) accepted
  // as satisfying the one-qubit vanishing-phase condition.
  double one_qubit_condition = 1e-10;
  // Same for D = omega/2 and Omega^2 + J^2 = (omega/2)^2.
  double two_qubit_condition = 1e-12;
  // Waveform durations must sum to the period within this.
  double waveform_period = 1e-12;
  // Normalization of initial states.
  double state_norm = 1e-12;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace holo
