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

#include <functional>
#include <utility>
#include <vector>

#include "holo/linalg.hpp"
#include "holo/model.hpp"

namespace holo {

enum class Stepper {
  // exp(-i H(t_mid) dt); second order.
  Midpoint,
  // Commutator-free Magnus with the two Gauss-Legendre nodes:
  // exp(-i dt (a2 H1 + a1 H2)) exp(-i dt (a1 H1 + a2 H2)),
  // a1,2 = 1/4 +- sqrt(3)/6; fourth order.
  Magnus4,
};

inline constexpr int kDefaultSteps = 4096;

struct PropagationOptions {
  int steps = kDefaultSteps;
  Stepper stepper = Stepper::Magnus4;
  // Store (t, U(t;t0)) after every step.
  bool keep_grid = false;
  // Times where H(t) may jump; steps are distributed over the pieces so no
  // step straddles one.
  std::vector<double> breakpoints;
};

struct PropagationResult {
  ComplexMatrix U;
  int steps = 0;
  double unitarity_defect = 0.0;
  std::vector<std::pair<double, ComplexMatrix>> grid;
};

// Time-ordered propagator U(t1; t0) of i dU/dt = H(t) U.
PropagationResult propagate(const MatrixFunction& hamiltonian, double t0, double t1,
                            const PropagationOptions& options = {});
PropagationResult propagate(const MatrixFunction& hamiltonian, double t0, double t1, int steps,
                            Stepper stepper = Stepper::Magnus4);

PropagationResult propagate(const OneQubitParams& p, double t0, double t1,
                            int steps = kDefaultSteps, Stepper stepper = Stepper::Magnus4);
// Splits the grid at the breakpoints of p.q.
PropagationResult propagate(const TwoQubitParams& p, double t0, double t1,
                            int steps = kDefaultSteps, Stepper stepper = Stepper::Magnus4);

// max_t |<psi(t)|O(t)|psi(t)> - <psi0|O(0)|psi0>| over one period, sampled at
// every step.
double invariant_expectation_drift(const MatrixFunction& hamiltonian,
                                   const MatrixFunction& observable, const StateVector& psi0,
                                   double period, const PropagationOptions& options = {});
double invariant_expectation_drift(const OneQubitParams& p, const StateVector& psi0,
                                   int steps = kDefaultSteps);
double invariant_expectation_drift(const TwoQubitParams& p, const StateVector& psi0,
                                   int steps = kDefaultSteps);

}  // namespace holo
