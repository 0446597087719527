// Copyright 2026 The mbcert Authors
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

#ifndef MBCERT_REPRODUCE_H
#define MBCERT_REPRODUCE_H

#include <cstdint>
#include <string>
#include <vector>

namespace mbcert {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct ReproduceOptions {
    /// Allowed distance between a bisected threshold and its closed form.
    double threshold_tol = 1e-6;
    /// Added to every component of the (-0.9, -0.3, 0.2) fixture. Nonzero values are a negative
    /// control.
    double lambda_perturbation = 0;
    std::uint64_t seed = 0;
    /// Instance counts for the randomized fixtures.
    int oracle_channels = 10000;
    int mc_samples = 10000;
    int mc_workers = 1;
    int rom_states = 1000;
    int clifford_instances = 10000;
    int closed_form_instances = 1000;
    int rotation_instances = 10000;
};

/// Fixture names, indexed by id - 1.
const std::vector<std::string> &criterion_names();

CriterionResult run_criterion(int id, const ReproduceOptions &opts);

/// Runs every criterion in order.
std::vector<CriterionResult> run_acceptance(const ReproduceOptions &opts);

}  // namespace mbcert

#endif
