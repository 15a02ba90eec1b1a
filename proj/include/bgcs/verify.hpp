// Copyright 2026 The bgcs Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bgcs {

struct Check {
    std::string suite;
    std::string name;
    double value;
    double threshold;
    bool pass;
};

struct VerifyOptions {
    double tol = 1e-6;  // identity-defect threshold for the canonical, phi and n-angle families
    std::uint64_t seed = 42;
    int n_max = 0;  // 0 = adaptive
};

const std::vector<std::string> &suite_names();

/// Runs one suite ("all" runs every suite). Throws invalid_argument for an unknown name.
std::vector<Check> run_suite(const std::string &suite, const VerifyOptions &opt = {});

}  // namespace bgcs
