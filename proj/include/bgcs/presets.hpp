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

#include <string>
#include <vector>

namespace bgcs {

/// Parameter bindings of one figure curve. Negative r_i means "equal to r_tilde".
struct Preset {
    std::string name;
    std::string command;  // scan-variance or photon-dist
    std::string which;    // pq or XY for scan-variance
    std::string curve;    // output column that carries the figure curve
    std::string family;
    double r_tilde;
    double r_i;
    double theta;
    double phi;
    double psi;
    double varphi;
    int photon_n;      // -1: full distribution
    std::string scan;  // var:start:stop:steps, empty for none
    bool poisson_match = false;  // Poisson reference with the mean of the bound cat state
};

const std::vector<Preset> &presets();
const Preset *find_preset(const std::string &name);

}  // namespace bgcs
