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

#include "bgcs/presets.hpp"

#include <numbers>

namespace bgcs {

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

const std::vector<Preset> &presets() {
    static const std::vector<Preset> table = [] {
        const std::string two_pi = "6.283185307179586";
        std::vector<Preset> t;
        // Fig. 1: amplitude squeezing at r_i = 0.05.
        t.push_back({"fig1-f1", "scan-variance", "pq", "d2q", "phi", 0.05, -1, -pi / 2, 0, 0, 0, -1,
                     "varphi:0:3.141592653589793:2001"});
        t.push_back({"fig1-f2", "scan-variance", "pq", "d2p", "cat_phi_psi", 0.05, -1, pi / 4, 0, 0, 0, -1,
                     "psi:0:" + two_pi + ":2001"});
        t.push_back({"fig1-f3", "scan-variance", "pq", "d2q", "cat_phi_psi", 0.05, -1, pi / 4, 0, 0, 0, -1,
                     "psi:0:" + two_pi + ":2001"});
        t.push_back({"fig1-f4", "scan-variance", "pq", "d2p", "cat_phi_psi", 0.2, 0.05, pi / 4, 0, 0, 0, -1,
                     "psi:0:" + two_pi + ":2001"});
        // Fig. 2: squared-amplitude squeezing at r_i = 0.8.
        t.push_back({"fig2-g1", "scan-variance", "XY", "d2X", "cat_phi_psi", 0.8, -1, pi / 4, 0, 0, 0, -1,
                     "psi:-1:8:901"});
        t.push_back({"fig2-g2", "scan-variance", "XY", "d2X", "cat_phi_psi", 1.0, 0.8, pi / 4, 0, 0, 0, -1,
                     "psi:-1:8:901"});
        t.push_back({"fig2-g3", "scan-variance", "XY", "d2X", "cat_phi_psi", 1.2, 0.8, pi / 4, 0, 0, 0, -1,
                     "psi:-1:8:901"});
        t.push_back({"fig2-g4", "scan-variance", "XY", "two_d2p", "cat_phi_psi", 0.8, -1, pi / 4, 0, 0, 0, -1,
                     "psi:-1:8:901"});
        // Fig. 3: Fock-limit probabilities against r_tilde.
        const char *r_scan = "r_tilde:0.01:3:300";
        t.push_back({"fig3-p0", "photon-dist", "", "p_n", "cat_phi_psi", 0, -1, 0, pi / 2, pi, 0, 0, r_scan});
        t.push_back({"fig3-p1", "photon-dist", "", "p_n", "cat_phi_psi", 0, -1, 0, pi, -pi / 2, 0, 1, r_scan});
        t.push_back({"fig3-p2", "photon-dist", "", "p_n", "cat_phi_psi", 0, -1, 0, 0, pi, 0, 2, r_scan});
        t.push_back({"fig3-p3", "photon-dist", "", "p_n", "cat_phi_psi", 0, -1, 0, pi, pi / 2, 0, 3, r_scan});
        t.push_back({"fig3-p4", "photon-dist", "", "p_n", "cat_phi_psi", 0, -1, 0, pi / 4, pi / 4, 0, 4, r_scan});
        t.push_back({"fig3-p5", "photon-dist", "", "p_n", "cat_phi_psi", 0, -1, 0, pi, -pi / 2, 0, 5, r_scan});
        // Fig. 4: oscillating distributions.
        t.push_back({"fig4-pn1", "photon-dist", "", "p_n", "cat_phi_psi", 0.8, -1, 0, 0, 7.3, 0, -1, ""});
        t.push_back({"fig4-pn2", "photon-dist", "", "p_n", "cat_phi_psi", 2.2, -1, 0, pi, -pi / 2, 0, -1, ""});
        t.push_back({"fig4-pn3", "photon-dist", "", "p_n", "cat_phi_psi", 0.55, -1, 0, 5.0914, 0, 0, -1, ""});
        // Fig. 5: non-oscillating distributions and a Poisson reference.
        t.push_back({"fig5-pn1", "photon-dist", "", "p_n", "cat_phi_psi", 0.55, -1, 0, 2.246, 0, 0, -1, ""});
        t.push_back({"fig5-pn2", "photon-dist", "", "p_n", "cat_phi_psi", 0.55, -1, 0, 2.33, 0, 0, -1, ""});
        t.push_back({"fig5-pn3", "photon-dist", "", "p_n", "cat_phi_psi", 0.55, -1, 0, 2.234384, 0, 0, -1, ""});
        t.push_back({"fig5-pn4", "photon-dist", "", "p_n", "canonical", 0.55, -1, 0, 2.234384, 0, 0, -1, "", true});
        return t;
    }();
    return table;
}

const Preset *find_preset(const std::string &name) {
    for (const auto &p : presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

}  // namespace bgcs
