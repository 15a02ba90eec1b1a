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

#include "bgcs/error.hpp"

namespace bgcs {

const char *to_string(Errc code) {
    switch (code) {
        case Errc::invalid_argument:
            return "invalid_argument";
        case Errc::pole:
            return "pole";
        case Errc::domain:
            return "domain";
        case Errc::convergence:
            return "convergence";
        case Errc::quadrature:
            return "quadrature";
        case Errc::divergence:
            return "divergence";
        case Errc::cutoff:
            return "cutoff";
        case Errc::out_of_range:
            return "out_of_range";
        case Errc::space_mismatch:
            return "space_mismatch";
        case Errc::normalization:
            return "normalization";
        case Errc::degenerate:
            return "degenerate";
        case Errc::empty_sector:
            return "empty_sector";
        case Errc::singular_parametrization:
            return "singular_parametrization";
        case Errc::vacuum:
            return "vacuum";
        case Errc::truncation:
            return "truncation";
        case Errc::unknown_family:
            return "unknown_family";
        case Errc::domain_too_small:
            return "domain_too_small";
    }
    return "unknown";
}

Error::Error(Errc code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {
}

}  // namespace bgcs
