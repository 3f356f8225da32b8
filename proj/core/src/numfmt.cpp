// Copyright 2026 The chanwit Authors
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

#include "chanwit/numfmt.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace chanwit {

std::string format_sig(double x, int digits) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("format_sig: non-finite value");
    }
    if (x == 0.0) {
        return "0";
    }
    // Round first so that the exponent reflects the rounded value (0.99999... -> 1.00000).
    std::string sci = fmt::format("{:.{}e}", x, digits - 1);
    int exponent = std::atoi(sci.c_str() + sci.find('e') + 1);
    int decimals = std::max(0, digits - 1 - exponent);
    return fmt::format("{:.{}f}", x, decimals);
}

double round_sig(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) {
        return x;
    }
    return std::strtod(fmt::format("{:.{}e}", x, digits - 1).c_str(), nullptr);
}

}  // namespace chanwit
