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

#ifndef CHANWIT_SELFTEST_HPP
#define CHANWIT_SELFTEST_HPP

#include <string>
#include <vector>

namespace chanwit {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Reduced-size run of the library invariants (CPT constructors, witness
/// reconstruction, SRU non-negativity, overlap equivalence, closed-form vs
/// Kraus agreement, CZ/dephasing commutation, estimator consistency).
std::vector<CheckResult> run_selftest();

}  // namespace chanwit

#endif
