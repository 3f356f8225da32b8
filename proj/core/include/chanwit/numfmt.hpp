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

#ifndef CHANWIT_NUMFMT_HPP
#define CHANWIT_NUMFMT_HPP

#include <string>

namespace chanwit {

inline constexpr int kOutputDigits = 12;

/// Fixed-point decimal text carrying `digits` significant digits, e.g.
/// 0.390524291751 or -0.5000000000000. Never uses exponent notation.
/// Zero (of either sign) prints as "0".
std::string format_sig(double x, int digits = kOutputDigits);

/// x rounded to `digits` significant digits.
double round_sig(double x, int digits = kOutputDigits);

}  // namespace chanwit

#endif
