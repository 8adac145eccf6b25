// Copyright 2026 The hubbard-greens Authors
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

#include <string_view>

namespace hubbard_greens {

/// Which one-electron sector is appended to the half-filled (1,1) block:
/// particle = (2,1), hole = (0,1).
enum class Sector { particle, hole };

/// Momentum of the up-spin operator, k = 0 or k = pi.
enum class Momentum { zero, pi };

enum class Provenance { exact, vqe };

constexpr double momentum_sign(Momentum k) { return k == Momentum::zero ? 1.0 : -1.0; }
constexpr Momentum flip(Momentum k) { return k == Momentum::zero ? Momentum::pi : Momentum::zero; }

constexpr std::string_view to_string(Sector s) { return s == Sector::particle ? "particle" : "hole"; }
constexpr std::string_view to_string(Momentum k) { return k == Momentum::zero ? "0" : "pi"; }
constexpr std::string_view to_string(Provenance p) { return p == Provenance::exact ? "exact" : "vqe"; }

}  // namespace hubbard_greens
