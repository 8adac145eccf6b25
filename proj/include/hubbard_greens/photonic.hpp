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

// Photonic ansatz circuit and shot-sampled measurement.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hubbard_greens/linalg.hpp"
#include "hubbard_greens/model_six.hpp"
#include "hubbard_greens/rng.hpp"

namespace hubbard_greens::photonic {

/// Shots per measurement setting; std::nullopt means exact expectation values.
using Shots = std::optional<std::uint64_t>;
inline constexpr Shots kExact = std::nullopt;

enum class Angle { theta1, theta2, theta4, theta5, theta6 };

std::string_view to_string(Angle a);

/// Variational angles in radians. The ansatz has no theta3.
struct AnsatzParams {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta4 = 0.0;
  double theta5 = 0.0;
  double theta6 = 0.0;

  double& operator[](Angle a);
  double operator[](Angle a) const;
  bool operator==(const AnsatzParams&) const = default;
};

struct SixState {
  CVector amplitudes;  // length 6, unit norm

  static SixState basis(int k);
  double norm() const { return amplitudes.norm(); }
};

/// R_Y(theta) on (H, V): cos(theta/2) I + sin(theta/2)(|H><V| - |V><H|).
Eigen::Matrix2d ry(double theta);

/// cos(theta1/2)|psi_GS(theta2, theta4, theta5)> - sin(theta1/2)|psi_ES(theta6)>.
SixState prepare_ansatz(const AnsatzParams& params);

/// Intermediate state after one optical element.
struct ElementStep {
  std::string element;
  CVector amplitudes;      // on |pol, path>, k = 2*path + pol
  double escaped_norm2 = 0.0;  // probability pushed outside path 0 by a displacer
};

/// Runs the photon through the optical layout element by element:
///   R_Y(theta1)@path2, BD, R_Y(theta2)@path1, BD, R_Y(theta4)@path0,
///   R_Y(theta5)@path1, R_Y(theta6)@path2
/// starting from |H, path2>. A beam displacer moves |H, path j> to
/// |H, path j-1> and leaves |V> in place.
std::vector<ElementStep> trace_ansatz_elements(const AnsatzParams& params);

/// Final state of trace_ansatz_elements. Throws std::logic_error if any
/// amplitude left the three-path aperture.
SixState prepare_ansatz_via_elements(const AnsatzParams& params);

/// Multinomial draw of `shots` photons over the outcome probabilities.
/// Throws std::invalid_argument if any probability is negative, they do not
/// sum to 1 within 1e-10, or shots is zero.
std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t shots, Rng& rng);

enum class EstimateMode { exact, sampled };

struct ExpectationEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t shots_used = 0;  // per setting
  EstimateMode mode = EstimateMode::exact;
};

/// Outcome probabilities |<k| R |psi>|^2 of one setting.
std::array<double, six::kDim> outcome_probabilities(const SixState& state, const six::MeasurementSetting& setting);

/// Sum over settings of sum_k d_k p_k, with p_k exact or replaced by
/// counts/shots. The sampled standard error is
///   sqrt( sum_settings [sum_k d_k^2 p_k - (sum_k d_k p_k)^2] / shots ).
ExpectationEstimate measure_expectation(const SixState& state, std::span<const six::MeasurementSetting> settings,
                                        Shots shots, Rng& rng);

}  // namespace hubbard_greens::photonic
