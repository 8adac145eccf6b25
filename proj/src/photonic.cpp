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

#include "hubbard_greens/photonic.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hubbard_greens::photonic {

std::string_view to_string(Angle a) {
  switch (a) {
    case Angle::theta1: return "theta1";
    case Angle::theta2: return "theta2";
    case Angle::theta4: return "theta4";
    case Angle::theta5: return "theta5";
    case Angle::theta6: return "theta6";
  }
  return "?";
}

double& AnsatzParams::operator[](Angle a) {
  switch (a) {
    case Angle::theta1: return theta1;
    case Angle::theta2: return theta2;
    case Angle::theta4: return theta4;
    case Angle::theta5: return theta5;
    case Angle::theta6: return theta6;
  }
  throw std::invalid_argument("unknown angle");
}

double AnsatzParams::operator[](Angle a) const { return const_cast<AnsatzParams&>(*this)[a]; }

SixState SixState::basis(int k) {
  SixState s{CVector::Zero(six::kDim)};
  s.amplitudes(k) = 1.0;
  return s;
}

Eigen::Matrix2d ry(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2d m;
  // rows/cols ordered (H, V)
  m << c, s,
      -s, c;
  return m;
}

SixState prepare_ansatz(const AnsatzParams& p) {
  const double c2 = std::cos(p.theta2 / 2), s2 = std::sin(p.theta2 / 2);
  const double c4 = std::cos(p.theta4 / 2), s4 = std::sin(p.theta4 / 2);
  const double c5 = std::cos(p.theta5 / 2), s5 = std::sin(p.theta5 / 2);
  const double c6 = std::cos(p.theta6 / 2), s6 = std::sin(p.theta6 / 2);
  const double g = std::cos(p.theta1 / 2), e = std::sin(p.theta1 / 2);
  SixState out{CVector(six::kDim)};
  out.amplitudes << g * c2 * c4, -g * c2 * s4, -g * s2 * s5, -g * s2 * c5, -e * s6, -e * c6;
  return out;
}

namespace {

struct Beam {
  CVector amp = CVector::Zero(six::kDim);
  double escaped = 0.0;

  void plate(int path, double theta) {
    const Eigen::Matrix2d r = ry(theta);
    const Eigen::Vector2cd in(amp(2 * path), amp(2 * path + 1));
    const Eigen::Vector2cd out = r.cast<Complex>() * in;
    amp(2 * path) = out(0);
    amp(2 * path + 1) = out(1);
  }

  void displacer() {
    escaped += std::norm(amp(0));
    for (int path = 0; path < 2; ++path) amp(2 * path) = amp(2 * (path + 1));
    amp(4) = 0.0;
  }
};

}  // namespace

std::vector<ElementStep> trace_ansatz_elements(const AnsatzParams& p) {
  Beam beam;
  beam.amp(4) = 1.0;  // |H, path2>
  std::vector<ElementStep> steps;
  auto record = [&](std::string name) { steps.push_back({std::move(name), beam.amp, beam.escaped}); };
  record("source |H,path2>");
  beam.plate(2, p.theta1);
  record("RY(theta1)@path2");
  beam.displacer();
  record("BD1");
  beam.plate(1, p.theta2);
  record("RY(theta2)@path1");
  beam.displacer();
  record("BD2");
  beam.plate(0, p.theta4);
  record("RY(theta4)@path0");
  beam.plate(1, p.theta5);
  record("RY(theta5)@path1");
  beam.plate(2, p.theta6);
  record("RY(theta6)@path2");
  return steps;
}

SixState prepare_ansatz_via_elements(const AnsatzParams& params) {
  const std::vector<ElementStep> steps = trace_ansatz_elements(params);
  if (steps.back().escaped_norm2 > 1e-24) {
    throw std::logic_error("optical layout leaks amplitude out of the three-path aperture");
  }
  return SixState{steps.back().amplitudes};
}

std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t shots, Rng& rng) {
  if (shots == 0) throw std::invalid_argument("sample_counts: shots must be >= 1");
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw std::invalid_argument("sample_counts: negative or NaN probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) throw std::invalid_argument("sample_counts: probabilities do not sum to 1");

  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  std::uint64_t remaining = shots;
  double mass_left = total;
  for (std::size_t k = 0; k < probabilities.size() && remaining > 0; ++k) {
    if (k + 1 == probabilities.size()) {
      counts[k] = remaining;
      break;
    }
    const double p = mass_left > 0.0 ? std::min(1.0, probabilities[k] / mass_left) : 0.0;
    if (p > 0.0) {
      std::binomial_distribution<std::uint64_t> draw(remaining, p);
      counts[k] = draw(rng.engine());
    }
    remaining -= counts[k];
    mass_left -= probabilities[k];
  }
  return counts;
}

std::array<double, six::kDim> outcome_probabilities(const SixState& state, const six::MeasurementSetting& setting) {
  const CVector rotated = setting.rotation * state.amplitudes;
  std::array<double, six::kDim> p{};
  double total = 0.0;
  for (int k = 0; k < six::kDim; ++k) {
    p[static_cast<std::size_t>(k)] = std::norm(rotated(k));
    total += p[static_cast<std::size_t>(k)];
  }
  for (double& x : p) x /= total;
  return p;
}

ExpectationEstimate measure_expectation(const SixState& state, std::span<const six::MeasurementSetting> settings,
                                        Shots shots, Rng& rng) {
  if (std::abs(state.norm() - 1.0) > 1e-10) throw std::invalid_argument("measure_expectation: state is not normalized");
  if (shots && *shots < 1) throw std::invalid_argument("measure_expectation: shots must be >= 1");

  ExpectationEstimate est;
  est.mode = shots ? EstimateMode::sampled : EstimateMode::exact;
  est.shots_used = shots.value_or(0);
  double variance = 0.0;
  for (const six::MeasurementSetting& setting : settings) {
    std::array<double, six::kDim> p = outcome_probabilities(state, setting);
    if (shots) {
      const std::vector<std::uint64_t> counts = sample_counts(p, *shots, rng);
      for (std::size_t k = 0; k < p.size(); ++k) p[k] = static_cast<double>(counts[k]) / static_cast<double>(*shots);
    }
    double mean = 0.0, second = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      mean += setting.outcome_values[k] * p[k];
      second += setting.outcome_values[k] * setting.outcome_values[k] * p[k];
    }
    est.value += mean;
    if (shots) variance += std::max(0.0, second - mean * mean) / static_cast<double>(*shots);
  }
  est.std_error = std::sqrt(variance);
  return est;
}

}  // namespace hubbard_greens::photonic
