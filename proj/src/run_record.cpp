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

#include "hubbard_greens/run_record.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace hubbard_greens::io {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json to_json(const photonic::AnsatzParams& p) {
  return Json{{"theta1", p.theta1}, {"theta2", p.theta2}, {"theta4", p.theta4}, {"theta5", p.theta5}, {"theta6", p.theta6}};
}

photonic::AnsatzParams params_from_json(const Json& j) {
  photonic::AnsatzParams p;
  p.theta1 = j.value("theta1", 0.0);
  p.theta2 = j.at("theta2").get<double>();
  p.theta4 = j.at("theta4").get<double>();
  p.theta5 = j.at("theta5").get<double>();
  p.theta6 = j.at("theta6").get<double>();
  return p;
}

Json to_json(const photonic::ExpectationEstimate& e) {
  return Json{{"value", e.value},
              {"stderr", e.std_error},
              {"shots_per_setting", e.shots_used},
              {"mode", e.mode == photonic::EstimateMode::exact ? "exact" : "sampled"}};
}

Json to_json(const PoleData& p) {
  return Json{{"sector", to_string(p.sector)},       {"k", to_string(p.k)},
              {"energy", p.energy},                  {"energy_stderr", p.energy_stderr},
              {"weight", p.weight},                  {"weight_stderr", p.weight_stderr},
              {"provenance", to_string(p.provenance)}};
}

Json to_json(const std::vector<PoleData>& poles) {
  Json arr = Json::array();
  for (const PoleData& p : poles) arr.push_back(to_json(p));
  return arr;
}

Json to_json(const vqe::VqeTrace& trace) {
  Json records = Json::array();
  for (const vqe::VqeRecord& r : trace.records) {
    records.push_back(Json{{"sweep", r.sweep},
                           {"angle", r.angle ? Json(std::string(photonic::to_string(*r.angle))) : Json(nullptr)},
                           {"params", to_json(r.params)},
                           {"energy", to_json(r.energy)},
                           {"moved", r.moved}});
  }
  Json sweeps = Json::array();
  for (const auto& e : trace.sweep_energies) sweeps.push_back(to_json(e));
  return Json{{"converged", trace.converged},     {"sweeps", trace.sweeps},
              {"final_energy", to_json(trace.final_energy)}, {"final_params", to_json(trace.final_params)},
              {"sweep_energies", sweeps},         {"records", records}};
}

std::string spectrum_csv(const SpectrumSeries& series) {
  std::string out = "omega,A_k0,A_kpi\n";
  for (std::size_t i = 0; i < series.omega_grid.size(); ++i) {
    out += format_double(series.omega_grid[i]) + ',' + format_double(series.a_k0[i]) + ',' +
           format_double(series.a_kpi[i]) + '\n';
  }
  return out;
}

std::string spectrum_error_csv(const SpectrumSeries& series, const greens::SpectrumError& error) {
  std::string out = "omega,sigma_k0,sigma_kpi\n";
  for (std::size_t i = 0; i < series.omega_grid.size(); ++i) {
    out += format_double(series.omega_grid[i]) + ',' + format_double(error.sigma_k0[i]) + ',' +
           format_double(error.sigma_kpi[i]) + '\n';
  }
  return out;
}

std::string trace_csv(const vqe::VqeTrace& trace) {
  std::string out = "sweep,theta2,theta4,theta5,theta6,energy,stderr\n";
  for (const vqe::VqeRecord& r : trace.records) {
    out += std::to_string(r.sweep) + ',' + format_double(r.params.theta2) + ',' + format_double(r.params.theta4) + ',' +
           format_double(r.params.theta5) + ',' + format_double(r.params.theta6) + ',' + format_double(r.energy.value) +
           ',' + format_double(r.energy.std_error) + '\n';
  }
  return out;
}

}  // namespace hubbard_greens::io
