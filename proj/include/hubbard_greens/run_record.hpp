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

// Serialization of run records (JSON) and data tables (CSV).
//
// CSV: '.' decimal point, ',' separator, LF line endings, 17 significant
// digits, independent of the process locale.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hubbard_greens/photonic.hpp"
#include "hubbard_greens/spectrum.hpp"
#include "hubbard_greens/vqe.hpp"

namespace hubbard_greens::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// 17 significant digits, locale independent.
std::string format_double(double x);

/// Writes `contents` to `path` via a temporary file in the same directory and
/// a rename, so readers never observe a partial file.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

std::string read_file(const std::filesystem::path& path);

Json to_json(const photonic::AnsatzParams& p);
photonic::AnsatzParams params_from_json(const Json& j);
Json to_json(const photonic::ExpectationEstimate& e);
Json to_json(const PoleData& p);
Json to_json(const std::vector<PoleData>& poles);
Json to_json(const vqe::VqeTrace& trace);

/// Header `omega,A_k0,A_kpi`.
std::string spectrum_csv(const SpectrumSeries& series);
/// Header `omega,sigma_k0,sigma_kpi`.
std::string spectrum_error_csv(const SpectrumSeries& series, const greens::SpectrumError& error);
/// Header `sweep,theta2,theta4,theta5,theta6,energy,stderr`; one row per
/// trace record (initial point, then every single-angle update).
std::string trace_csv(const vqe::VqeTrace& trace);

}  // namespace hubbard_greens::io
