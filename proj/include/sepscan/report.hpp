// Copyright 2026 The sepscan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "sepscan/criteria.hpp"
#include "sepscan/linalg.hpp"
#include "sepscan/normalform.hpp"
#include "sepscan/witness.hpp"

namespace sepscan {

using json = nlohmann::json;

/// State-file schema: {"dims": [...], "re": [...], "im": [...]} with the
/// matrix entries row-major. Throws BadStateFile on any malformed content.
json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const json& j);

DensityMatrix load_state_file(const std::string& path);
void save_state_file(const DensityMatrix& rho, const std::string& path);

json verdict_to_json(const CriterionVerdict& v);
json nf_to_json(const NormalFormResult& r);
json witness_to_json(const Witness& w);
json policy_to_json();

/// Common report envelope: schema/tool versions, UTC timestamp, command name
/// and the numeric policy in force.
json report_skeleton(const std::string& command);

}  // namespace sepscan
