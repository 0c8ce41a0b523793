// Copyright 2026 The MirrorForge Authors
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

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "mirrorforge/field.hpp"
#include "mirrorforge/mirror.hpp"

namespace mirrorforge::cli {

/// Gradient target selected by the config: the cylindrical design target or
/// the exact test gradient (2y, 2z) of y^2 + z^2.
PlanarComponents make_target(const RunConfig& config);
/// Normal field matching make_target, used by `check`.
NormalField make_field(const RunConfig& config);

/// Loads config.surface_path and places it below the camera plane, wrapped
/// as a conquistador when requested.
std::unique_ptr<GraphSurface> load_surface(const RunConfig& config);

int cmd_design(const RunConfig& config, std::ostream& out);
int cmd_check(const RunConfig& config, std::ostream& out);
int cmd_fit(const RunConfig& config, std::ostream& out);
int cmd_export_obj(const RunConfig& config, std::ostream& out);
int cmd_render(const RunConfig& config, std::ostream& out);
int cmd_score(const RunConfig& config, std::ostream& out);

/// Full command line (without argv[0]). Errors go to `err` as one line
/// `error: <TAG>: <message>`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mirrorforge::cli
