// Copyright 2026 The fairnoma Authors
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
#include <string>
#include <vector>

namespace fairnoma::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kIoError = 3 };

/// Directory figure output goes to when --out-dir is absent.
inline constexpr const char* kOutDirEnv = "FAIRNOMA_OUT_DIR";

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string tool_version();

}  // namespace fairnoma::cli
