// Copyright 2026 The chartqa Authors.
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

#ifndef CHARTQA_RENDER_PROCESS_H_
#define CHARTQA_RENDER_PROCESS_H_

#include <string>
#include <vector>

namespace chartqa {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs argv[0] (searched on PATH) and captures both output streams.
// Throws Error{kEngineUnavailable} if the program cannot be started.
ProcessResult RunProcess(const std::vector<std::string>& argv);

// Locates an executable: paths containing '/' are checked directly,
// bare names are searched on PATH. Empty result when not found.
std::string FindExecutable(const std::string& name);

}  // namespace chartqa

#endif  // CHARTQA_RENDER_PROCESS_H_
