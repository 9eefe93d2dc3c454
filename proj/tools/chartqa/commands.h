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

#ifndef CHARTQA_TOOLS_COMMANDS_H_
#define CHARTQA_TOOLS_COMMANDS_H_

#include <string>
#include <vector>

#include "chartqa/report/config.h"
#include "corpus.h"

namespace chartqa::cli {

struct Options {
  SourceOptions source;
  ConfigLayer cli;
  std::string config_file;
  std::string out;
  std::string format = "json";
  bool verbose = false;

  // snapshot
  std::string date;
  // changes / trends / stats
  std::string from;
  std::string to;
  std::vector<std::string> periods;
  std::string notified;
  std::string observed_end;
  std::string final_snapshot;
  std::string n1_file;
  std::string n2_file;
  bool with_templates = false;
};

int RunSnapshot(const Options& o);
int RunAnalyze(const Options& o);
int RunDupes(const Options& o);
int RunVariability(const Options& o);
int RunSuggest(const Options& o);
int RunAuthorsets(const Options& o);
int RunIrregularities(const Options& o);
int RunChanges(const Options& o);
int RunTrends(const Options& o);
int RunStats(const Options& o);
int RunGraph(const Options& o);
int RunLivecheckCommand(const Options& o);

}  // namespace chartqa::cli

#endif  // CHARTQA_TOOLS_COMMANDS_H_
