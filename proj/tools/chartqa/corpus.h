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

#ifndef CHARTQA_TOOLS_CORPUS_H_
#define CHARTQA_TOOLS_CORPUS_H_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "chartqa/core/chart.h"
#include "chartqa/ingest/repo_index.h"

namespace chartqa::cli {

struct SourceOptions {
  std::string path;
  std::string index;
  std::string store;
  std::string snapshot;  // default: latest in store
  int jobs = 1;
};

struct Corpus {
  std::string subject;
  RepoIndex index;
  std::vector<ChartPackage> packages;
  std::vector<std::pair<std::string, std::string>> failures;  // where, why
};

// Exactly one of path / index / store must be set.
// Throws Error(kInvalidArgument) otherwise.
Corpus LoadCorpus(const SourceOptions& options, bool with_packages);

// Runs fn(i) for i in [0, n) on up to jobs threads; rethrows the first
// exception after all workers stopped.
void ParallelFor(std::size_t n, int jobs,
                 const std::function<void(std::size_t)>& fn);

}  // namespace chartqa::cli

#endif  // CHARTQA_TOOLS_CORPUS_H_
