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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chartqa/core/chart_parse.h"

namespace chartqa::testing {

std::string OracleStem(const std::string& file_name) {
  std::string base = file_name;
  if (base.size() >= 4 && base.compare(base.size() - 4, 4, ".tgz") == 0) {
    base.resize(base.size() - 4);
  }
  enum class State { kStart, kKeep, kCut };
  State state = State::kStart;
  std::string kept;
  for (char c : base) {
    switch (state) {
      case State::kStart:
        if (c == '-') break;
        if (c >= '0' && c <= '9') {
          state = State::kCut;
        } else {
          kept.push_back(c);
          state = State::kKeep;
        }
        break;
      case State::kKeep:
        if (c == '-') {
          state = State::kStart;
        } else {
          kept.push_back(c);
        }
        break;
      case State::kCut:
        break;
    }
    if (state == State::kCut) break;
  }
  if (!kept.empty()) return kept;
  std::string all;
  for (char c : base) {
    if (c != '-') all.push_back(c);
  }
  return all;
}

std::string RandomChartFileName(std::mt19937_64& rng) {
  static const std::string kLetters = "abcdefghijklmnopqrstuvwxyz";
  static const std::string kDigits = "0123456789";
  static const std::string kAlnum = kLetters + kDigits + ".";
  auto pick = [&](const std::string& s) {
    return s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
  };
  std::uniform_int_distribution<int> parts(1, 5);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> kind(0, 9);
  std::string name;
  const int n = parts(rng);
  for (int i = 0; i < n; ++i) {
    if (i) name += '-';
    const int k = kind(rng);
    std::string comp;
    comp += k < 3 ? pick(kDigits) : pick(kLetters);
    const int l = len(rng);
    for (int j = 1; j < l; ++j) comp += pick(kAlnum);
    name += comp;
  }
  if (kind(rng) < 8) name += ".tgz";
  return name;
}

namespace {

struct PoolValue {
  std::string source;
  std::string raw;
  std::string canonical;
};

const std::vector<PoolValue>& Pool() {
  static const std::vector<PoolValue> pool = {
      {"alpha", "alpha", "alpha"},
      {"'alpha'", "alpha", "alpha"},
      {"\"alpha\"", "alpha", "alpha"},
      {"beta-data", "beta-data", "beta-data"},
      {"8080", "8080", "8080"},
      {"\"8080\"", "8080", "\"8080\""},
      {"08080", "08080", "8080"},
      {"True", "True", "true"},
      {"false", "false", "false"},
      {"\"true\"", "true", "\"true\""},
      {"1.50", "1.50", "1.5"},
      {"1.5", "1.5", "1.5"},
      {"v1", "v1", "v1"},
      {"extensions/v1beta1", "extensions/v1beta1", "extensions/v1beta1"},
      {"x", "x", "x"},
      {"''", "", ""},
      {"10", "10", "10"},
      {"gamma delta", "gamma delta", "gamma delta"},
      {"Alpha", "Alpha", "Alpha"},
  };
  return pool;
}

class CorpusWriter {
 public:
  CorpusWriter(std::mt19937_64& rng, int budget) : rng_(rng), budget_(budget) {}

  // Emits a block mapping at `indent`; returns false if nothing was written.
  void Mapping(std::string& out, int indent, const std::string& path,
               int depth) {
    const int keys = Uniform(1, 4);
    for (int k = 0; k < keys && budget_ > 0; ++k) {
      const std::string key = "k" + std::to_string(k);
      const std::string child = path + "/" + key;
      if (Uniform(0, 9) == 0) {
        out += std::string(indent, ' ') + "{{- /* note */}}\n";
      }
      const int shape = depth >= 3 ? 0 : Uniform(0, 5);
      if (shape <= 3) {
        out += std::string(indent, ' ') + key + ": " + Leaf(child) + "\n";
      } else if (shape == 4) {
        out += std::string(indent, ' ') + key + ":\n";
        Mapping(out, indent + 2, child, depth + 1);
      } else {
        out += std::string(indent, ' ') + key + ":\n";
        const int items = Uniform(1, 3);
        for (int i = 0; i < items && budget_ > 0; ++i) {
          out += std::string(indent, ' ') + "- " +
                 Leaf(child + "[" + std::to_string(i) + "]") + "\n";
        }
      }
    }
  }

  std::vector<OracleLeaf> leaves;
  int budget() const { return budget_; }

 private:
  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  std::string Leaf(const std::string& path) {
    --budget_;
    const int r = Uniform(0, 19);
    if (r == 0) {
      leaves.push_back({path, "", "", false});
      return "{{ .Values.image }}";
    }
    if (r == 1) {
      leaves.push_back({path, "", "", false});
      return "\"prefix-{{ .Values.tag }}\"";
    }
    if (r == 2) {
      leaves.push_back({path, "", "null", false});
      return "~";
    }
    const auto& pool = Pool();
    const PoolValue& v = pool[static_cast<std::size_t>(
        Uniform(0, static_cast<int>(pool.size()) - 1))];
    leaves.push_back({path, v.raw, v.canonical, true});
    return v.source;
  }

  std::mt19937_64& rng_;
  int budget_;
};

}  // namespace

RandomCorpus RandomDuplicateCorpus(std::mt19937_64& rng, int max_leaves) {
  std::map<std::string, std::string> files;
  files["Chart.yaml"] = "apiVersion: v1\nname: random\nversion: 0.0.1\n";
  files["values.yaml"] = "image: nginx\n";
  CorpusWriter writer(rng, max_leaves);
  const int templates = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int t = 0; t < templates && writer.budget() > 0; ++t) {
    const std::string path = "templates/t" + std::to_string(t) + ".yaml";
    std::string body;
    const int docs = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int d = 0; d < docs && writer.budget() > 0; ++d) {
      if (d) body += "---\n";
      writer.Mapping(body, 0, path + "#" + std::to_string(d), 0);
    }
    files[path] = body;
  }
  return RandomCorpus{ParseChartFiles(files), writer.leaves};
}

std::vector<OracleGroup> OracleDuplicates(const std::vector<OracleLeaf>& leaves,
                                          const DuplicateConfig& config) {
  std::map<std::string, std::set<std::string>> seen;
  for (const auto& leaf : leaves) {
    if (!leaf.literal) continue;
    if (leaf.raw.size() < config.min_length) continue;
    if (std::find(config.blacklist.begin(), config.blacklist.end(),
                  leaf.canonical) != config.blacklist.end()) {
      continue;
    }
    seen[leaf.canonical].insert(leaf.key_path);
  }
  std::vector<OracleGroup> out;
  for (const auto& [value, paths] : seen) {
    if (static_cast<int>(paths.size()) >= config.threshold) {
      out.push_back({value, paths});
    }
  }
  return out;
}

void OracleFlatten(const ValueTree& tree, const std::string& prefix,
                   std::vector<FlatLeaf>& out) {
  if (tree.is_null()) {
    out.push_back({prefix, "null"});
  } else if (tree.is_scalar()) {
    out.push_back({prefix, tree.scalar().Canonical()});
  } else if (tree.is_sequence()) {
    for (std::size_t i = 0; i < tree.sequence().size(); ++i) {
      OracleFlatten(tree.sequence()[i], prefix + "[" + std::to_string(i) + "]",
                    out);
    }
  } else {
    for (const auto& [key, child] : tree.mapping()) {
      std::string escaped;
      for (char c : key) {
        if (c == '~') {
          escaped += "~0";
        } else if (c == '/') {
          escaped += "~1";
        } else if (c == '[') {
          escaped += "~2";
        } else {
          escaped += c;
        }
      }
      OracleFlatten(child, prefix + "/" + escaped, out);
    }
  }
}

double OracleSignFlipP(const std::vector<double>& x,
                       const std::vector<double>& y) {
  std::vector<double> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) d.push_back(x[i] - y[i]);
  }
  const std::size_t n = d.size();
  if (n == 0 || n > 20) throw std::invalid_argument("oracle range");
  // Mid-ranks by counting: rank = (#smaller) + (#equal + 1) / 2.
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    int smaller = 0, equal = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::fabs(d[j]) < std::fabs(d[i])) ++smaller;
      if (std::fabs(d[j]) == std::fabs(d[i])) ++equal;
    }
    rank[i] = smaller + (equal + 1) / 2.0;
  }
  double total = 0, plus = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += rank[i];
    if (d[i] > 0) plus += rank[i];
  }
  const double w = std::min(plus, total - plus);
  std::uint64_t hits = 0;
  const std::uint64_t assignments = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < assignments; ++mask) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s += rank[i];
    }
    if (std::min(s, total - s) <= w + 1e-9) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(assignments);
}

}  // namespace chartqa::testing
