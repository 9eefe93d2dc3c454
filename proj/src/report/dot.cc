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

#include "chartqa/report/dot.h"

#include <map>
#include <set>
#include <tuple>

namespace chartqa {
namespace {

struct Node {
  std::string label;
  bool chart = false;
  bool collision = false;
  bool unmaintained = false;
};

}  // namespace

std::string DotQuote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string EmitDot(const MaintainerSetResult& sets,
                    const IrregularityReport& irregularities) {
  std::map<std::string, Node> nodes;
  // (from, to, version)
  std::set<std::tuple<std::string, std::string, std::string>> edges;

  // maintainer key -> chart node it collapses into
  std::map<std::string, std::string> merged;
  std::set<std::pair<std::string, std::string>> collisions;  // name, version
  for (const auto& c : irregularities.name_collision) {
    collisions.insert({c.name, c.version});
  }
  for (const auto& set : sets.sets) {
    for (const auto& chart : set.charts) {
      if (!collisions.count({chart.name, chart.version})) continue;
      for (const auto& key : set.members) {
        auto id = sets.identities.find(key);
        if (id != sets.identities.end() && id->second.names_seen.count(chart.name)) {
          merged.emplace(key, "c:" + chart.stem.value());
        }
      }
    }
  }

  for (const auto& set : sets.sets) {
    for (const auto& chart : set.charts) {
      const std::string cid = "c:" + chart.stem.value();
      Node& cn = nodes[cid];
      cn.chart = true;
      cn.label = chart.stem.value();
      for (const auto& key : set.members) {
        std::string mid = "m:" + key;
        auto m = merged.find(key);
        if (m != merged.end()) {
          mid = m->second;
          nodes[mid].chart = true;
          nodes[mid].collision = true;
        } else {
          Node& mn = nodes[mid];
          auto id = sets.identities.find(key);
          mn.label = id != sets.identities.end() && !id->second.names_seen.empty()
                         ? *id->second.names_seen.begin()
                         : key;
        }
        edges.insert({mid, cid, chart.version});
      }
    }
  }
  for (const auto& chart : sets.empty_bucket) {
    Node& n = nodes["c:" + chart.stem.value()];
    n.chart = true;
    n.label = chart.stem.value();
    n.unmaintained = true;
  }
  for (auto& [id, n] : nodes) {
    if (n.chart && n.label.empty()) n.label = id.substr(2);
  }

  std::string out = "digraph maintainers {\n";
  out += "  rankdir=LR;\n";
  out += "  node [fontname=\"Helvetica\"];\n";
  for (const auto& [id, n] : nodes) {
    out += "  " + DotQuote(id) + " [";
    if (n.chart) {
      std::string label = n.label;
      if (n.collision) label += "\nchart name = maintainer name";
      out += "label=" + DotQuote(label) + ", shape=box, class=\"chart\"";
      if (n.collision) out += ", style=filled, fillcolor=\"#f4b183\"";
      if (n.unmaintained) out += ", style=dashed, comment=\"no maintainer\"";
    } else {
      out += "label=" + DotQuote(n.label) +
             ", shape=ellipse, class=\"maintainer\"";
    }
    out += "];\n";
  }
  for (const auto& [from, to, version] : edges) {
    out += "  " + DotQuote(from) + " -> " + DotQuote(to) +
           " [label=" + DotQuote(version) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace chartqa
