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

#include "chartqa/suggest/unified_diff.h"

#include <algorithm>
#include <cstdio>

#include "chartqa/core/error.h"

namespace chartqa {
namespace {

constexpr std::string_view kNoNewline = "\\ No newline at end of file";

void AppendLine(std::string& out, char prefix, const std::string& line) {
  out.push_back(prefix);
  out += line;
  if (line.empty() || line.back() != '\n') {
    out.push_back('\n');
    out += kNoNewline;
    out.push_back('\n');
  }
}

std::string Range(std::size_t start, std::size_t count) {
  // GNU form: "l" for one line, "l,n" otherwise, "l-1,0" for none
  if (count == 1) return std::to_string(start + 1);
  if (count == 0) return std::to_string(start) + ",0";
  return std::to_string(start + 1) + "," + std::to_string(count);
}

std::string StripComponent(std::string path) {
  const std::size_t tab = path.find('\t');
  if (tab != std::string::npos) path.resize(tab);
  if (path == "/dev/null") return path;
  const std::size_t slash = path.find('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

[[noreturn]] void Fail(const std::string& msg) {
  throw Error(ErrorCode::kInvalidArgument, "patch: " + msg);
}

}  // namespace

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl + 1 - pos));
    pos = nl + 1;
  }
  return lines;
}

std::vector<Edit> DiffLines(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  const long n = static_cast<long>(a.size());
  const long m = static_cast<long>(b.size());
  const long max = n + m;
  const long offset = max + 1;
  std::vector<long> v(2 * max + 3, 0);
  std::vector<std::vector<long>> trace;
  long found_d = -1;
  for (long d = 0; d <= max && found_d < 0; ++d) {
    trace.push_back(v);
    for (long k = -d; k <= d; k += 2) {
      long x;
      if (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1])) {
        x = v[offset + k + 1];
      } else {
        x = v[offset + k - 1] + 1;
      }
      long y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[offset + k] = x;
      if (x >= n && y >= m) {
        found_d = d;
        break;
      }
    }
  }

  std::vector<Edit> edits;
  long x = n, y = m;
  for (long d = found_d; d > 0; --d) {
    const std::vector<long>& pv = trace[d];
    const long k = x - y;
    long prev_k;
    if (k == -d || (k != d && pv[offset + k - 1] < pv[offset + k + 1])) {
      prev_k = k + 1;
    } else {
      prev_k = k - 1;
    }
    const long prev_x = pv[offset + prev_k];
    const long prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      --x;
      --y;
      edits.push_back({EditOp::kEqual, static_cast<std::size_t>(x),
                       static_cast<std::size_t>(y)});
    }
    if (x == prev_x) {
      --y;
      edits.push_back({EditOp::kInsert, static_cast<std::size_t>(x),
                       static_cast<std::size_t>(y)});
    } else {
      --x;
      edits.push_back({EditOp::kDelete, static_cast<std::size_t>(x),
                       static_cast<std::size_t>(y)});
    }
  }
  while (x > 0 && y > 0) {
    --x;
    --y;
    edits.push_back({EditOp::kEqual, static_cast<std::size_t>(x),
                     static_cast<std::size_t>(y)});
  }
  std::reverse(edits.begin(), edits.end());
  return edits;
}

std::string UnifiedDiff(const std::optional<std::string>& before,
                        const std::optional<std::string>& after,
                        const std::string& old_label,
                        const std::string& new_label, int context) {
  const std::vector<std::string> a = SplitLines(before.value_or(""));
  const std::vector<std::string> b = SplitLines(after.value_or(""));
  if (a == b && before.has_value() == after.has_value()) return "";
  const std::vector<Edit> edits = DiffLines(a, b);

  std::string out;
  out += "--- " + (before ? old_label : std::string("/dev/null")) + "\n";
  out += "+++ " + (after ? new_label : std::string("/dev/null")) + "\n";

  const std::size_t ctx = static_cast<std::size_t>(std::max(context, 0));
  std::size_t i = 0;
  while (i < edits.size()) {
    while (i < edits.size() && edits[i].op == EditOp::kEqual) ++i;
    if (i == edits.size()) break;
    // hunk spans [first, last) in edits
    std::size_t first = i >= ctx ? i - ctx : 0;
    std::size_t last = i;
    for (;;) {
      while (last < edits.size() && edits[last].op != EditOp::kEqual) ++last;
      std::size_t run = last;
      while (run < edits.size() && edits[run].op == EditOp::kEqual) ++run;
      if (run < edits.size() && run - last <= 2 * ctx) {
        last = run;
        continue;
      }
      last = std::min(run, last + ctx);
      break;
    }
    const std::size_t a_start = edits[first].a;
    const std::size_t b_start = edits[first].b;
    std::size_t a_count = 0, b_count = 0;
    std::string body;
    for (std::size_t k = first; k < last; ++k) {
      const Edit& e = edits[k];
      switch (e.op) {
        case EditOp::kEqual:
          AppendLine(body, ' ', a[e.a]);
          ++a_count;
          ++b_count;
          break;
        case EditOp::kDelete:
          AppendLine(body, '-', a[e.a]);
          ++a_count;
          break;
        case EditOp::kInsert:
          AppendLine(body, '+', b[e.b]);
          ++b_count;
          break;
      }
    }
    out += "@@ -" + Range(a_start, a_count) + " +" + Range(b_start, b_count) +
           " @@\n";
    out += body;
    i = last;
  }
  return out;
}

void ApplyUnifiedDiff(std::map<std::string, std::string>& files,
                      std::string_view diff) {
  const std::vector<std::string> lines = SplitLines(diff);
  auto text_of = [](const std::string& l) {
    std::string s = l;
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
  };
  std::size_t i = 0;
  while (i < lines.size()) {
    if (lines[i].rfind("--- ", 0) != 0) {
      ++i;
      continue;
    }
    if (i + 1 >= lines.size() || lines[i + 1].rfind("+++ ", 0) != 0) {
      Fail("missing +++ line");
    }
    const std::string old_path = StripComponent(text_of(lines[i]).substr(4));
    const std::string new_path = StripComponent(text_of(lines[i + 1]).substr(4));
    i += 2;
    const bool creating = old_path == "/dev/null";
    const bool deleting = new_path == "/dev/null";
    const std::string target = creating ? new_path : old_path;
    std::vector<std::string> src;
    if (!creating) {
      auto it = files.find(target);
      if (it == files.end()) Fail("no such file " + target);
      src = SplitLines(it->second);
    }
    std::vector<std::string> dst;
    std::size_t cursor = 0;
    while (i < lines.size() && lines[i].rfind("@@ ", 0) == 0) {
      unsigned long a_start = 0, a_count = 1, b_start = 0, b_count = 1;
      const std::string header = text_of(lines[i]);
      if (std::sscanf(header.c_str(), "@@ -%lu,%lu +%lu,%lu", &a_start,
                      &a_count, &b_start, &b_count) != 4) {
        a_count = 1;
        b_count = 1;
        unsigned long x = 0, y = 0, z = 0;
        if (std::sscanf(header.c_str(), "@@ -%lu +%lu,%lu", &x, &y, &z) == 3) {
          a_start = x, b_start = y, b_count = z;
        } else if (std::sscanf(header.c_str(), "@@ -%lu,%lu +%lu", &x, &y,
                               &z) == 3) {
          a_start = x, a_count = y, b_start = z;
        } else if (std::sscanf(header.c_str(), "@@ -%lu +%lu", &x, &y) == 2) {
          a_start = x, b_start = y;
        } else {
          Fail("bad hunk header " + header);
        }
      }
      ++i;
      const std::size_t at = a_count == 0 ? a_start : a_start - 1;
      if (at < cursor || at > src.size()) Fail("hunk out of order");
      dst.insert(dst.end(), src.begin() + static_cast<long>(cursor),
                 src.begin() + static_cast<long>(at));
      cursor = at;
      std::size_t seen_a = 0, seen_b = 0;
      char last_kind = 0;
      while (i < lines.size() && (seen_a < a_count || seen_b < b_count ||
                                  lines[i].rfind(kNoNewline, 0) == 0)) {
        const std::string& l = lines[i];
        if (l.rfind(kNoNewline, 0) == 0) {
          std::string* prev = nullptr;
          if (last_kind == '+' || last_kind == ' ') prev = &dst.back();
          if (last_kind == '-' || last_kind == ' ') {
            if (cursor == 0 || (!src[cursor - 1].empty() &&
                                src[cursor - 1].back() == '\n')) {
              Fail("newline marker mismatch in " + target);
            }
          }
          if (prev && !prev->empty() && prev->back() == '\n') prev->pop_back();
          ++i;
          continue;
        }
        const char kind = l.empty() ? ' ' : l[0];
        std::string content = l.empty() ? std::string("\n") : l.substr(1);
        if (content.empty() || content.back() != '\n') content.push_back('\n');
        if (kind == ' ' || kind == '-') {
          if (cursor >= src.size()) Fail("hunk past end of " + target);
          std::string expect = src[cursor];
          if (expect.empty() || expect.back() != '\n') expect.push_back('\n');
          if (expect != content) Fail("context mismatch in " + target);
          if (kind == ' ') dst.push_back(src[cursor]);
          ++cursor;
          ++seen_a;
          if (kind == ' ') ++seen_b;
        } else if (kind == '+') {
          dst.push_back(content);
          ++seen_b;
        } else {
          Fail("unexpected line in hunk of " + target);
        }
        last_kind = kind;
        ++i;
      }
    }
    dst.insert(dst.end(), src.begin() + static_cast<long>(cursor), src.end());
    if (deleting) {
      files.erase(target);
      continue;
    }
    std::string joined;
    for (const auto& l : dst) joined += l;
    files[new_path] = joined;
    if (!creating && new_path != old_path) files.erase(old_path);
  }
}

}  // namespace chartqa
