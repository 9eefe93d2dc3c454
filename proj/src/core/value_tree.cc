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

#include "chartqa/core/value_tree.h"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <regex>

namespace chartqa {
namespace {

bool IsDigits(std::string_view s, bool (*pred)(char)) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!pred(c)) return false;
  }
  return true;
}

bool IsDec(char c) { return c >= '0' && c <= '9'; }
bool IsOct(char c) { return c >= '0' && c <= '7'; }
bool IsHex(char c) {
  return IsDec(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

bool IsFloatText(std::string_view s) {
  static const std::regex kFloat(
      R"([-+]?(\.[0-9]+|[0-9]+(\.[0-9]*)?)([eE][-+]?[0-9]+)?)");
  static const std::regex kSpecial(
      R"([-+]?\.(inf|Inf|INF)|\.nan|\.NaN|\.NAN)");
  const std::string str(s);
  return std::regex_match(str, kFloat) || std::regex_match(str, kSpecial);
}

std::string CanonicalInt(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'o')) {
    const int base = s[1] == 'x' ? 16 : 8;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), v, base);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::string(s);
    return std::to_string(v);
  }
  std::size_t first = s.find_first_not_of('0');
  if (first == std::string_view::npos) return "0";
  std::string out(s.substr(first));
  if (negative) out.insert(out.begin(), '-');
  return out;
}

std::string CanonicalFloat(std::string_view s) {
  std::string str(s);
  std::string lower;
  for (char c : str) lower.push_back(static_cast<char>(std::tolower(c)));
  if (lower.find("nan") != std::string::npos) return ".nan";
  if (lower.find("inf") != std::string::npos) {
    return str[0] == '-' ? "-.inf" : ".inf";
  }
  if (str[0] == '+') str.erase(0, 1);
  const double v = std::strtod(str.c_str(), nullptr);
  if (v == 0.0) return std::signbit(v) ? "-0.0" : "0.0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string out(buf, ptr);
  if (out.find_first_of(".en") == std::string::npos) out += ".0";
  return out;
}

}  // namespace

ScalarType ResolvePlainScalar(std::string_view t) {
  if (t.empty() || t == "~" || t == "null" || t == "Null" || t == "NULL") {
    return ScalarType::kNull;
  }
  if (t == "true" || t == "True" || t == "TRUE" || t == "false" ||
      t == "False" || t == "FALSE") {
    return ScalarType::kBool;
  }
  std::string_view body = t;
  if (body[0] == '+' || body[0] == '-') body.remove_prefix(1);
  if (IsDigits(body, IsDec)) return ScalarType::kInt;
  if (t.size() > 2 && t[0] == '0' && t[1] == 'o' &&
      IsDigits(t.substr(2), IsOct)) {
    return ScalarType::kInt;
  }
  if (t.size() > 2 && t[0] == '0' && t[1] == 'x' &&
      IsDigits(t.substr(2), IsHex)) {
    return ScalarType::kInt;
  }
  if (IsFloatText(t)) return ScalarType::kFloat;
  return ScalarType::kString;
}

std::string CanonicalScalar(std::string_view text, ScalarStyle style) {
  if (style == ScalarStyle::kQuoted) {
    if (ResolvePlainScalar(text) != ScalarType::kString) {
      return "\"" + std::string(text) + "\"";
    }
    return std::string(text);
  }
  switch (ResolvePlainScalar(text)) {
    case ScalarType::kNull:
      return "null";
    case ScalarType::kBool:
      return (text[0] == 't' || text[0] == 'T') ? "true" : "false";
    case ScalarType::kInt:
      return CanonicalInt(text);
    case ScalarType::kFloat:
      return CanonicalFloat(text);
    case ScalarType::kString:
      break;
  }
  return std::string(text);
}

Scalar ScalarFromCanonical(std::string_view canonical) {
  if (canonical.size() >= 2 && canonical.front() == '"' &&
      canonical.back() == '"') {
    std::string_view inner = canonical.substr(1, canonical.size() - 2);
    if (ResolvePlainScalar(inner) != ScalarType::kString) {
      return Scalar{std::string(inner), ScalarStyle::kQuoted};
    }
  }
  if (ResolvePlainScalar(canonical) != ScalarType::kString) {
    return Scalar{std::string(canonical), ScalarStyle::kPlain};
  }
  return Scalar{std::string(canonical), ScalarStyle::kQuoted};
}

ScalarType Scalar::type() const {
  if (style == ScalarStyle::kQuoted) return ScalarType::kString;
  return ResolvePlainScalar(text);
}

std::string Scalar::Canonical() const { return CanonicalScalar(text, style); }

const ValueTree* ValueTree::Find(std::string_view key) const {
  if (!is_mapping()) return nullptr;
  for (const auto& [k, v] : mapping()) {
    if (k == key) return &v;
  }
  return nullptr;
}

ValueTree* ValueTree::Find(std::string_view key) {
  if (!is_mapping()) return nullptr;
  for (auto& [k, v] : mapping()) {
    if (k == key) return &v;
  }
  return nullptr;
}

void ValueTree::Set(std::string key, ValueTree value) {
  if (is_null()) node_ = Mapping{};
  if (ValueTree* existing = Find(key)) {
    *existing = std::move(value);
    return;
  }
  mapping().emplace_back(std::move(key), std::move(value));
}

const ValueTree* ValueTree::FindPath(std::string_view dotted) const {
  const ValueTree* node = this;
  while (node != nullptr) {
    const std::size_t dot = dotted.find('.');
    node = node->Find(dotted.substr(0, dot));
    if (dot == std::string_view::npos) return node;
    dotted.remove_prefix(dot + 1);
  }
  return nullptr;
}

void ValueTree::SetPath(std::string_view dotted, ValueTree value) {
  ValueTree* node = this;
  for (;;) {
    const std::size_t dot = dotted.find('.');
    const std::string key(dotted.substr(0, dot));
    if (dot == std::string_view::npos) {
      node->Set(key, std::move(value));
      return;
    }
    ValueTree* child = node->Find(key);
    if (child == nullptr || !child->is_mapping()) {
      node->Set(key, EmptyMapping());
      child = node->Find(key);
    }
    node = child;
    dotted.remove_prefix(dot + 1);
  }
}

bool ValueTree::empty() const {
  switch (kind()) {
    case Kind::kNull:
      return true;
    case Kind::kScalar:
      return scalar().text.empty();
    case Kind::kSequence:
      return sequence().empty();
    case Kind::kMapping:
      return mapping().empty();
  }
  return true;
}

}  // namespace chartqa
