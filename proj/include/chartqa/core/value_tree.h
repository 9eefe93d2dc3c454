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

#ifndef CHARTQA_CORE_VALUE_TREE_H_
#define CHARTQA_CORE_VALUE_TREE_H_

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace chartqa {

// How a scalar was written in its source document. Anything that is not a
// plain scalar (single/double quoted, literal or folded block) is kQuoted;
// quoting only matters for type resolution.
enum class ScalarStyle { kPlain, kQuoted };

// Type a scalar resolves to under the YAML 1.2 core schema.
enum class ScalarType { kNull, kBool, kInt, kFloat, kString };

struct Scalar {
  std::string text;
  ScalarStyle style = ScalarStyle::kPlain;

  ScalarType type() const;
  // Canonical lexical form used for every value comparison: booleans become
  // true/false, integers plain decimal, floats their shortest round-trip
  // form, null becomes "null". Quoted strings that would resolve to another
  // type when written plain keep double quotes, so 8080 and "8080" differ.
  std::string Canonical() const;

  bool operator==(const Scalar&) const = default;
};

ScalarType ResolvePlainScalar(std::string_view text);
std::string CanonicalScalar(std::string_view text, ScalarStyle style);
// Inverse of Scalar::Canonical() up to style: the result has the same
// canonical form as the input text.
Scalar ScalarFromCanonical(std::string_view canonical);

// A parsed YAML document: nested mappings, sequences and scalars. Mapping
// keys are unique and keep their document order.
class ValueTree {
 public:
  enum class Kind { kNull, kScalar, kSequence, kMapping };
  using Sequence = std::vector<ValueTree>;
  using Mapping = std::vector<std::pair<std::string, ValueTree>>;

  ValueTree() = default;
  explicit ValueTree(Scalar scalar) : node_(std::move(scalar)) {}
  explicit ValueTree(Sequence seq) : node_(std::move(seq)) {}
  explicit ValueTree(Mapping map) : node_(std::move(map)) {}

  static ValueTree Plain(std::string text) {
    return ValueTree(Scalar{std::move(text), ScalarStyle::kPlain});
  }
  static ValueTree Quoted(std::string text) {
    return ValueTree(Scalar{std::move(text), ScalarStyle::kQuoted});
  }
  static ValueTree EmptyMapping() { return ValueTree(Mapping{}); }

  Kind kind() const { return static_cast<Kind>(node_.index()); }
  bool is_null() const { return kind() == Kind::kNull; }
  bool is_scalar() const { return kind() == Kind::kScalar; }
  bool is_sequence() const { return kind() == Kind::kSequence; }
  bool is_mapping() const { return kind() == Kind::kMapping; }

  const Scalar& scalar() const { return std::get<Scalar>(node_); }
  Scalar& scalar() { return std::get<Scalar>(node_); }
  const Sequence& sequence() const { return std::get<Sequence>(node_); }
  Sequence& sequence() { return std::get<Sequence>(node_); }
  const Mapping& mapping() const { return std::get<Mapping>(node_); }
  Mapping& mapping() { return std::get<Mapping>(node_); }

  // Mapping lookup; nullptr when this is not a mapping or the key is absent.
  const ValueTree* Find(std::string_view key) const;
  ValueTree* Find(std::string_view key);

  // Inserts or replaces a key, keeping the position of an existing key.
  // Converts a null node into an empty mapping first.
  void Set(std::string key, ValueTree value);

  // Follows a dotted path ("image.tag"); nullptr if any step is missing.
  const ValueTree* FindPath(std::string_view dotted) const;
  // Creates intermediate mappings as needed.
  void SetPath(std::string_view dotted, ValueTree value);

  bool empty() const;

  bool operator==(const ValueTree& other) const { return node_ == other.node_; }

 private:
  std::variant<std::monostate, Scalar, Sequence, Mapping> node_;
};

}  // namespace chartqa

#endif  // CHARTQA_CORE_VALUE_TREE_H_
