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

#include "chartqa/render/builtin_engine.h"

#include <cctype>
#include <vector>

namespace chartqa {
namespace {

enum class TokenKind { kField, kIdent, kString, kNumber, kPipe };

struct Token {
  TokenKind kind;
  std::string text;
};

[[noreturn]] void Unsupported(const std::string& what) {
  throw TemplateError(FailureCategory::kEngineUnsupported, what);
}

[[noreturn]] void Syntax(const std::string& what) {
  throw TemplateError(FailureCategory::kSyntaxError, what);
}

std::vector<Token> Tokenize(std::string_view action) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < action.size()) {
    const char c = action[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '|') {
      tokens.push_back({TokenKind::kPipe, "|"});
      ++i;
    } else if (c == '"') {
      std::string s;
      ++i;
      while (i < action.size() && action[i] != '"') {
        if (action[i] == '\\' && i + 1 < action.size()) {
          const char e = action[++i];
          s.push_back(e == 'n' ? '\n' : e == 't' ? '\t' : e);
        } else {
          s.push_back(action[i]);
        }
        ++i;
      }
      if (i >= action.size()) Syntax("unterminated string literal");
      ++i;
      tokens.push_back({TokenKind::kString, s});
    } else if (c == '`') {
      const std::size_t end = action.find('`', i + 1);
      if (end == std::string_view::npos) Syntax("unterminated raw string");
      tokens.push_back(
          {TokenKind::kString, std::string(action.substr(i + 1, end - i - 1))});
      i = end + 1;
    } else {
      std::size_t end = i;
      while (end < action.size() &&
             !std::isspace(static_cast<unsigned char>(action[end])) &&
             action[end] != '|' && action[end] != '"') {
        ++end;
      }
      std::string word(action.substr(i, end - i));
      i = end;
      if (word[0] == '.') {
        tokens.push_back({TokenKind::kField, word});
      } else if (std::isdigit(static_cast<unsigned char>(word[0])) ||
                 (word[0] == '-' && word.size() > 1)) {
        tokens.push_back({TokenKind::kNumber, word});
      } else if (std::isalpha(static_cast<unsigned char>(word[0]))) {
        for (char w : word) {
          if (!std::isalnum(static_cast<unsigned char>(w)) && w != '_') {
            Unsupported("unsupported expression '" + word + "'");
          }
        }
        tokens.push_back({TokenKind::kIdent, word});
      } else {
        Unsupported("unsupported expression '" + word + "'");
      }
    }
  }
  return tokens;
}

// Result of evaluating an operand or a command.
struct Value {
  enum Kind { kMissing, kText, kNode } kind = kMissing;
  std::string text;
  const ValueTree* node = nullptr;
  std::string origin;  // for error messages

  bool Empty() const {
    if (kind == kMissing) return true;
    if (kind == kText) return text.empty();
    if (node->is_null()) return true;
    if (node->is_scalar()) {
      const Scalar& s = node->scalar();
      if (s.text.empty()) return true;
      if (s.style == ScalarStyle::kPlain) {
        const ScalarType t = s.type();
        if (t == ScalarType::kBool && s.Canonical() == "false") return true;
        if (t == ScalarType::kInt && s.Canonical() == "0") return true;
      }
      return false;
    }
    return node->empty();
  }

  std::string Text() const {
    switch (kind) {
      case kMissing:
        throw TemplateError(FailureCategory::kMissingValue,
                            "missing value for " + origin);
      case kText:
        return text;
      case kNode:
        if (node->is_null()) {
          throw TemplateError(FailureCategory::kMissingValue,
                              "missing value for " + origin);
        }
        if (!node->is_scalar()) {
          Unsupported("non-scalar value " + origin + " needs toYaml");
        }
        return node->scalar().text;
    }
    return {};
  }
};

Value TextValue(std::string s) {
  Value v;
  v.kind = Value::kText;
  v.text = std::move(s);
  return v;
}

Value EvalField(const std::string& field, const TemplateContext& ctx) {
  if (field == ".Release.Name") return TextValue(ctx.release_name);
  if (field == ".Release.Namespace") return TextValue(ctx.release_namespace);
  if (field == ".Chart.Name") return TextValue(ctx.chart_name);
  if (field == ".Chart.Version") return TextValue(ctx.chart_version);
  constexpr std::string_view kValues = ".Values";
  if (field.rfind(kValues, 0) != 0 ||
      (field.size() > kValues.size() && field[kValues.size()] != '.')) {
    Unsupported("unsupported field " + field);
  }
  Value v;
  v.origin = field;
  const ValueTree* node = ctx.values;
  if (field.size() > kValues.size()) {
    node = node->FindPath(std::string_view(field).substr(kValues.size() + 1));
  }
  if (node == nullptr) return v;
  v.kind = Value::kNode;
  v.node = node;
  return v;
}

Value EvalOperand(const Token& t, const TemplateContext& ctx) {
  switch (t.kind) {
    case TokenKind::kField:
      return EvalField(t.text, ctx);
    case TokenKind::kString:
    case TokenKind::kNumber:
      return TextValue(t.text);
    default:
      Unsupported("unexpected token '" + t.text + "'");
  }
}

std::string GoQuote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
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
      case '\t':
        out += "\\t";
        break;
      default:
        out.push_back(c);
    }
  }
  return out + "\"";
}

std::string RandomAlphaNum(int n, std::mt19937_64& rng) {
  static constexpr std::string_view kAlphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
  std::uniform_int_distribution<std::size_t> pick(0, kAlphabet.size() - 1);
  std::string out;
  for (int i = 0; i < n; ++i) out.push_back(kAlphabet[pick(rng)]);
  return out;
}

Value CallFunction(const std::string& name, const std::vector<Value>& args,
                   std::mt19937_64& rng) {
  auto arity = [&](std::size_t n) {
    if (args.size() != n) {
      Syntax(name + " expects " + std::to_string(n) + " argument(s)");
    }
  };
  if (name == "default") {
    arity(2);
    return args[1].Empty() ? args[0] : args[1];
  }
  if (name == "quote") {
    arity(1);
    return TextValue(GoQuote(args[0].Text()));
  }
  if (name == "upper" || name == "lower") {
    arity(1);
    std::string s = args[0].Text();
    for (char& c : s) {
      c = static_cast<char>(name == "upper"
                                ? std::toupper(static_cast<unsigned char>(c))
                                : std::tolower(static_cast<unsigned char>(c)));
    }
    return TextValue(s);
  }
  if (name == "randAlphaNum") {
    arity(1);
    const std::string n = args[0].Text();
    int count = 0;
    try {
      count = std::stoi(n);
    } catch (const std::exception&) {
      Syntax("randAlphaNum needs an integer, got '" + n + "'");
    }
    if (count < 0 || count > 4096) Syntax("randAlphaNum length out of range");
    return TextValue(RandomAlphaNum(count, rng));
  }
  Unsupported("unsupported function or keyword '" + name + "'");
}

std::string EvalAction(std::string_view action, const TemplateContext& ctx,
                       std::mt19937_64& rng) {
  const std::vector<Token> tokens = Tokenize(action);
  if (tokens.empty()) Syntax("empty action");
  std::vector<std::vector<Token>> commands(1);
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::kPipe) {
      commands.emplace_back();
    } else {
      commands.back().push_back(t);
    }
  }
  std::optional<Value> piped;
  for (const auto& cmd : commands) {
    if (cmd.empty()) Syntax("empty pipeline stage");
    if (cmd[0].kind == TokenKind::kIdent) {
      std::vector<Value> args;
      for (std::size_t i = 1; i < cmd.size(); ++i) {
        args.push_back(EvalOperand(cmd[i], ctx));
      }
      if (piped) args.push_back(*piped);
      piped = CallFunction(cmd[0].text, args, rng);
    } else {
      if (cmd.size() != 1 || piped) Syntax("malformed pipeline");
      piped = EvalOperand(cmd[0], ctx);
    }
  }
  return piped->Text();
}

std::size_t FindActionClose(std::string_view body, std::size_t from) {
  char quote = 0;
  for (std::size_t i = from; i + 1 < body.size(); ++i) {
    const char c = body[i];
    if (quote != 0) {
      if (c == '\\' && quote == '"') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
    } else if (c == '"' || c == '`') {
      quote = c;
    } else if (c == '}' && body[i + 1] == '}') {
      return i;
    }
  }
  return std::string_view::npos;
}

}  // namespace

std::vector<ActionSpan> FindTemplateActions(std::string_view body) {
  std::vector<ActionSpan> spans;
  std::size_t pos = 0;
  while ((pos = body.find("{{", pos)) != std::string_view::npos) {
    std::size_t from = pos + 2;
    // Comments may hold quotes, so they end at the first "*/}}" style close.
    const std::size_t first = body.find_first_not_of(" \t\r\n-", from);
    std::size_t close;
    if (first != std::string_view::npos && body.substr(first, 2) == "/*") {
      const std::size_t end_comment = body.find("*/", first + 2);
      close = end_comment == std::string_view::npos
                  ? std::string_view::npos
                  : body.find("}}", end_comment + 2);
    } else {
      close = FindActionClose(body, from);
    }
    if (close == std::string_view::npos) {
      spans.push_back(ActionSpan{pos, body.size()});
      break;
    }
    spans.push_back(ActionSpan{pos, close + 2});
    pos = close + 2;
  }
  return spans;
}

std::string ExpandTemplate(std::string_view body, const TemplateContext& ctx,
                           std::mt19937_64& rng) {
  std::string out;
  std::size_t pos = 0;
  bool trim_next = false;
  while (pos <= body.size()) {
    const std::size_t open = body.find("{{", pos);
    std::string_view text = body.substr(
        pos, open == std::string_view::npos ? std::string_view::npos : open - pos);
    if (trim_next) {
      const std::size_t first = text.find_first_not_of(" \t\r\n");
      text = first == std::string_view::npos ? std::string_view()
                                             : text.substr(first);
    }
    std::size_t action_start = open + 2;
    if (open != std::string_view::npos && action_start < body.size() &&
        body[action_start] == '-' && action_start + 1 < body.size() &&
        std::isspace(static_cast<unsigned char>(body[action_start + 1]))) {
      const std::size_t last = text.find_last_not_of(" \t\r\n");
      text = last == std::string_view::npos ? std::string_view()
                                            : text.substr(0, last + 1);
      action_start += 1;
    }
    out.append(text);
    if (open == std::string_view::npos) break;

    const std::size_t first_char = body.find_first_not_of(" \t\r\n", action_start);
    std::size_t close;
    if (first_char != std::string_view::npos &&
        body.substr(first_char, 2) == "/*") {
      const std::size_t end_comment = body.find("*/", first_char + 2);
      close = end_comment == std::string_view::npos
                  ? std::string_view::npos
                  : body.find("}}", end_comment + 2);
    } else {
      close = FindActionClose(body, action_start);
    }
    if (close == std::string_view::npos) Syntax("unclosed action");
    std::size_t action_end = close;
    trim_next = false;
    if (action_end > action_start && body[action_end - 1] == '-' &&
        action_end - 1 > action_start &&
        std::isspace(static_cast<unsigned char>(body[action_end - 2]))) {
      trim_next = true;
      action_end -= 1;
    }
    std::string_view action = body.substr(action_start, action_end - action_start);
    const std::size_t first = action.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && action.substr(first, 2) == "/*") {
      // comment
    } else {
      out += EvalAction(action, ctx, rng);
    }
    pos = close + 2;
  }
  return out;
}

BuiltinRenderer::BuiltinRenderer(BuiltinOptions options)
    : options_(std::move(options)) {
  if (options_.seed) {
    seeder_.seed(*options_.seed);
  } else {
    std::random_device rd;
    seeder_.seed((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
  }
}

RenderResult BuiltinRenderer::RenderTemplates(const ChartPackage& pkg,
                                              const ValueTree& values) {
  std::uint64_t render_seed = 0;
  {
    std::lock_guard<std::mutex> lock(rng_mutex_);
    render_seed = seeder_();
  }
  std::mt19937_64 rng(render_seed);
  TemplateContext ctx{&values, pkg.metadata.name, pkg.metadata.version,
                      options_.release_name, options_.release_namespace};
  RenderResult result;
  for (const auto& tpl : pkg.templates) {
    if (!IsRenderableTemplate(tpl.path)) continue;
    std::string text;
    try {
      text = ExpandTemplate(tpl.body, ctx, rng);
    } catch (const TemplateError& e) {
      result.failures.push_back(RenderFailure{tpl.path, e.what(), e.category()});
      continue;
    }
    ParseRenderedTemplate(tpl.path, text, result);
  }
  return result;
}

}  // namespace chartqa
