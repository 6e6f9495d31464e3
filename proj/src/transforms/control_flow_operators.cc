// Copyright 2026 The Semmut Project Authors
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

#include <set>
#include <string>
#include <vector>

#include "src/transforms/support.h"

namespace semmut::transforms::internal {
namespace {

using codemodel::kNoNode;
using codemodel::Node;
using codemodel::TextEdit;

// Text between the closing parenthesis of a statement header and its body.
std::string_view HeaderGap(const SyntaxUnit& unit, NodeId body) {
  const Node& node = unit.node(body);
  const uint32_t paren_end = unit.tokens()[node.first_token - 1].span.end;
  return unit.text().substr(paren_end, node.span.begin - paren_end);
}

// Operators whose anchors are all nodes of one kind passing a predicate.
class NodeKindOperator : public TransformOperator {
 public:
  NodeKindOperator(OperatorInfo info, NodeKind kind)
      : TransformOperator(std::move(info)), kind_(kind) {}

 protected:
  virtual bool Accepts(const SyntaxUnit& unit, NodeId node) const = 0;

  std::vector<NodeId> FindAnchors(const SyntaxUnit& unit) const override {
    std::vector<NodeId> anchors;
    for (NodeId id : unit.NodesOfKind(kind_)) {
      if (Accepts(unit, id)) anchors.push_back(id);
    }
    return anchors;
  }

 private:
  NodeKind kind_;
};

class ForToWhile : public NodeKindOperator {
 public:
  explicit ForToWhile(OperatorInfo info)
      : NodeKindOperator(std::move(info), NodeKind::kForStatement) {}

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    const Node& loop = unit.node(anchor);
    const NodeId init = loop.child(0);
    const NodeId condition = loop.child(1);
    const NodeId update = loop.child(2);
    const NodeId body = loop.child(3);
    const bool declares = init != kNoNode &&
                          unit.node(init).kind == NodeKind::kDeclaration;
    const bool wrap = declares || !ParentIsCompound(unit, anchor);

    std::string out;
    if (wrap) out += "{";
    if (init != kNoNode) {
      out += unit.NodeText(init);
      out += declares ? " " : "; ";
    }
    out += "while(";
    out += condition == kNoNode ? std::string_view("1")
                                : unit.NodeText(condition);
    out += ")";
    out += HeaderGap(unit, body);
    if (update == kNoNode) {
      out += unit.NodeText(body);
    } else if (unit.node(body).kind == NodeKind::kCompoundStatement) {
      // Insert after the last token before the closing brace, keeping the
      // brace's own indentation.
      const Node& block = unit.node(body);
      const uint32_t insert_at = unit.tokens()[block.end_token - 2].span.end;
      out += unit.text().substr(block.span.begin, insert_at - block.span.begin);
      out += " ";
      out += unit.NodeText(update);
      out += ";";
      out += unit.text().substr(insert_at, block.span.end - insert_at);
    } else {
      out += "{";
      out += unit.NodeText(body);
      out += " ";
      out += unit.NodeText(update);
      out += ";}";
    }
    if (wrap) out += "}";
    return {{loop.span, out}};
  }

 protected:
  bool Accepts(const SyntaxUnit& unit, NodeId id) const override {
    const Node& loop = unit.node(id);
    // `continue` would skip the moved update.
    if (HasBindingJump(unit, id, NodeKind::kContinueStatement)) return false;
    const NodeId update = loop.child(2);
    const NodeId body = loop.child(3);
    if (update == kNoNode ||
        unit.node(body).kind != NodeKind::kCompoundStatement) {
      return true;
    }
    // The update moves into the body's scope; a body-level declaration of a
    // name it uses would capture it.
    std::set<std::string_view> update_names;
    unit.Walk(update, [&](NodeId n) {
      if (unit.node(n).kind == NodeKind::kIdentifier) {
        update_names.insert(unit.NodeText(n));
      }
      return true;
    });
    for (NodeId item : unit.node(body).children) {
      if (unit.node(item).kind != NodeKind::kDeclaration) continue;
      for (size_t i = 1; i < unit.node(item).children.size(); ++i) {
        const NodeId name =
            codemodel::DeclaredName(unit, unit.node(item).child(i));
        if (name != kNoNode && update_names.contains(unit.NodeText(name))) {
          return false;
        }
      }
    }
    return true;
  }
};

class WhileToFor : public NodeKindOperator {
 public:
  explicit WhileToFor(OperatorInfo info)
      : NodeKindOperator(std::move(info), NodeKind::kWhileStatement) {}

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    const Node& loop = unit.node(anchor);
    const NodeId body = loop.child(1);
    std::string out = "for(;";
    out += unit.NodeText(loop.child(0));
    out += ";)";
    out += HeaderGap(unit, body);
    out += Braced(unit, body);
    return {{loop.span, out}};
  }

 protected:
  bool Accepts(const SyntaxUnit&, NodeId) const override { return true; }
};

bool IsCaseLabel(NodeKind kind) {
  return kind == NodeKind::kCaseStatement ||
         kind == NodeKind::kDefaultStatement;
}

// True if `statement` holds a break that would leave the enclosing switch.
bool BreaksOutOf(const SyntaxUnit& unit, NodeId statement) {
  bool found = false;
  unit.Walk(statement, [&](NodeId id) {
    const NodeKind kind = unit.node(id).kind;
    if (IsLoop(kind) || kind == NodeKind::kSwitchStatement) return false;
    if (kind == NodeKind::kBreakStatement) found = true;
    return !found;
  });
  return found;
}

bool HasNestedCaseLabel(const SyntaxUnit& unit, NodeId statement) {
  bool found = false;
  unit.Walk(statement, [&](NodeId id) {
    const NodeKind kind = unit.node(id).kind;
    if (kind == NodeKind::kSwitchStatement) return false;
    if (IsCaseLabel(kind)) found = true;
    return !found;
  });
  return found;
}

struct CaseGroup {
  std::vector<NodeId> values;
  bool is_default = false;
  std::vector<NodeId> statements;
};

// Splits a switch body into label groups. Fails on any construct the
// if/else translation cannot express: fall-through, breaks other than the
// terminating one, declarations or labels at group level, case labels
// nested inside statements, and GNU case ranges.
bool CollectCaseGroups(const SyntaxUnit& unit, NodeId switch_statement,
                       std::vector<CaseGroup>& groups) {
  const NodeId body = unit.node(switch_statement).child(1);
  if (unit.node(body).kind != NodeKind::kCompoundStatement) return false;
  for (NodeId item : unit.node(body).children) {
    if (!IsCaseLabel(unit.node(item).kind)) {
      if (groups.empty()) return false;
      groups.back().statements.push_back(item);
      continue;
    }
    CaseGroup group;
    NodeId current = item;
    while (current != kNoNode && IsCaseLabel(unit.node(current).kind)) {
      const Node& label = unit.node(current);
      if (label.kind == NodeKind::kCaseStatement) {
        if (label.child(1) != kNoNode) return false;
        group.values.push_back(label.child(0));
        current = label.child(2);
      } else {
        group.is_default = true;
        current = label.child(0);
      }
    }
    if (current != kNoNode) group.statements.push_back(current);
    groups.push_back(std::move(group));
  }
  if (groups.empty()) return false;

  for (size_t g = 0; g < groups.size(); ++g) {
    const std::vector<NodeId>& statements = groups[g].statements;
    if (statements.empty()) {
      if (g + 1 != groups.size()) return false;
      continue;
    }
    const NodeKind last = unit.node(statements.back()).kind;
    if (last != NodeKind::kBreakStatement &&
        last != NodeKind::kReturnStatement) {
      return false;
    }
    for (size_t i = 0; i < statements.size(); ++i) {
      const NodeId s = statements[i];
      const NodeKind kind = unit.node(s).kind;
      if (kind == NodeKind::kDeclaration ||
          kind == NodeKind::kLabeledStatement || kind == NodeKind::kError) {
        return false;
      }
      if (HasNestedCaseLabel(unit, s)) return false;
      if (i + 1 < statements.size() && BreaksOutOf(unit, s)) return false;
    }
  }
  return true;
}

class SwitchToIfChain : public NodeKindOperator {
 public:
  explicit SwitchToIfChain(OperatorInfo info)
      : NodeKindOperator(std::move(info), NodeKind::kSwitchStatement) {}

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    std::vector<CaseGroup> groups;
    CollectCaseGroups(unit, anchor, groups);
    const std::string_view subject = unit.NodeText(unit.node(anchor).child(0));

    std::string chain;
    std::string otherwise;
    bool has_default = false;
    for (const CaseGroup& group : groups) {
      const std::string block = GroupBlock(unit, group);
      if (group.is_default) {
        has_default = true;
        otherwise = block;
        continue;
      }
      if (!chain.empty()) chain += " else ";
      chain += "if (";
      for (size_t i = 0; i < group.values.size(); ++i) {
        if (i > 0) chain += " || ";
        chain += "(";
        chain += subject;
        chain += ") == (";
        chain += unit.NodeText(group.values[i]);
        chain += ")";
      }
      chain += ") ";
      chain += block;
    }
    std::string out;
    if (chain.empty()) {
      out = otherwise;
    } else {
      out = chain;
      if (has_default) out += " else " + otherwise;
    }
    return {{unit.node(anchor).span, out}};
  }

 protected:
  bool Accepts(const SyntaxUnit& unit, NodeId id) const override {
    if (!IsPureExpression(unit, unit.node(id).child(0))) return false;
    std::vector<CaseGroup> groups;
    return CollectCaseGroups(unit, id, groups);
  }

 private:
  static std::string GroupBlock(const SyntaxUnit& unit,
                                const CaseGroup& group) {
    std::vector<NodeId> kept = group.statements;
    if (!kept.empty() &&
        unit.node(kept.back()).kind == NodeKind::kBreakStatement) {
      kept.pop_back();
    }
    if (kept.empty()) return "{}";
    const uint32_t begin = unit.node(kept.front()).span.begin;
    const uint32_t end = unit.node(kept.back()).span.end;
    return "{" + std::string(unit.text().substr(begin, end - begin)) + "}";
  }
};

class SplitAndCondition : public NodeKindOperator {
 public:
  explicit SplitAndCondition(OperatorInfo info)
      : NodeKindOperator(std::move(info), NodeKind::kIfStatement) {}

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    const Node& statement = unit.node(anchor);
    const Node& conjunction =
        unit.node(codemodel::StripParentheses(unit, statement.child(0)));
    std::string out = "if (";
    out += unit.NodeText(conjunction.child(0));
    out += ") {if (";
    out += unit.NodeText(conjunction.child(1));
    out += ") ";
    out += Braced(unit, statement.child(1));
    out += "}";
    return {{statement.span, out}};
  }

 protected:
  bool Accepts(const SyntaxUnit& unit, NodeId id) const override {
    const Node& statement = unit.node(id);
    if (statement.child(2) != kNoNode) return false;
    const NodeId condition =
        codemodel::StripParentheses(unit, statement.child(0));
    return unit.node(condition).kind == NodeKind::kBinaryExpression &&
           unit.OperatorText(condition) == "&&";
  }
};

class SwapIfElse : public NodeKindOperator {
 public:
  explicit SwapIfElse(OperatorInfo info)
      : NodeKindOperator(std::move(info), NodeKind::kIfStatement) {}

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    const Node& statement = unit.node(anchor);
    const NodeId condition = statement.child(0);
    const NodeId consequence = statement.child(1);
    const NodeId alternative = statement.child(2);
    return {
        {unit.node(condition).span,
         "!(" + std::string(unit.NodeText(condition)) + ")"},
        {unit.node(consequence).span, Braced(unit, alternative)},
        {unit.node(alternative).span, Braced(unit, consequence)},
    };
  }

 protected:
  bool Accepts(const SyntaxUnit& unit, NodeId id) const override {
    return unit.node(id).child(2) != kNoNode;
  }
};

// Coarse literal class used to avoid conditional expressions whose arms
// undergo different arithmetic conversions: 'i' plain integer literal,
// 'u' unsigned, 'f' floating, 'o' anything else.
char LiteralClass(const SyntaxUnit& unit, NodeId expression) {
  const NodeId stripped = codemodel::StripParentheses(unit, expression);
  if (unit.node(stripped).kind != NodeKind::kNumberLiteral) return 'o';
  const std::string_view text = unit.NodeText(stripped);
  const bool hex = text.size() > 1 && text[0] == '0' &&
                   (text[1] == 'x' || text[1] == 'X');
  if (text.find_first_of(hex ? ".pP" : ".eEfF") != std::string_view::npos) {
    return 'f';
  }
  if (text.find_first_of("uU") != std::string_view::npos) return 'u';
  return 'i';
}

class TernaryToIfElse : public NodeKindOperator {
 public:
  explicit TernaryToIfElse(OperatorInfo info)
      : NodeKindOperator(std::move(info), NodeKind::kExpressionStatement) {}

  std::vector<TextEdit> Rewrite(const SyntaxUnit& unit,
                                NodeId anchor) const override {
    const Node& assignment = unit.node(unit.node(anchor).child(0));
    const std::string target(unit.NodeText(assignment.child(0)));
    const Node& conditional =
        unit.node(codemodel::StripParentheses(unit, assignment.child(1)));
    auto arm = [&](NodeId value) {
      std::string text(unit.NodeText(value));
      if (unit.node(value).kind == NodeKind::kCommaExpression) {
        text = "(" + text + ")";
      }
      return text;
    };
    std::string out = "if (";
    out += unit.NodeText(conditional.child(0));
    out += ") {" + target + " = " + arm(conditional.child(1)) + ";} else {";
    out += target + " = " + arm(conditional.child(2)) + ";}";
    return {{unit.node(anchor).span, out}};
  }

 protected:
  bool Accepts(const SyntaxUnit& unit, NodeId id) const override {
    const NodeId expression = unit.node(id).child(0);
    if (expression == kNoNode ||
        unit.node(expression).kind != NodeKind::kAssignmentExpression ||
        unit.OperatorText(expression) != "=") {
      return false;
    }
    const Node& assignment = unit.node(expression);
    if (!IsPureExpression(unit, assignment.child(0))) return false;
    const NodeId value = codemodel::StripParentheses(unit, assignment.child(1));
    const Node& conditional = unit.node(value);
    if (conditional.kind != NodeKind::kConditionalExpression ||
        conditional.child(1) == kNoNode) {
      return false;
    }
    const char a = LiteralClass(unit, conditional.child(1));
    const char b = LiteralClass(unit, conditional.child(2));
    if ((a == 'u' || a == 'f' || b == 'u' || b == 'f') && a != b) return false;
    return true;
  }
};

}  // namespace

std::vector<std::unique_ptr<TransformOperator>> MakeControlFlowOperators() {
  std::vector<std::unique_ptr<TransformOperator>> ops;
  ops.push_back(std::make_unique<ForToWhile>(
      OperatorInfo{"T04_for_to_while", Category::kControlFlow,
                   "Rewrite a for loop as an equivalent while loop",
                   "CodeImitator"}));
  ops.push_back(std::make_unique<WhileToFor>(
      OperatorInfo{"T05_while_to_for", Category::kControlFlow,
                   "Rewrite a while loop as a for loop with empty clauses",
                   "RoPGen"}));
  ops.push_back(std::make_unique<SwitchToIfChain>(
      OperatorInfo{"T06_switch_to_if_chain", Category::kControlFlow,
                   "Rewrite a switch without fall-through as an if/else chain",
                   "RoPGen"}));
  ops.push_back(std::make_unique<SplitAndCondition>(
      OperatorInfo{"T07_split_and_condition", Category::kControlFlow,
                   "Split `if (a && b) S` into nested ifs", "CodeImitator"}));
  ops.push_back(std::make_unique<SwapIfElse>(
      OperatorInfo{"T08_swap_if_else", Category::kControlFlow,
                   "Negate an if condition and swap its branches", "NatGen"}));
  ops.push_back(std::make_unique<TernaryToIfElse>(
      OperatorInfo{"T09_ternary_to_if_else", Category::kControlFlow,
                   "Rewrite `x = c ? a : b;` as an if/else statement",
                   "NatGen"}));
  return ops;
}

}  // namespace semmut::transforms::internal
