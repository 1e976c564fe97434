#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sublink/rules.hpp"
#include "sublink/syntax.hpp"
#include "sublink/unify.hpp"

namespace sublink {

enum class Direction { Backward, Forward };
enum class LinkForm { Logical, Rewrite };
enum class EqSide { Lhs, Rhs };
enum class Role { Hypothesis, Conclusion };

struct LinkageKind {
  Direction direction = Direction::Backward;
  LinkForm form = LinkForm::Logical;
  EqSide side = EqSide::Lhs;             // rewrite only: which side of the equation is selected
  Role equality_in = Role::Hypothesis;   // rewrite only

  friend bool operator==(const LinkageKind&, const LinkageKind&) = default;
};

const char* direction_name(Direction d);
// "backward logical", "forward rewrite lhs hypothesis", ...
std::string kind_to_string(const LinkageKind& k);

struct Selection {
  Formula item;
  Role role;
  Path path;
};

struct Linkage {
  Selection src, dst;
  LinkageKind kind;
  TermMap sigma;
  std::vector<std::string> order;
  // Operands in rule orientation: the hypothesis left of ⊢ for backward
  // linkages, the source first for forward ones.
  Selection left, right;
  int equation = -1;  // operand holding the equation (0 left, 1 right), -1 if logical
};

enum class RejectReason { BadShape, PolarityViolation, UnificationFailure };
const char* reject_reason_name(RejectReason r);

struct Rejection {
  RejectReason reason;
  std::optional<UnifyFailure> unify;
  std::string message;
};

using Classification = std::variant<Linkage, Rejection>;

// Decides whether the two selections form a valid linkage. Binders of `dst`
// that clash with names of `src` are renamed first (paths are unaffected).
Classification classify(const Selection& src, const Selection& dst);

enum class Operator { Turnstile, Star };

// D⟨left ⊢ right⟩ or D⟨left ∗ right⟩, with the selections tracked in both operands.
struct InteractionState {
  Context outer;
  Operator op = Operator::Turnstile;
  Formula left, right;
  Path left_path, right_path;
  TermMap sigma;
  int equation = -1;
  std::set<std::string> needed;  // binders of the rewritten item that must be opened

  Formula plug(const Formula& inner) const { return outer.plug(inner); }
};

class StuckState : public std::logic_error {
 public:
  explicit StuckState(const std::string& what) : std::logic_error(what) {}
};

InteractionState initial_state(const Linkage& l);
std::string render(const InteractionState& s, const SyntaxOptions& opts = {});

bool is_redex(const InteractionState& s);

struct Step {
  RuleId rule;
  InteractionState next;
};

// One linking rule chosen by the strategy, or nullopt at an interaction redex.
std::optional<Step> step(const InteractionState& s);

struct Interaction {
  RuleId rule;
  Formula result;
};

// id, L=1, L=2, F=1 or F=2 at a redex.
Interaction interact(const InteractionState& s);

struct DnDResult {
  Formula result;
  std::vector<TraceStep> trace;
};

DnDResult execute(const Linkage& l, const SyntaxOptions& opts = {});

}  // namespace sublink
