#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sublink/proof_state.hpp"

namespace sublink {

struct Action {
  enum class Type { Click, DnD, AddHyp, AddExpr, Undo, Redo };
  Type type = Type::Click;
  int goal = 0;
  int item = 0;        // click target, or dnd source
  Path path;
  int dst_item = 0;    // dnd only
  Path dst_path;
  std::string text;    // formula (add_hyp) or term (add_expr)
  std::string name;    // add_expr
};

const char* action_type_name(Action::Type t);
nlohmann::json action_to_json(const Action& a);
// Throws InvalidAction on malformed records.
Action action_from_json(const nlohmann::json& j);

nlohmann::json path_to_json(const Path& p);
nlohmann::json kind_to_json(const LinkageKind& k);
nlohmann::json trace_to_json(const std::vector<TraceStep>& steps);
nlohmann::json state_to_json(const ProofState& s);
// Node tree of an item; every node carries its path from the item root.
nlohmann::json item_tree(const Formula& f, const SyntaxOptions& opts = {});

// {reason, message} for the error types raised by parsing and actions;
// nullopt for anything else.
std::optional<nlohmann::json> error_to_json(const std::exception& e);

// A proof in progress: the problem text, the current state and the history
// of applied actions with undo/redo.
class Session {
 public:
  explicit Session(std::string problem_text);

  const ProofState& state() const { return state_; }
  const std::string& problem() const { return problem_; }
  const std::vector<Action>& actions() const { return log_; }
  // Linking trace of the most recent drag-and-drop.
  const std::vector<TraceStep>& last_trace() const { return last_trace_; }

  // Applies `a`; on failure the session is left unchanged.
  void apply(const Action& a);
  bool can_undo() const { return !undo_.empty(); }
  bool can_redo() const { return !redo_.empty(); }

  // {problem, actions}
  nlohmann::json trace() const;
  // Rebuilds a session by replaying a trace record.
  static Session replay(const nlohmann::json& trace);

 private:
  std::string problem_;
  ProofState state_;
  std::vector<ProofState> undo_, redo_;
  std::vector<Action> log_;
  std::vector<TraceStep> last_trace_;
};

}  // namespace sublink
