#include "sublink/session.hpp"

namespace sublink {

using nlohmann::json;

const char* action_type_name(Action::Type t) {
  switch (t) {
    case Action::Type::Click: return "click";
    case Action::Type::DnD: return "dnd";
    case Action::Type::AddHyp: return "add_hyp";
    case Action::Type::AddExpr: return "add_expr";
    case Action::Type::Undo: return "undo";
    case Action::Type::Redo: return "redo";
  }
  return "?";
}

json path_to_json(const Path& p) { return json(p); }

json action_to_json(const Action& a) {
  json j{{"type", action_type_name(a.type)}};
  switch (a.type) {
    case Action::Type::Click:
      j["goal"] = a.goal;
      j["item"] = a.item;
      j["path"] = path_to_json(a.path);
      break;
    case Action::Type::DnD:
      j["goal"] = a.goal;
      j["src"] = {{"item", a.item}, {"path", path_to_json(a.path)}};
      j["dst"] = {{"item", a.dst_item}, {"path", path_to_json(a.dst_path)}};
      break;
    case Action::Type::AddHyp:
      j["goal"] = a.goal;
      j["formula"] = a.text;
      break;
    case Action::Type::AddExpr:
      j["goal"] = a.goal;
      j["name"] = a.name;
      j["term"] = a.text;
      break;
    case Action::Type::Undo:
    case Action::Type::Redo:
      break;
  }
  return j;
}

Action action_from_json(const json& j) {
  try {
    Action a;
    std::string type = j.at("type").get<std::string>();
    if (type == "click") {
      a.type = Action::Type::Click;
      a.goal = j.at("goal").get<int>();
      a.item = j.at("item").get<int>();
      a.path = j.value("path", Path{});
    } else if (type == "dnd") {
      a.type = Action::Type::DnD;
      a.goal = j.at("goal").get<int>();
      a.item = j.at("src").at("item").get<int>();
      a.path = j.at("src").value("path", Path{});
      a.dst_item = j.at("dst").at("item").get<int>();
      a.dst_path = j.at("dst").value("path", Path{});
    } else if (type == "add_hyp") {
      a.type = Action::Type::AddHyp;
      a.goal = j.at("goal").get<int>();
      a.text = j.at("formula").get<std::string>();
    } else if (type == "add_expr") {
      a.type = Action::Type::AddExpr;
      a.goal = j.at("goal").get<int>();
      a.name = j.at("name").get<std::string>();
      a.text = j.at("term").get<std::string>();
    } else if (type == "undo") {
      a.type = Action::Type::Undo;
    } else if (type == "redo") {
      a.type = Action::Type::Redo;
    } else {
      throw InvalidAction("unknown action type " + type);
    }
    return a;
  } catch (const json::exception& e) {
    throw InvalidAction(std::string("malformed action: ") + e.what());
  }
}

json kind_to_json(const LinkageKind& k) {
  json j{{"direction", direction_name(k.direction)},
         {"form", k.form == LinkForm::Logical ? "logical" : "rewrite"}};
  if (k.form == LinkForm::Rewrite) {
    j["side"] = k.side == EqSide::Lhs ? "lhs" : "rhs";
    j["equality_in"] = k.equality_in == Role::Hypothesis ? "hypothesis" : "conclusion";
  }
  return j;
}

json trace_to_json(const std::vector<TraceStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) out.push_back({{"rule", rule_name(s.rule)}, {"state", s.state}});
  return out;
}

namespace {

json term_tree(const Term& t, Path& path, const SyntaxOptions& opts) {
  json node{{"path", path}, {"kind", "Term"}, {"label", t.name()}, {"text", print_term(t, opts)}};
  json children = json::array();
  if (!(opts.peano_numerals && numeral_value(t)))
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      path.push_back(static_cast<int>(i));
      children.push_back(term_tree(t.args()[i], path, opts));
      path.pop_back();
    }
  node["children"] = std::move(children);
  return node;
}

json formula_tree(const Formula& f, Path& path, const SyntaxOptions& opts) {
  json node{{"path", path}, {"kind", kind_name(f.kind())}, {"text", print_formula(f, opts)}};
  json children = json::array();
  auto child = [&](std::size_t i, auto&& build) {
    path.push_back(static_cast<int>(i));
    children.push_back(build());
    path.pop_back();
  };
  switch (f.kind()) {
    case Kind::Pred:
      node["label"] = f.name();
      [[fallthrough]];
    case Kind::Eq:
      for (std::size_t i = 0; i < f.terms().size(); ++i)
        child(i, [&] { return term_tree(f.terms()[i], path, opts); });
      break;
    case Kind::Forall:
    case Kind::Exists:
      node["label"] = f.var();
      [[fallthrough]];
    default:
      for (std::size_t i = 0; i < f.children().size(); ++i)
        child(i, [&] { return formula_tree(f.children()[i], path, opts); });
  }
  node["children"] = std::move(children);
  return node;
}

}  // namespace

json item_tree(const Formula& f, const SyntaxOptions& opts) {
  Path p;
  return formula_tree(f, p, opts);
}

json state_to_json(const ProofState& s) {
  json goals = json::array();
  for (const auto& g : s.goals()) {
    json items = json::array();
    for (const auto& it : g.items) {
      json ji{{"id", it.id}, {"color", color_name(it.color)}, {"text", s.render_item(it)}};
      if (it.color != Color::Green) {
        ji["tree"] = item_tree(it.formula, s.options());
      } else {
        ji["name"] = it.name;
        if (it.definition) ji["definition"] = print_term(*it.definition, s.options());
      }
      items.push_back(std::move(ji));
    }
    goals.push_back({{"id", g.id}, {"items", std::move(items)}});
  }
  return {{"goals", std::move(goals)}, {"solved", s.complete()}, {"render", s.render()}};
}

std::optional<json> error_to_json(const std::exception& e) {
  auto out = [&](const std::string& reason) {
    return json{{"reason", reason}, {"message", e.what()}};
  };
  if (const auto* n = dynamic_cast<const NotALinkage*>(&e)) {
    json j = out(n->reason());
    j["kind"] = "NotALinkage";
    return j;
  }
  if (dynamic_cast<const NoClickAction*>(&e)) return out("NoClickAction");
  if (dynamic_cast<const DuplicateName*>(&e)) return out("DuplicateName");
  if (dynamic_cast<const UnknownSymbol*>(&e)) return out("UnknownSymbol");
  if (dynamic_cast<const InvalidAction*>(&e)) return out("InvalidAction");
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
    json j = out("SyntaxError");
    j["line"] = s->line();
    j["column"] = s->column();
    return j;
  }
  if (dynamic_cast<const ArityMismatch*>(&e)) return out("ArityMismatch");
  if (dynamic_cast<const MissingGoal*>(&e)) return out("MissingGoal");
  if (dynamic_cast<const DuplicateGoal*>(&e)) return out("DuplicateGoal");
  if (dynamic_cast<const StuckState*>(&e)) return out("StuckState");
  return std::nullopt;
}

Session::Session(std::string problem_text)
    : problem_(std::move(problem_text)), state_(ProofState::from_problem(parse_problem(problem_))) {}

void Session::apply(const Action& a) {
  switch (a.type) {
    case Action::Type::Undo:
      if (undo_.empty()) throw InvalidAction("nothing to undo");
      redo_.push_back(state_);
      state_ = undo_.back();
      undo_.pop_back();
      log_.push_back(a);
      return;
    case Action::Type::Redo:
      if (redo_.empty()) throw InvalidAction("nothing to redo");
      undo_.push_back(state_);
      state_ = redo_.back();
      redo_.pop_back();
      log_.push_back(a);
      return;
    default:
      break;
  }
  ProofState next = state_;
  std::vector<TraceStep> rules;
  switch (a.type) {
    case Action::Type::Click:
      next.click(a.goal, a.item, a.path);
      break;
    case Action::Type::DnD:
      rules = next.dnd(a.goal, a.item, a.path, a.dst_item, a.dst_path);
      break;
    case Action::Type::AddHyp:
      next.add_hyp(a.goal, a.text);
      break;
    case Action::Type::AddExpr:
      next.add_expr(a.goal, a.name, a.text);
      break;
    default:
      break;
  }
  undo_.push_back(std::move(state_));
  redo_.clear();
  state_ = std::move(next);
  log_.push_back(a);
  if (a.type == Action::Type::DnD) last_trace_ = std::move(rules);
}

json Session::trace() const {
  json actions = json::array();
  for (const auto& a : log_) actions.push_back(action_to_json(a));
  return {{"problem", problem_}, {"actions", std::move(actions)}};
}

Session Session::replay(const json& trace) {
  Session s(trace.at("problem").get<std::string>());
  for (const auto& a : trace.at("actions")) s.apply(action_from_json(a));
  return s;
}

}  // namespace sublink
