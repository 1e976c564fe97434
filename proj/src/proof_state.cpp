#include "sublink/proof_state.hpp"

#include <regex>

namespace sublink {

const char* color_name(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Blue: return "blue";
    case Color::Green: return "green";
  }
  return "?";
}

namespace {

std::string rejection_reason(const Rejection& r) {
  std::string out = reject_reason_name(r.reason);
  if (r.unify) out += std::string("(") + failure_name(*r.unify) + ")";
  return out;
}

}  // namespace

NotALinkage::NotALinkage(Rejection r)
    : InvalidAction(rejection_reason(r) + ": " + r.message), rejection_(std::move(r)) {}

std::string NotALinkage::reason() const { return rejection_reason(rejection_); }

const Item& Goal::conclusion() const {
  for (const auto& it : items)
    if (it.color == Color::Red) return it;
  throw std::logic_error("goal without conclusion");
}

const Item* Goal::find(int item) const {
  for (const auto& it : items)
    if (it.id == item) return &it;
  return nullptr;
}

namespace {

void goal_functions(const Goal& g, std::map<std::string, std::size_t>& out) {
  for (const auto& it : g.items) {
    if (it.color == Color::Green) {
      out.emplace(it.name, 0);
      if (it.definition) collect_functions(*it.definition, out);
    } else {
      collect_functions(it.formula, out);
    }
  }
}

bool is_identifier(const std::string& s) {
  static const std::regex id("[A-Za-z_][A-Za-z0-9_']*");
  return std::regex_match(s, id);
}

}  // namespace

std::set<std::string> Goal::symbols() const {
  std::map<std::string, std::size_t> funs, preds;
  goal_functions(*this, funs);
  for (const auto& it : items)
    if (it.color != Color::Green) collect_predicates(it.formula, preds);
  std::set<std::string> out;
  for (const auto& [n, _] : funs) out.insert(n);
  for (const auto& [n, _] : preds) out.insert(n);
  return out;
}

ProofState ProofState::from_problem(const ProblemFile& p) {
  ProofState s;
  s.options_ = p.options;
  s.signature_ = p.signature;
  std::vector<Item> items;
  for (const auto& o : p.objects) {
    Item it;
    it.id = s.next_item_++;
    it.color = Color::Green;
    it.name = o.name;
    it.definition = o.definition;
    items.push_back(std::move(it));
  }
  for (const auto& h : p.hypotheses) items.push_back(s.make_item(Color::Blue, h));
  items.push_back(s.make_item(Color::Red, p.conclusion));
  s.goals_.push_back(s.make_goal(std::move(items)));
  return s;
}

Item ProofState::make_item(Color c, Formula f) {
  Item it;
  it.id = next_item_++;
  it.color = c;
  it.formula = std::move(f);
  return it;
}

Goal ProofState::make_goal(std::vector<Item> items) {
  Goal g;
  g.id = next_goal_++;
  g.items = std::move(items);
  normalize(g);
  return g;
}

void ProofState::normalize(Goal& g) const {
  std::set<std::string> used = g.symbols();
  for (const auto& [n, _] : signature_.functions) used.insert(n);
  for (auto& it : g.items)
    if (it.color != Color::Green) it.formula = barendregt(it.formula, used);
}

std::size_t ProofState::index_of(int goal) const {
  for (std::size_t i = 0; i < goals_.size(); ++i)
    if (goals_[i].id == goal) return i;
  throw InvalidAction("no open goal " + std::to_string(goal));
}

const Goal& ProofState::goal(int id) const { return goals_[index_of(id)]; }

// A single successor keeps the goal's id; a split gives every part a new one.
void ProofState::replace(std::size_t index, std::vector<Goal> successors) {
  if (successors.size() == 1) successors[0].id = goals_[index].id;
  for (auto& g : successors) normalize(g);
  goals_.erase(goals_.begin() + static_cast<long>(index));
  goals_.insert(goals_.begin() + static_cast<long>(index), successors.begin(), successors.end());
}

namespace {

std::vector<Item> without(const std::vector<Item>& items, int id) {
  std::vector<Item> out;
  for (const auto& it : items)
    if (it.id != id) out.push_back(it);
  return out;
}

std::vector<Item> swapped(const std::vector<Item>& items, int id, const std::vector<Item>& with) {
  std::vector<Item> out;
  for (const auto& it : items) {
    if (it.id == id)
      out.insert(out.end(), with.begin(), with.end());
    else
      out.push_back(it);
  }
  return out;
}

}  // namespace

void ProofState::click(int goal_id, int item_id, const Path& path) {
  std::size_t gi = index_of(goal_id);
  const Goal g = goals_[gi];
  const Item* it = g.find(item_id);
  if (!it) throw InvalidAction("no item " + std::to_string(item_id));
  if (it->color == Color::Green) throw NoClickAction();
  const Formula& f = it->formula;

  auto fresh_object = [&](const std::string& stem) {
    std::set<std::string> used = g.symbols();
    for (const auto& [n, _] : signature_.functions) used.insert(n);
    for (const auto& [n, _] : signature_.predicates) used.insert(n);
    for (const auto& i : g.items)
      if (i.color != Color::Green)
        for (const auto& b : bound_vars(i.id == item_id ? f.body() : i.formula)) used.insert(b);
    return used.count(stem) ? fresh_name(stem, used) : stem;
  };
  auto object = [&](const std::string& name) {
    Item o;
    o.id = next_item_++;
    o.color = Color::Green;
    o.name = name;
    return o;
  };

  if (it->color == Color::Red) {
    if (path.size() == 1 && f.is(Kind::Or) && (path[0] == 0 || path[0] == 1)) {
      Goal n = g;
      n.items = swapped(g.items, item_id, {make_item(Color::Red, f.children()[path[0]])});
      replace(gi, {n});
      return;
    }
    if (!path.empty()) throw NoClickAction();
    switch (f.kind()) {
      case Kind::And: {
        Goal a = make_goal(swapped(g.items, item_id, {make_item(Color::Red, f.left())}));
        Goal b = make_goal(swapped(g.items, item_id, {make_item(Color::Red, f.right())}));
        replace(gi, {a, b});
        return;
      }
      case Kind::Imp: {
        Goal n = g;
        n.items = swapped(g.items, item_id,
                          {make_item(Color::Blue, f.left()), make_item(Color::Red, f.right())});
        replace(gi, {n});
        return;
      }
      case Kind::Forall: {
        std::string name = fresh_object(f.var());
        Goal n = g;
        n.items = swapped(
            g.items, item_id,
            {object(name), make_item(Color::Red, substitute(f.body(), f.var(), Term::constant(name)))});
        replace(gi, {n});
        return;
      }
      case Kind::Eq:
        if (f.lhs() != f.rhs()) throw NoClickAction();
        replace(gi, {});
        return;
      case Kind::True:
        replace(gi, {});
        return;
      default:
        throw NoClickAction();
    }
  }

  if (!path.empty()) throw NoClickAction();
  switch (f.kind()) {
    case Kind::And: {
      Goal n = g;
      n.items = swapped(g.items, item_id,
                        {make_item(Color::Blue, f.left()), make_item(Color::Blue, f.right())});
      replace(gi, {n});
      return;
    }
    case Kind::Or: {
      Goal a = make_goal(swapped(g.items, item_id, {make_item(Color::Blue, f.left())}));
      Goal b = make_goal(swapped(g.items, item_id, {make_item(Color::Blue, f.right())}));
      replace(gi, {a, b});
      return;
    }
    case Kind::Exists: {
      std::string name = fresh_object(f.var());
      Goal n = g;
      n.items = swapped(
          g.items, item_id,
          {object(name), make_item(Color::Blue, substitute(f.body(), f.var(), Term::constant(name)))});
      replace(gi, {n});
      return;
    }
    default:
      throw NoClickAction();
  }
}

Selection ProofState::selection(const Goal& g, int item, const Path& path) const {
  const Item* it = g.find(item);
  if (!it) throw InvalidAction("no item " + std::to_string(item));
  if (it->color == Color::Green) throw InvalidAction("objects cannot be linked");
  try {
    resolve(it->formula, path);
  } catch (const PathOutOfRange& e) {
    throw InvalidAction(e.what());
  }
  return {it->formula, it->color == Color::Red ? Role::Conclusion : Role::Hypothesis, path};
}

Classification ProofState::classify(int goal_id, int src_item, const Path& src_path, int dst_item,
                                    const Path& dst_path) const {
  const Goal& g = goal(goal_id);
  if (src_item == dst_item) throw InvalidAction("an item cannot be linked with itself");
  return sublink::classify(selection(g, src_item, src_path), selection(g, dst_item, dst_path));
}

std::vector<TraceStep> ProofState::dnd(int goal_id, int src_item, const Path& src_path,
                                       int dst_item, const Path& dst_path) {
  Classification c = classify(goal_id, src_item, src_path, dst_item, dst_path);
  if (const auto* r = std::get_if<Rejection>(&c))
    throw NotALinkage(*r);
  const Linkage& l = std::get<Linkage>(c);
  DnDResult res = execute(l, options_);
  std::size_t gi = index_of(goal_id);
  const Goal g = goals_[gi];
  if (l.kind.direction == Direction::Backward) {
    if (res.result.is(Kind::True)) {
      replace(gi, {});
    } else {
      Goal n = g;
      n.items = swapped(g.items, g.conclusion().id, {make_item(Color::Red, res.result)});
      replace(gi, {n});
    }
  } else if (!res.result.is(Kind::True)) {
    Goal n = g;
    std::vector<Item> items = without(g.items, g.conclusion().id);
    items.push_back(make_item(Color::Blue, res.result));
    items.push_back(g.conclusion());
    n.items = std::move(items);
    replace(gi, {n});
  }
  return res.trace;
}

namespace {

// Function symbols of `used` must already exist in the goal or the problem.
void check_known(const std::map<std::string, std::size_t>& used,
                 const std::map<std::string, std::size_t>& known) {
  for (const auto& [name, arity] : used) {
    auto it = known.find(name);
    if (it == known.end()) throw UnknownSymbol(name);
    if (it->second != arity) throw ArityMismatch(name, it->second, arity);
  }
}

}  // namespace

std::map<std::string, std::size_t> ProofState::known_functions(const Goal& g) const {
  std::map<std::string, std::size_t> known;
  goal_functions(g, known);
  for (const auto& [n, a] : signature_.functions) known.emplace(n, a);
  return known;
}

void ProofState::add_hyp(int goal_id, const std::string& text) {
  std::size_t gi = index_of(goal_id);
  const Goal g = goals_[gi];
  Signature sig = signature_;
  Formula f = parse_formula(text, options_, &sig);
  std::map<std::string, std::size_t> used;
  collect_functions(f, used);
  check_known(used, known_functions(g));
  signature_ = sig;
  Goal with = g;
  with.items = without(g.items, g.conclusion().id);
  with.items.push_back(make_item(Color::Blue, f));
  with.items.push_back(g.conclusion());
  Goal prove = g;
  prove.items = swapped(g.items, g.conclusion().id, {make_item(Color::Red, f)});
  with.id = next_goal_++;
  prove.id = next_goal_++;
  replace(gi, {with, prove});
}

void ProofState::add_expr(int goal_id, const std::string& name, const std::string& text) {
  std::size_t gi = index_of(goal_id);
  const Goal g = goals_[gi];
  if (!is_identifier(name)) throw InvalidAction("not a valid object name: " + name);
  std::set<std::string> taken = g.symbols();
  if (taken.count(name) || signature_.functions.count(name) || signature_.predicates.count(name))
    throw DuplicateName(name);
  Signature sig = signature_;
  Term t = parse_term(text, options_, &sig);
  std::map<std::string, std::size_t> used;
  collect_functions(t, used);
  check_known(used, known_functions(g));
  Goal n = g;
  Item o;
  o.id = next_item_++;
  o.color = Color::Green;
  o.name = name;
  o.definition = t;
  n.items.insert(n.items.begin(), o);
  replace(gi, {n});
}

std::vector<Candidate> ProofState::candidates(int goal_id, int src_item, const Path& src_path,
                                              int dst_item) const {
  const Goal& g = goal(goal_id);
  const Item* src = g.find(src_item);
  const Item* dst = g.find(dst_item);
  if (!src || !dst) throw InvalidAction("no such item");
  std::vector<Candidate> out;
  if (src->color == Color::Green || dst->color == Color::Green || src_item == dst_item) return out;
  Selection s = selection(g, src_item, src_path);
  Role dst_role = dst->color == Color::Red ? Role::Conclusion : Role::Hypothesis;
  for (const Path& p : all_paths(dst->formula)) {
    Classification c = sublink::classify(s, {dst->formula, dst_role, p});
    if (const auto* l = std::get_if<Linkage>(&c)) out.push_back({p, l->kind});
  }
  return out;
}

std::string ProofState::render_item(const Item& it) const {
  if (it.color != Color::Green) return print_formula(it.formula, options_);
  if (!it.definition) return it.name;
  return it.name + " := " + print_term(*it.definition, options_);
}

std::string ProofState::render() const {
  std::string out;
  for (const auto& g : goals_) {
    out += "goal " + std::to_string(g.id) + "\n";
    for (const auto& it : g.items)
      out += "  " + std::to_string(it.id) + " " + color_name(it.color) + " " + render_item(it) + "\n";
  }
  if (goals_.empty()) out = "no goals\n";
  return out;
}

}  // namespace sublink
