#include "sublink/cli.hpp"

#include <ostream>
#include <sstream>

#include "sublink/oracle.hpp"
#include "sublink/session.hpp"

namespace sublink::cli {

using nlohmann::json;

namespace {

struct Ref {
  int item = 0;
  std::optional<Path> path;
};

Ref parse_ref(const std::string& text) {
  Ref r;
  auto colon = text.find(':');
  r.item = std::stoi(text.substr(0, colon));
  if (colon == std::string::npos) return r;
  r.path.emplace();
  std::stringstream in(text.substr(colon + 1));
  std::string part;
  while (std::getline(in, part, ','))
    if (!part.empty()) r.path->push_back(std::stoi(part));
  return r;
}

std::string describe(const std::exception& e) {
  std::string what = e.what();
  if (auto j = error_to_json(e)) {
    std::string reason = (*j)["reason"];
    if (what.rfind(reason, 0) != 0) return reason + ": " + what;
  }
  return what;
}

std::string summary(const Action& a) {
  std::string out = action_type_name(a.type);
  switch (a.type) {
    case Action::Type::Click:
      out += " goal " + std::to_string(a.goal) + " item " + std::to_string(a.item) + " " +
             path_to_string(a.path);
      break;
    case Action::Type::DnD:
      out += " goal " + std::to_string(a.goal) + " " + std::to_string(a.item) + " " +
             path_to_string(a.path) + " -> " + std::to_string(a.dst_item) + " " +
             path_to_string(a.dst_path);
      break;
    case Action::Type::AddHyp:
      out += " goal " + std::to_string(a.goal) + " " + a.text;
      break;
    case Action::Type::AddExpr:
      out += " goal " + std::to_string(a.goal) + " " + a.name + " := " + a.text;
      break;
    default:
      break;
  }
  return out;
}

// Applies every action, reporting each; false at the first failure.
bool replay(Session& s, const json& actions, std::ostream& out) {
  std::size_t n = 0;
  for (const auto& record : actions) {
    ++n;
    Action a;
    try {
      a = action_from_json(record);
      s.apply(a);
    } catch (const std::exception& e) {
      out << n << " " << record.value("type", std::string("?")) << " error " << describe(e) << "\n";
      return false;
    }
    out << n << " " << summary(a) << " ok";
    if (a.type == Action::Type::DnD) {
      out << " [";
      const auto& steps = s.last_trace();
      for (std::size_t i = 0; i < steps.size(); ++i) out << (i ? ", " : "") << rule_name(steps[i].rule);
      out << "]";
    }
    out << "\n";
  }
  return true;
}

}  // namespace

int check(const json& trace, std::ostream& out) {
  std::optional<Session> s;
  try {
    s.emplace(trace.at("problem").get<std::string>());
  } catch (const std::exception& e) {
    out << "problem error " << describe(e) << "\n";
    return 2;
  }
  if (!replay(*s, trace.value("actions", json::array()), out)) return 1;
  std::size_t goals = s->state().goals().size();
  out << "final goals " << goals << "\n";
  if (trace.contains("expected_goals")) {
    auto expected = trace["expected_goals"].get<std::size_t>();
    if (goals != expected) {
      out << "expected " << expected << " goals\n";
      return 1;
    }
  }
  return 0;
}

int run(const std::string& problem, const json& trace, std::ostream& out) {
  std::optional<Session> s;
  try {
    s.emplace(problem);
  } catch (const std::exception& e) {
    out << "problem error " << describe(e) << "\n";
    return 2;
  }
  bool ok = replay(*s, trace.value("actions", json::array()), out);
  out << s->state().render();
  if (s->state().complete()) out << "QED\n";
  return ok ? 0 : 1;
}

int candidates(const std::string& problem, int goal, const std::string& src,
               const std::string& dst, std::ostream& out) {
  try {
    Session s(problem);
    const ProofState& st = s.state();
    Ref a = parse_ref(src), b = parse_ref(dst);
    Path src_path = a.path.value_or(Path{});
    std::vector<Path> targets;
    if (b.path) {
      targets.push_back(*b.path);
    } else {
      const Item* it = st.goal(goal).find(b.item);
      if (!it) throw InvalidAction("no item " + std::to_string(b.item));
      if (it->color != Color::Green) targets = all_paths(it->formula);
    }
    for (const Path& p : targets) {
      Classification c = st.classify(goal, a.item, src_path, b.item, p);
      out << path_to_string(p) << " ";
      if (const auto* l = std::get_if<Linkage>(&c)) {
        out << kind_to_string(l->kind) << "\n";
      } else {
        const Rejection& r = std::get<Rejection>(c);
        out << "rejected " << reject_reason_name(r.reason);
        if (r.unify) out << "(" << failure_name(*r.unify) << ")";
        out << "\n";
      }
    }
    return 0;
  } catch (const std::exception& e) {
    out << "error " << describe(e) << "\n";
    return 2;
  }
}

int oracle(const std::string& problem, int max_domain, std::ostream& out) {
  try {
    ProblemFile p = parse_problem(problem);
    std::vector<Formula> hyps = p.hypotheses;
    for (const auto& o : p.objects)
      if (o.definition) hyps.push_back(Formula::eq(Term::constant(o.name), *o.definition));
    auto m = countermodel(hyps, p.conclusion, max_domain);
    if (!m) {
      out << "entailed up to domain size " << max_domain << "\n";
      return 0;
    }
    out << "countermodel of size " << m->size << "\n";
    for (const auto& [name, table] : m->functions) {
      out << "  " << name << " =";
      for (int v : table) out << " " << v;
      out << "\n";
    }
    for (const auto& [name, table] : m->predicates) {
      out << "  " << name << " =";
      for (bool v : table) out << " " << (v ? 1 : 0);
      out << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    out << "error " << describe(e) << "\n";
    return 2;
  }
}

}  // namespace sublink::cli
