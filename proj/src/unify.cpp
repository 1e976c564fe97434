#include "sublink/unify.hpp"

#include <map>
#include <set>

namespace sublink {

const char* failure_name(UnifyFailure f) {
  switch (f) {
    case UnifyFailure::Clash: return "Clash";
    case UnifyFailure::OccursCheck: return "OccursCheck";
    case UnifyFailure::Cycle: return "Cycle";
    case UnifyFailure::RigidMismatch: return "RigidMismatch";
  }
  return "?";
}

QuantifierProfile profile(const Context& context, Side side) {
  QuantifierProfile out;
  int inv = 0;
  Polarity root = side == Side::Hypothesis ? Polarity::Negative : Polarity::Positive;
  for (const auto& fr : context.frames()) {
    if (fr.kind == Kind::Forall || fr.kind == Kind::Exists) {
      Polarity pol = inv % 2 == 0 ? root : flip(root);
      bool inst = (fr.kind == Kind::Forall && pol == Polarity::Negative) ||
                  (fr.kind == Kind::Exists && pol == Polarity::Positive);
      out.push_back({fr.var, fr.kind, pol, inst ? Rigidity::Instantiable : Rigidity::Rigid,
                     out.size(), inv});
    }
    if (fr.kind == Kind::Imp && fr.hole == 0) ++inv;
  }
  return out;
}

QuantifierProfile profile(const Formula& item, const Path& path, Side side) {
  return profile(resolve(item, path).context, side);
}

namespace {

struct Failed {
  UnifyFailure reason;
};

// Names introduced while unifying under binders inside the selections; they
// are local constants that must not escape into the substitution.
constexpr char kLocalPrefix = '#';

bool is_local(const std::string& v) { return !v.empty() && v.front() == kLocalPrefix; }

class Unifier {
 public:
  Unifier(const QuantifierProfile& pa, const QuantifierProfile& pb) {
    for (const auto& b : pa)
      if (b.rigidity == Rigidity::Instantiable) side_[b.name] = 0;
    for (const auto& b : pb)
      if (b.rigidity == Rigidity::Instantiable) side_[b.name] = 1;
  }

  void terms(const Term& s0, const Term& t0) {
    Term s = walk(s0), t = walk(t0);
    if (s.is_var() && t.is_var() && s.name() == t.name()) return;
    bool si = instantiable(s), ti = instantiable(t);
    if (si && ti) {
      // Bind the pa-side variable to the pb-side one.
      if (side_.at(s.name()) == 1 && side_.at(t.name()) == 0)
        bind(t.name(), s);
      else
        bind(s.name(), t);
      return;
    }
    if (si) return bind(s.name(), t);
    if (ti) return bind(t.name(), s);
    if (s.is_var() && t.is_var()) throw Failed{UnifyFailure::RigidMismatch};
    if (s.is_var() || t.is_var()) throw Failed{UnifyFailure::Clash};
    if (s.name() != t.name() || s.args().size() != t.args().size())
      throw Failed{UnifyFailure::Clash};
    for (std::size_t i = 0; i < s.args().size(); ++i) terms(s.args()[i], t.args()[i]);
  }

  void formulas(const Formula& f, const Formula& g) {
    if (f.kind() != g.kind()) throw Failed{UnifyFailure::Clash};
    switch (f.kind()) {
      case Kind::True:
      case Kind::False:
        return;
      case Kind::Pred:
      case Kind::Eq:
        if (f.name() != g.name() || f.terms().size() != g.terms().size())
          throw Failed{UnifyFailure::Clash};
        for (std::size_t i = 0; i < f.terms().size(); ++i) terms(f.terms()[i], g.terms()[i]);
        return;
      case Kind::And:
      case Kind::Or:
      case Kind::Imp:
        formulas(f.left(), g.left());
        formulas(f.right(), g.right());
        return;
      case Kind::Forall:
      case Kind::Exists: {
        Term local = Term::var(kLocalPrefix + std::to_string(locals_++));
        formulas(substitute(f.body(), f.var(), local), substitute(g.body(), g.var(), local));
        return;
      }
    }
  }

  TermMap result() const {
    TermMap out;
    for (const auto& [v, _] : bindings_) out.emplace(v, resolve_fully(Term::var(v)));
    return out;
  }

 private:
  bool instantiable(const Term& t) const { return t.is_var() && side_.count(t.name()); }

  Term walk(Term t) const {
    while (t.is_var()) {
      auto it = bindings_.find(t.name());
      if (it == bindings_.end()) break;
      t = it->second;
    }
    return t;
  }

  Term resolve_fully(const Term& t) const {
    Term w = walk(t);
    if (w.is_var() || w.args().empty()) return w;
    std::vector<Term> args;
    for (const auto& a : w.args()) args.push_back(resolve_fully(a));
    return Term::app(w.name(), std::move(args));
  }

  void bind(const std::string& v, const Term& t) {
    Term full = resolve_fully(t);
    if (occurs(v, full)) throw Failed{UnifyFailure::OccursCheck};
    for (const auto& name : vars_of(full))
      if (is_local(name)) throw Failed{UnifyFailure::Cycle};
    bindings_.emplace(v, t);
  }

  std::map<std::string, int> side_;
  std::map<std::string, Term> bindings_;
  std::size_t locals_ = 0;
};

}  // namespace

UnifyOutcome solve(const Expr& a, const Expr& b, const QuantifierProfile& pa,
                   const QuantifierProfile& pb) {
  if (a.index() != b.index()) return UnifyOutcome::failure(UnifyFailure::Clash);
  Unifier u(pa, pb);
  try {
    if (is_formula(a))
      u.formulas(std::get<Formula>(a), std::get<Formula>(b));
    else
      u.terms(std::get<Term>(a), std::get<Term>(b));
  } catch (const Failed& f) {
    return UnifyOutcome::failure(f.reason);
  }
  UnifyOutcome out;
  out.success = true;
  out.sigma = u.result();
  return out;
}

bool dependency_order(const TermMap& sigma, const QuantifierProfile& pa,
                      const QuantifierProfile& pb, const std::vector<Edge>& extra,
                      std::vector<std::string>& order) {
  std::vector<std::string> nodes;
  std::map<std::string, std::size_t> index;
  for (const auto* p : {&pa, &pb})
    for (const auto& b : *p) {
      index.emplace(b.name, nodes.size());
      nodes.push_back(b.name);
    }
  std::vector<std::set<std::size_t>> succ(nodes.size());
  auto edge = [&](const std::string& from, const std::string& to) {
    auto i = index.find(from), j = index.find(to);
    if (i == index.end() || j == index.end() || i->second == j->second) return;
    succ[i->second].insert(j->second);
  };
  for (const auto* p : {&pa, &pb})
    for (std::size_t k = 1; k < p->size(); ++k) edge((*p)[k - 1].name, (*p)[k].name);
  for (const auto& [x, t] : sigma)
    for (const auto& v : vars_of(t)) edge(v, x);
  for (const auto& [from, to] : extra) edge(from, to);

  std::vector<std::size_t> indegree(nodes.size(), 0);
  for (const auto& s : succ)
    for (auto j : s) ++indegree[j];
  std::vector<std::string> out;
  std::vector<bool> done(nodes.size(), false);
  for (std::size_t round = 0; round < nodes.size(); ++round) {
    std::size_t pick = nodes.size();
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (!done[i] && indegree[i] == 0) {
        pick = i;
        break;
      }
    if (pick == nodes.size()) return false;
    done[pick] = true;
    out.push_back(nodes[pick]);
    for (auto j : succ[pick]) --indegree[j];
  }
  order = std::move(out);
  return true;
}

bool order_bindings(TermMap& sigma, const QuantifierProfile& pa, const QuantifierProfile& pb,
                    const std::vector<Edge>& extra, std::vector<std::string>& order) {
  if (dependency_order(sigma, pa, pb, extra, order)) return true;
  std::set<std::string> inst;
  for (const auto* p : {&pa, &pb})
    for (const auto& b : *p)
      if (b.rigidity == Rigidity::Instantiable) inst.insert(b.name);
  // Groups keyed by their unbound root.
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [x, t] : sigma)
    if (t.is_var() && inst.count(t.name()) && !sigma.count(t.name())) groups[t.name()].push_back(x);
  std::vector<std::vector<std::string>> choices;
  std::vector<std::string> roots;
  for (auto& [root, members] : groups) {
    members.insert(members.begin(), root);
    roots.push_back(root);
    choices.push_back(members);
  }
  std::vector<std::size_t> pick(choices.size(), 0);
  for (std::size_t tries = 0; tries < 4096; ++tries) {
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) return false;
    TermMap rename;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      Term rep = Term::var(choices[i][pick[i]]);
      for (const auto& m : choices[i])
        if (m != rep.name()) rename.insert_or_assign(m, rep);
    }
    TermMap next;
    for (const auto& [x, t] : sigma) {
      Term u = sublink::apply(rename, t);
      if (!rename.count(x) && !(u.is_var() && u.name() == x)) next.emplace(x, u);
    }
    for (const auto& [x, t] : rename) next.emplace(x, t);
    if (dependency_order(next, pa, pb, extra, order)) {
      sigma = std::move(next);
      return true;
    }
  }
  return false;
}

UnifyOutcome unify(const Expr& a, const Expr& b, const QuantifierProfile& pa,
                   const QuantifierProfile& pb) {
  UnifyOutcome out = solve(a, b, pa, pb);
  if (!out) return out;
  if (!order_bindings(out.sigma, pa, pb, {}, out.order))
    return UnifyOutcome::failure(UnifyFailure::Cycle);
  return out;
}

}  // namespace sublink
