#include "sublink/formula.hpp"

#include <cctype>

namespace sublink {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Pred: return "Pred";
    case Kind::Eq: return "Eq";
    case Kind::True: return "True";
    case Kind::False: return "False";
    case Kind::And: return "And";
    case Kind::Or: return "Or";
    case Kind::Imp: return "Imp";
    case Kind::Forall: return "Forall";
    case Kind::Exists: return "Exists";
  }
  return "?";
}

namespace {

const Formula& shared_top() {
  static const Formula f = Formula::top();
  return f;
}

}  // namespace

Formula::Formula() : Formula(shared_top()) {}

Formula Formula::pred(std::string name, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(Node{Kind::Pred, std::move(name), std::move(args), {}}));
}

Formula Formula::eq(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Eq, "", {std::move(lhs), std::move(rhs)}, {}}));
}

Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Kind::True, "", {}, {}})); }

Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::False, "", {}, {}}));
  return f;
}

Formula Formula::binary(Kind k, Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{k, "", {}, {std::move(a), std::move(b)}}));
}

Formula Formula::conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::imp(Formula a, Formula b) { return binary(Kind::Imp, std::move(a), std::move(b)); }

Formula Formula::quantifier(Kind k, std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{k, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::forall(std::string var, Formula body) {
  return quantifier(Kind::Forall, std::move(var), std::move(body));
}
Formula Formula::exists(std::string var, Formula body) {
  return quantifier(Kind::Exists, std::move(var), std::move(body));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.terms() == b.terms() &&
         a.children() == b.children();
}

namespace {

void free_vars_into(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f.is_atom()) {
    std::set<std::string> vs;
    for (const auto& t : f.terms()) collect_vars(t, vs);
    for (const auto& v : vs)
      if (!bound.count(v)) out.insert(v);
    return;
  }
  if (f.is_quantifier()) {
    bool fresh = bound.insert(f.var()).second;
    free_vars_into(f.body(), bound, out);
    if (fresh) bound.erase(f.var());
    return;
  }
  for (const auto& c : f.children()) free_vars_into(c, bound, out);
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars_into(f, bound, out);
  return out;
}

std::set<std::string> bound_vars(const Formula& f) {
  std::set<std::string> out;
  if (f.is_quantifier()) out.insert(f.var());
  for (const auto& c : f.children()) out.merge(bound_vars(c));
  return out;
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  if (f.is(Kind::Pred)) out.insert(f.name());
  if (f.is_quantifier()) out.insert(f.var());
  for (const auto& t : f.terms()) {
    collect_vars(t, out);
    std::map<std::string, std::size_t> fs;
    collect_functions(t, fs);
    for (const auto& [name, _] : fs) out.insert(name);
  }
  for (const auto& c : f.children()) collect_names(c, out);
}

void collect_functions(const Formula& f, std::map<std::string, std::size_t>& out) {
  for (const auto& t : f.terms()) collect_functions(t, out);
  for (const auto& c : f.children()) collect_functions(c, out);
}

void collect_predicates(const Formula& f, std::map<std::string, std::size_t>& out) {
  if (f.is(Kind::Pred)) out.emplace(f.name(), f.terms().size());
  for (const auto& c : f.children()) collect_predicates(c, out);
}

std::size_t connective_count(const Formula& f) {
  if (f.is_atom() || f.is_unit()) return 0;
  std::size_t n = 1;
  for (const auto& c : f.children()) n += connective_count(c);
  return n;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "v";
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!used.count(candidate)) return candidate;
  }
}

namespace {

Formula map_terms(const Formula& f, const TermMap& sigma) {
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) ts.push_back(apply(sigma, t));
  if (f.is(Kind::Eq)) return Formula::eq(ts[0], ts[1]);
  return Formula::pred(f.name(), std::move(ts));
}

}  // namespace

Formula substitute(const Formula& f, const TermMap& sigma) {
  if (sigma.empty()) return f;
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
      return f;
    case Kind::Pred:
    case Kind::Eq:
      return map_terms(f, sigma);
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return Formula::binary(f.kind(), substitute(f.left(), sigma), substitute(f.right(), sigma));
    case Kind::Forall:
    case Kind::Exists: {
      TermMap inner = sigma;
      inner.erase(f.var());
      auto fv = free_vars(f.body());
      for (auto it = inner.begin(); it != inner.end();) {
        if (!fv.count(it->first))
          it = inner.erase(it);
        else
          ++it;
      }
      if (inner.empty()) return f;
      std::set<std::string> range;
      for (const auto& [_, t] : inner) collect_vars(t, range);
      std::string var = f.var();
      if (range.count(var)) {
        std::set<std::string> used = range;
        collect_names(f.body(), used);
        for (const auto& [k, _] : inner) used.insert(k);
        var = fresh_name(var, used);
        inner.emplace(f.var(), Term::var(var));
      }
      return Formula::quantifier(f.kind(), var, substitute(f.body(), inner));
    }
  }
  return f;
}

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  return substitute(f, TermMap{{var, t}});
}

Formula replace_term(const Formula& f, const Term& from, const Term& to) {
  if (f.is_atom()) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) ts.push_back(replace_subterm(t, from, to));
    if (f.is(Kind::Eq)) return Formula::eq(ts[0], ts[1]);
    return Formula::pred(f.name(), std::move(ts));
  }
  if (f.is_quantifier()) {
    if (occurs(f.var(), from)) return f;
    return Formula::quantifier(f.kind(), f.var(), replace_term(f.body(), from, to));
  }
  if (f.is_binary())
    return Formula::binary(f.kind(), replace_term(f.left(), from, to),
                           replace_term(f.right(), from, to));
  return f;
}

namespace {

using Scope = std::map<std::string, std::size_t>;

bool alpha_term(const Term& a, const Term& b, const Scope& sa, const Scope& sb) {
  if (a.kind() != b.kind()) return false;
  if (a.is_var()) {
    auto ia = sa.find(a.name());
    auto ib = sb.find(b.name());
    if (ia == sa.end() || ib == sb.end()) return ia == sa.end() && ib == sb.end() && a.name() == b.name();
    return ia->second == ib->second;
  }
  if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], b.args()[i], sa, sb)) return false;
  return true;
}

bool alpha_rec(const Formula& f, const Formula& g, Scope& sf, Scope& sg, std::size_t depth) {
  if (f.kind() != g.kind()) return false;
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Pred:
    case Kind::Eq:
      if (f.name() != g.name() || f.terms().size() != g.terms().size()) return false;
      for (std::size_t i = 0; i < f.terms().size(); ++i)
        if (!alpha_term(f.terms()[i], g.terms()[i], sf, sg)) return false;
      return true;
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return alpha_rec(f.left(), g.left(), sf, sg, depth) &&
             alpha_rec(f.right(), g.right(), sf, sg, depth);
    case Kind::Forall:
    case Kind::Exists: {
      Scope nf = sf, ng = sg;
      nf[f.var()] = depth;
      ng[g.var()] = depth;
      return alpha_rec(f.body(), g.body(), nf, ng, depth + 1);
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const Formula& f, const Formula& g) {
  Scope sf, sg;
  return alpha_rec(f, g, sf, sg, 0);
}

Formula barendregt(const Formula& f, std::set<std::string>& used) {
  // Names occurring in f must not be chosen as fresh names, but binders that
  // are not yet in `used` keep their name.
  std::set<std::string> names;
  collect_names(f, names);
  std::set<std::string> bound = bound_vars(f);
  std::set<std::string> reserved = used;
  for (const auto& n : names)
    if (!bound.count(n)) reserved.insert(n);
  for (const auto& v : free_vars(f)) reserved.insert(v);
  // Reserve the remaining names so that fresh names never collide with a
  // binder that appears later in the traversal.
  std::set<std::string> pending;
  for (const auto& b : bound)
    if (!reserved.count(b)) pending.insert(b);

  struct Walker {
    std::set<std::string>& taken;
    const std::set<std::string>& pending;
    Formula go(const Formula& g) {
      if (g.is_quantifier()) {
        std::string var = g.var();
        Formula body = g.body();
        if (taken.count(var)) {
          std::set<std::string> avoid = taken;
          avoid.insert(pending.begin(), pending.end());
          var = fresh_name(var, avoid);
          body = substitute(body, g.var(), Term::var(var));
        }
        taken.insert(var);
        return Formula::quantifier(g.kind(), var, go(body));
      }
      if (g.is_binary()) {
        Formula l = go(g.left());
        Formula r = go(g.right());
        return Formula::binary(g.kind(), l, r);
      }
      return g;
    }
  };
  Walker w{reserved, pending};
  Formula out = w.go(f);
  used.insert(reserved.begin(), reserved.end());
  return out;
}

}  // namespace sublink
