#include "sublink/term.hpp"

#include <algorithm>

namespace sublink {

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

Term Term::app(std::string fun, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{Kind::App, std::move(fun), std::move(args)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  return a.args() == b.args();
}

bool operator<(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.name() != b.name()) return a.name() < b.name();
  return std::lexicographical_compare(a.args().begin(), a.args().end(), b.args().begin(),
                                      b.args().end());
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

std::set<std::string> vars_of(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

bool occurs(const std::string& var, const Term& t) {
  if (t.is_var()) return t.name() == var;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return occurs(var, a); });
}

Term apply(const TermMap& sigma, const Term& t) {
  if (sigma.empty()) return t;
  if (t.is_var()) {
    auto it = sigma.find(t.name());
    return it == sigma.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(apply(sigma, a));
  return Term::app(t.name(), std::move(args));
}

Term replace_subterm(const Term& t, const Term& from, const Term& to) {
  if (t == from) return to;
  if (t.is_var() || t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(replace_subterm(a, from, to));
  return Term::app(t.name(), std::move(args));
}

void collect_functions(const Term& t, std::map<std::string, std::size_t>& out) {
  if (t.is_var()) return;
  out.emplace(t.name(), t.args().size());
  for (const auto& a : t.args()) collect_functions(a, out);
}

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for (const auto& a : t.args()) n += term_size(a);
  return n;
}

}  // namespace sublink
