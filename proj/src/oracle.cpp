#include "sublink/oracle.hpp"

namespace sublink {

namespace {

std::size_t table_index(const std::vector<int>& args, int size) {
  std::size_t idx = 0;
  for (int a : args) idx = idx * static_cast<std::size_t>(size) + static_cast<std::size_t>(a);
  return idx;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

bool eval_in(const FiniteModel& m, const Formula& f, std::map<std::string, int>& env);

int value_in(const FiniteModel& m, const Term& t, const std::map<std::string, int>& env) {
  if (t.is_var()) {
    auto it = env.find(t.name());
    if (it == env.end()) throw UninterpretedSymbol(t.name());
    return it->second;
  }
  auto it = m.functions.find(t.name());
  if (it == m.functions.end()) throw UninterpretedSymbol(t.name());
  std::vector<int> args;
  for (const auto& a : t.args()) args.push_back(value_in(m, a, env));
  return it->second.at(table_index(args, m.size));
}

bool quantify(const FiniteModel& m, const Formula& f, std::map<std::string, int>& env) {
  auto saved = env.find(f.var()) == env.end() ? std::nullopt : std::optional<int>(env[f.var()]);
  bool universal = f.is(Kind::Forall);
  bool result = universal;
  for (int d = 0; d < m.size; ++d) {
    env[f.var()] = d;
    if (eval_in(m, f.body(), env) != universal) {
      result = !universal;
      break;
    }
  }
  if (saved)
    env[f.var()] = *saved;
  else
    env.erase(f.var());
  return result;
}

bool eval_in(const FiniteModel& m, const Formula& f, std::map<std::string, int>& env) {
  switch (f.kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Eq: return value_in(m, f.lhs(), env) == value_in(m, f.rhs(), env);
    case Kind::Pred: {
      auto it = m.predicates.find(f.name());
      if (it == m.predicates.end()) throw UninterpretedSymbol(f.name());
      std::vector<int> args;
      for (const auto& a : f.terms()) args.push_back(value_in(m, a, env));
      return it->second.at(table_index(args, m.size));
    }
    case Kind::And: return eval_in(m, f.left(), env) && eval_in(m, f.right(), env);
    case Kind::Or: return eval_in(m, f.left(), env) || eval_in(m, f.right(), env);
    case Kind::Imp: return !eval_in(m, f.left(), env) || eval_in(m, f.right(), env);
    case Kind::Forall:
    case Kind::Exists: return quantify(m, f, env);
  }
  return false;
}

}  // namespace

int FiniteModel::value(const Term& t) const { return value_in(*this, t, env); }

bool eval(const FiniteModel& m, const Formula& f) {
  std::map<std::string, int> env = m.env;
  return eval_in(m, f, env);
}

std::optional<FiniteModel> countermodel(const std::vector<Formula>& hyps, const Formula& concl,
                                        int max_domain, std::uint64_t limit) {
  std::map<std::string, std::size_t> funs, preds;
  collect_functions(concl, funs);
  collect_predicates(concl, preds);
  for (const auto& h : hyps) {
    collect_functions(h, funs);
    collect_predicates(h, preds);
  }

  for (int n = 1; n <= max_domain; ++n) {
    FiniteModel m;
    m.size = n;
    // One digit per table entry: radix n for functions, 2 for predicates.
    for (const auto& [name, arity] : funs) m.functions[name].assign(power(n, arity), 0);
    std::size_t fentries = 0, pentries = 0;
    for (const auto& [name, arity] : funs) fentries += power(n, arity);
    for (const auto& [name, arity] : preds) {
      m.predicates[name].assign(power(n, arity), false);
      pentries += power(n, arity);
    }
    double count = 1;
    for (std::size_t i = 0; i < fentries && count <= static_cast<double>(limit); ++i) count *= n;
    for (std::size_t i = 0; i < pentries && count <= static_cast<double>(limit); ++i) count *= 2;
    if (count > static_cast<double>(limit))
      throw ResourceLimit("more than " + std::to_string(limit) + " interpretations of size " +
                          std::to_string(n));

    while (true) {
      bool all = true;
      for (const auto& h : hyps)
        if (!eval(m, h)) {
          all = false;
          break;
        }
      if (all && !eval(m, concl)) return m;
      // Advance the odometer: functions first, then predicates.
      bool carried = true;
      for (auto& [name, table] : m.functions) {
        for (auto& v : table) {
          if (++v < n) {
            carried = false;
            break;
          }
          v = 0;
        }
        if (!carried) break;
      }
      if (carried) {
        for (auto& [name, table] : m.predicates) {
          for (std::size_t i = 0; i < table.size(); ++i) {
            if (!table[i]) {
              table[i] = true;
              carried = false;
              break;
            }
            table[i] = false;
          }
          if (!carried) break;
        }
      }
      if (carried) break;
    }
  }
  return std::nullopt;
}

bool entails(const std::vector<Formula>& hyps, const Formula& concl, int max_domain,
             std::uint64_t limit) {
  return !countermodel(hyps, concl, max_domain, limit).has_value();
}

}  // namespace sublink
