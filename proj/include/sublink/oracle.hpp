#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sublink/formula.hpp"

namespace sublink {

class UninterpretedSymbol : public std::runtime_error {
 public:
  explicit UninterpretedSymbol(const std::string& name)
      : std::runtime_error("symbol " + name + " has no interpretation") {}
};

class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// Classical interpretation over the domain {0, ..., size-1}. Tables are
// indexed by the arguments read as a base-`size` number, first argument most
// significant.
struct FiniteModel {
  int size = 1;
  std::map<std::string, std::vector<int>> functions;
  std::map<std::string, std::vector<bool>> predicates;
  std::map<std::string, int> env;

  int value(const Term& t) const;
};

bool eval(const FiniteModel& m, const Formula& f);

inline constexpr std::uint64_t kDefaultModelLimit = 10'000'000;

// Every model of size 1..max_domain satisfying all hypotheses satisfies the
// conclusion. Throws ResourceLimit when a domain size has more than `limit`
// interpretations.
bool entails(const std::vector<Formula>& hyps, const Formula& concl, int max_domain,
             std::uint64_t limit = kDefaultModelLimit);

std::optional<FiniteModel> countermodel(const std::vector<Formula>& hyps, const Formula& concl,
                                        int max_domain, std::uint64_t limit = kDefaultModelLimit);

}  // namespace sublink
