#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace sublink {

enum class RuleId {
  Id, LEq1, LEq2,
  LAnd1, LAnd2, RAnd1, RAnd2,
  LOr1, LOr2, ROr1, ROr2,
  LImp2, RImp1, RImp2,
  LForallI, LForallS, RForallS,
  LExistsS, RExistsI, RExistsS,
  FEq1, FEq2,
  FAnd1, FAnd2, FOr1, FOr2, FImp1, FImp2,
  FForallI, FForallS, FExistsS, FComm,
  Neul, Neur, Absl, Absr, Absq, Efq,
};

// Display name, e.g. "L∀i" or "neur".
const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);
bool invertible(RuleId r);
bool is_unit_rule(RuleId r);

// One rewrite step with the whole formula rendered after it.
struct TraceStep {
  RuleId rule;
  std::string state;
};

}  // namespace sublink
