#include "sublink/rules.hpp"

#include <array>
#include <utility>

namespace sublink {

namespace {

constexpr std::array<std::pair<RuleId, const char*>, 38> kNames{{
    {RuleId::Id, "id"},          {RuleId::LEq1, "L=1"},       {RuleId::LEq2, "L=2"},
    {RuleId::LAnd1, "L∧1"},      {RuleId::LAnd2, "L∧2"},      {RuleId::RAnd1, "R∧1"},
    {RuleId::RAnd2, "R∧2"},      {RuleId::LOr1, "L∨1"},       {RuleId::LOr2, "L∨2"},
    {RuleId::ROr1, "R∨1"},       {RuleId::ROr2, "R∨2"},       {RuleId::LImp2, "L⇒2"},
    {RuleId::RImp1, "R⇒1"},      {RuleId::RImp2, "R⇒2"},      {RuleId::LForallI, "L∀i"},
    {RuleId::LForallS, "L∀s"},   {RuleId::RForallS, "R∀s"},   {RuleId::LExistsS, "L∃s"},
    {RuleId::RExistsI, "R∃i"},   {RuleId::RExistsS, "R∃s"},   {RuleId::FEq1, "F=1"},
    {RuleId::FEq2, "F=2"},       {RuleId::FAnd1, "F∧1"},      {RuleId::FAnd2, "F∧2"},
    {RuleId::FOr1, "F∨1"},       {RuleId::FOr2, "F∨2"},       {RuleId::FImp1, "F⇒1"},
    {RuleId::FImp2, "F⇒2"},      {RuleId::FForallI, "F∀i"},   {RuleId::FForallS, "F∀s"},
    {RuleId::FExistsS, "F∃s"},   {RuleId::FComm, "Fcomm"},    {RuleId::Neul, "neul"},
    {RuleId::Neur, "neur"},      {RuleId::Absl, "absl"},      {RuleId::Absr, "absr"},
    {RuleId::Absq, "absq"},      {RuleId::Efq, "efq"},
}};

}  // namespace

const char* rule_name(RuleId r) {
  for (const auto& [id, name] : kNames)
    if (id == r) return name;
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& [id, n] : kNames)
    if (name == n) return id;
  return std::nullopt;
}

bool invertible(RuleId r) {
  switch (r) {
    case RuleId::LOr1:
    case RuleId::LOr2:
    case RuleId::RImp1:
    case RuleId::RImp2:
    case RuleId::RForallS:
    case RuleId::LExistsS:
    case RuleId::FExistsS:
      return true;
    default:
      return false;
  }
}

bool is_unit_rule(RuleId r) {
  switch (r) {
    case RuleId::Neul:
    case RuleId::Neur:
    case RuleId::Absl:
    case RuleId::Absr:
    case RuleId::Absq:
    case RuleId::Efq:
      return true;
    default:
      return false;
  }
}

}  // namespace sublink
