#pragma once

#include <vector>

#include "sublink/path.hpp"
#include "sublink/rules.hpp"
#include "sublink/syntax.hpp"

namespace sublink {

// Normal form for the unit rules (neul, neur, absl, absr, absq, efq),
// rewriting innermost redexes first. Steps are appended to `trace` if given.
Formula eliminate_units(const Formula& f, std::vector<TraceStep>* trace = nullptr,
                        const SyntaxOptions& opts = {});

// The unit rule applicable at the root of `f`, if any.
std::optional<RuleId> unit_redex(const Formula& f);

bool has_unit_redex(const Formula& f);

}  // namespace sublink
