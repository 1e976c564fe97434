#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace sublink::cli {

// Each returns the process exit code: 0 success, 1 a failed check, 2 bad input.

// Replays a trace, printing one line per action and the final goal count.
int check(const nlohmann::json& trace, std::ostream& out);
// Replays the actions of `trace` on `problem` and prints the final state.
int run(const std::string& problem, const nlohmann::json& trace, std::ostream& out);
// Prints the classification of src against dst, or against every path of the
// dst item when `dst` names only an item. Selections are "item" or "item:0,1".
int candidates(const std::string& problem, int goal, const std::string& src,
               const std::string& dst, std::ostream& out);
// Classical entailment of the goal by the hypotheses (and object
// definitions) over domains of size 1..max_domain.
int oracle(const std::string& problem, int max_domain, std::ostream& out);

}  // namespace sublink::cli
