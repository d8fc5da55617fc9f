#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knowledge_base.hpp"

namespace failnet {

// A critical usage process: selected functions plus every element within a
// bounded hop distance, and the temporal order of the events in scope.
// Immutable value after construction.
struct Scenario {
  std::string id;
  std::string name;
  std::vector<std::string> functions; // sorted, unique, non-empty
  std::set<std::string> elements;     // scope, includes the functions
  std::vector<std::pair<std::string, std::string>> event_order; // Precedes pairs
  int criticality = 5; // 1..10

  bool operator==(const Scenario &) const = default;
};

// Breadth-first closure around `function_ids`: every element reachable within
// `depth` hops over any link kind, in either direction. event_order is the
// set of Precedes edges between events in scope. criticality defaults to 5.
Scenario build_scenario(const KnowledgeBase &kb, const std::string &id,
                        const std::string &name,
                        const std::vector<std::string> &function_ids, int depth,
                        int criticality = 5);

ValidationReport validate_scenario(const KnowledgeBase &kb,
                                   const Scenario &scenario);

} // namespace failnet
