#include "scenario.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "error.hpp"

namespace failnet {

Scenario build_scenario(const KnowledgeBase &kb, const std::string &id,
                        const std::string &name,
                        const std::vector<std::string> &function_ids, int depth,
                        int criticality) {
  if (function_ids.empty())
    throw Error(ErrorCode::InvalidScenario,
                "a scenario needs at least one function");
  if (depth < 1)
    throw Error(ErrorCode::InvalidScenario, "depth must be >= 1");
  if (criticality < 1 || criticality > 10)
    throw Error(ErrorCode::InvalidScenario, "criticality must be in 1..10");

  Scenario scenario;
  scenario.id = id;
  scenario.name = name.empty() ? id : name;
  scenario.criticality = criticality;
  for (const auto &fid : function_ids) {
    const Element &element = kb.element(fid); // throws UnknownElement
    if (element.kind != ElementKind::Function)
      throw Error(ErrorCode::WrongKind,
                  "'" + fid + "' is a " + to_string(element.kind) +
                      ", expected a function");
    scenario.functions.push_back(fid);
  }
  std::sort(scenario.functions.begin(), scenario.functions.end());
  scenario.functions.erase(
      std::unique(scenario.functions.begin(), scenario.functions.end()),
      scenario.functions.end());

  // Undirected breadth-first expansion, `depth` hops.
  std::map<std::string, int> distance;
  std::deque<std::string> frontier;
  for (const auto &fid : scenario.functions) {
    distance[fid] = 0;
    frontier.push_back(fid);
  }
  while (!frontier.empty()) {
    std::string current = frontier.front();
    frontier.pop_front();
    int d = distance[current];
    if (d == depth)
      continue;
    for (const Link &link : kb.links()) {
      std::string other;
      if (link.from == current)
        other = link.to;
      else if (link.to == current)
        other = link.from;
      else
        continue;
      if (distance.emplace(other, d + 1).second)
        frontier.push_back(other);
    }
  }
  for (const auto &[eid, d] : distance)
    scenario.elements.insert(eid);

  for (const Link &link : kb.links()) {
    if (link.kind == LinkKind::Precedes && scenario.elements.count(link.from) &&
        scenario.elements.count(link.to))
      scenario.event_order.emplace_back(link.from, link.to);
  }
  std::sort(scenario.event_order.begin(), scenario.event_order.end());
  return scenario;
}

namespace {

bool order_has_cycle(const std::vector<std::pair<std::string, std::string>> &edges) {
  std::map<std::string, std::vector<std::string>> adjacency;
  std::set<std::string> nodes;
  for (const auto &[from, to] : edges) {
    adjacency[from].push_back(to);
    nodes.insert(from);
    nodes.insert(to);
  }
  std::map<std::string, int> state; // 0 unseen, 1 active, 2 done
  std::function<bool(const std::string &)> visit =
      [&](const std::string &node) -> bool {
    int &s = state[node];
    if (s == 1)
      return true;
    if (s == 2)
      return false;
    s = 1;
    for (const auto &next : adjacency[node])
      if (visit(next))
        return true;
    s = 2;
    return false;
  };
  for (const auto &node : nodes)
    if (visit(node))
      return true;
  return false;
}

} // namespace

ValidationReport validate_scenario(const KnowledgeBase &kb,
                                   const Scenario &scenario) {
  ValidationReport report;
  if (scenario.id.empty())
    report.add("invalid_scenario", scenario.id, "empty scenario id");
  if (scenario.functions.empty())
    report.add("invalid_scenario", scenario.id, "no functions selected");
  if (scenario.criticality < 1 || scenario.criticality > 10)
    report.add("invalid_scenario", scenario.id, "criticality outside 1..10");
  for (const auto &fid : scenario.functions) {
    const Element *element = kb.find(fid);
    if (!element) {
      report.add("dangling_reference", fid, "function not in knowledge base");
    } else if (element->kind != ElementKind::Function) {
      report.add("wrong_kind", fid,
                 std::string("expected function, found ") +
                     to_string(element->kind));
    }
    if (!scenario.elements.count(fid))
      report.add("invalid_scenario", fid, "function missing from element scope");
  }
  for (const auto &eid : scenario.elements)
    if (!kb.contains(eid))
      report.add("dangling_reference", eid, "element not in knowledge base");
  for (const auto &[from, to] : scenario.event_order) {
    for (const auto &eid : {from, to}) {
      if (!scenario.elements.count(eid)) {
        report.add("invalid_scenario", eid, "event order names element outside scope");
        continue;
      }
      const Element *element = kb.find(eid);
      if (element && element->kind != ElementKind::Event)
        report.add("wrong_kind", eid, "event order entry is not an event");
    }
  }
  if (order_has_cycle(scenario.event_order))
    report.add("event_order_cycle", scenario.id, "temporal order contains a cycle");
  report.sort();
  return report;
}

} // namespace failnet
