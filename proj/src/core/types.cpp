#include "types.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace failnet {

const char *to_string(ElementKind kind) {
  switch (kind) {
  case ElementKind::Component:
    return "component";
  case ElementKind::Function:
    return "function";
  case ElementKind::Event:
    return "event";
  case ElementKind::Effect:
    return "effect";
  case ElementKind::EnvironmentalFactor:
    return "environmental_factor";
  case ElementKind::Actor:
    return "actor";
  case ElementKind::Process:
    return "process";
  case ElementKind::Requirement:
    return "requirement";
  case ElementKind::Stakeholder:
    return "stakeholder";
  }
  return "component";
}

const char *to_string(LinkKind kind) {
  switch (kind) {
  case LinkKind::Realizes:
    return "realizes";
  case LinkKind::Causes:
    return "causes";
  case LinkKind::ResultsIn:
    return "results_in";
  case LinkKind::Triggers:
    return "triggers";
  case LinkKind::Influences:
    return "influences";
  case LinkKind::Precedes:
    return "precedes";
  case LinkKind::Requires:
    return "requires";
  case LinkKind::Performs:
    return "performs";
  case LinkKind::Uses:
    return "uses";
  case LinkKind::PartOf:
    return "part_of";
  }
  return "realizes";
}

std::optional<ElementKind> element_kind_from_string(const std::string &name) {
  static const std::pair<const char *, ElementKind> table[] = {
      {"component", ElementKind::Component},
      {"function", ElementKind::Function},
      {"event", ElementKind::Event},
      {"effect", ElementKind::Effect},
      {"environmental_factor", ElementKind::EnvironmentalFactor},
      {"actor", ElementKind::Actor},
      {"process", ElementKind::Process},
      {"requirement", ElementKind::Requirement},
      {"stakeholder", ElementKind::Stakeholder},
  };
  for (const auto &[text, kind] : table)
    if (name == text)
      return kind;
  return std::nullopt;
}

std::optional<LinkKind> link_kind_from_string(const std::string &name) {
  static const std::pair<const char *, LinkKind> table[] = {
      {"realizes", LinkKind::Realizes},   {"causes", LinkKind::Causes},
      {"results_in", LinkKind::ResultsIn}, {"triggers", LinkKind::Triggers},
      {"influences", LinkKind::Influences}, {"precedes", LinkKind::Precedes},
      {"requires", LinkKind::Requires},   {"performs", LinkKind::Performs},
      {"uses", LinkKind::Uses},           {"part_of", LinkKind::PartOf},
  };
  for (const auto &[text, kind] : table)
    if (name == text)
      return kind;
  return std::nullopt;
}

bool link_kind_allows(LinkKind kind, ElementKind from, ElementKind to) {
  switch (kind) {
  case LinkKind::Realizes:
    return from == ElementKind::Component && to == ElementKind::Function;
  case LinkKind::Causes:
    return from != ElementKind::Effect && to == ElementKind::Effect;
  case LinkKind::ResultsIn:
    return from == ElementKind::Effect && to != ElementKind::Effect;
  case LinkKind::Triggers:
    if (from == ElementKind::Event)
      return to == ElementKind::Effect || to == ElementKind::Event;
    return from == ElementKind::Effect && to == ElementKind::Effect;
  case LinkKind::Influences:
    return from == ElementKind::EnvironmentalFactor &&
           (to == ElementKind::Component || to == ElementKind::Function ||
            to == ElementKind::Event || to == ElementKind::Effect);
  case LinkKind::Precedes:
    return from == ElementKind::Event && to == ElementKind::Event;
  case LinkKind::Requires:
    return from == ElementKind::Function && to == ElementKind::Requirement;
  case LinkKind::Performs:
    return from == ElementKind::Actor && to == ElementKind::Process;
  case LinkKind::Uses:
    return from == ElementKind::Process && to == ElementKind::Function;
  case LinkKind::PartOf:
    return from == ElementKind::Component && to == ElementKind::Component;
  }
  return false;
}

bool link_kind_acyclic(LinkKind kind) {
  return kind == LinkKind::PartOf || kind == LinkKind::Precedes;
}

std::optional<int> Element::int_attribute(const std::string &key, int lo,
                                          int hi) const {
  auto it = attributes.find(key);
  if (it == attributes.end())
    return std::nullopt;
  const std::string &value = it->second;
  if (value.empty())
    return std::nullopt;
  char *end = nullptr;
  long parsed = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0')
    return std::nullopt;
  return std::clamp(static_cast<int>(parsed), lo, hi);
}

bool link_less(const Link &a, const Link &b) {
  return std::tie(a.from, a.to) < std::tie(b.from, b.to) ||
         (a.from == b.from && a.to == b.to &&
          std::string(to_string(a.kind)) < to_string(b.kind));
}

void ValidationReport::sort() {
  std::sort(violations.begin(), violations.end(),
            [](const Violation &a, const Violation &b) {
              return std::tie(a.code, a.context, a.message) <
                     std::tie(b.code, b.context, b.message);
            });
}

} // namespace failnet
