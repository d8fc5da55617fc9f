#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace failnet {

// The nine element kinds of the product-environment model. Closed set.
enum class ElementKind {
  Component,
  Function,
  Event,
  Effect,
  EnvironmentalFactor,
  Actor,
  Process,
  Requirement,
  Stakeholder,
};

// Typed edges between elements. Each kind constrains its endpoint kinds,
// see link_kind_allows().
enum class LinkKind {
  Realizes,  // Component -> Function
  Causes,    // non-Effect -> Effect
  ResultsIn, // Effect -> non-Effect
  Triggers,  // Event -> Effect|Event, Effect -> Effect
  Influences,// EnvironmentalFactor -> Component|Function|Event|Effect
  Precedes,  // Event -> Event, acyclic
  Requires,  // Function -> Requirement
  Performs,  // Actor -> Process
  Uses,      // Process -> Function
  PartOf,    // Component -> Component, acyclic
};

const char *to_string(ElementKind kind);
const char *to_string(LinkKind kind);
std::optional<ElementKind> element_kind_from_string(const std::string &name);
std::optional<LinkKind> link_kind_from_string(const std::string &name);

bool link_kind_allows(LinkKind kind, ElementKind from, ElementKind to);
bool link_kind_acyclic(LinkKind kind); // PartOf, Precedes

struct Element {
  std::string id;
  ElementKind kind = ElementKind::Component;
  std::string name;
  std::vector<std::string> aliases; // lowercase, sorted, unique
  std::map<std::string, std::string> attributes;

  // Integer attribute clamped to [lo, hi]; nullopt when absent or non-numeric.
  std::optional<int> int_attribute(const std::string &key, int lo, int hi) const;

  bool operator==(const Element &) const = default;
};

struct Link {
  std::string from;
  std::string to;
  LinkKind kind = LinkKind::Realizes;

  bool operator==(const Link &) const = default;
};

// Canonical ordering used everywhere links are stored or emitted.
bool link_less(const Link &a, const Link &b);

struct Violation {
  std::string code;    // stable machine-readable identifier
  std::string context; // offending element/link/scenario
  std::string message;

  bool operator==(const Violation &) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string code, std::string context, std::string message) {
    violations.push_back({std::move(code), std::move(context), std::move(message)});
  }
  void sort();
};

} // namespace failnet
