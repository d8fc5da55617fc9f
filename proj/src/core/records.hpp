#pragma once

#include <optional>
#include <string>
#include <vector>

#include "types.hpp"

namespace failnet {

// Failure-cause category kinds shared by potential and actual records.
enum class CategoryKind {
  Function,
  Component,
  Requirement,
  Process,
  Environment,
  Event,
  Effect, // impact only
};

enum class ConsequenceClass { TechnicalProduct, Human, Stakeholder };

enum class FailureType {
  LossOfFunction,
  DegradedFunction,
  IntermittentFunction,
  UnintendedFunction,
};

enum class Provenance { Potential, Actual };

const char *to_string(CategoryKind kind);
const char *to_string(ConsequenceClass cls);
const char *to_string(FailureType type);
const char *to_string(Provenance provenance);
std::optional<CategoryKind> category_kind_from_string(const std::string &name);
std::optional<ConsequenceClass> consequence_class_from_string(const std::string &name);
std::optional<FailureType> failure_type_from_string(const std::string &name);
std::optional<Provenance> provenance_from_string(const std::string &name);

// Element kind -> category kind; actors and stakeholders have no category.
std::optional<CategoryKind> category_of(ElementKind kind);
ElementKind element_kind_of(CategoryKind kind);

struct RiskScore {
  int severity = 1;
  int occurrence = 1;
  int detection = 1;
  int rpn = 1; // always severity * occurrence * detection

  static RiskScore make(int severity, int occurrence, int detection);
  bool operator==(const RiskScore &) const = default;
};

struct CategoryRef {
  CategoryKind kind = CategoryKind::Event;
  std::string element; // empty for placeholder records

  bool operator==(const CategoryRef &) const = default;
};

struct ConsequenceRef {
  ConsequenceClass cls = ConsequenceClass::TechnicalProduct;
  std::string element; // optional

  bool operator==(const ConsequenceRef &) const = default;
};

// The unified record schema shared by both analysis directions. Potential
// records come from chain analysis (source = scenario id, effects = traversed
// effect path); actual records come from complaints (source = complaint id).
struct FailureRecord {
  std::string id;
  std::string general_description;
  CategoryRef cause;
  CategoryRef impact;
  ConsequenceRef consequence;
  FailureType failure_type = FailureType::LossOfFunction;
  RiskScore risk;
  Provenance provenance = Provenance::Potential;
  std::string source;
  std::vector<std::string> effects;          // potential records only
  bool placeholder = false;                  // actual records only
  std::vector<std::string> unmatched_tokens; // actual records only

  bool operator==(const FailureRecord &) const = default;
};

} // namespace failnet
