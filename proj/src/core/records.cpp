#include "records.hpp"

#include <algorithm>

namespace failnet {

const char *to_string(CategoryKind kind) {
  switch (kind) {
  case CategoryKind::Function:
    return "function";
  case CategoryKind::Component:
    return "component";
  case CategoryKind::Requirement:
    return "requirement";
  case CategoryKind::Process:
    return "process";
  case CategoryKind::Environment:
    return "environment";
  case CategoryKind::Event:
    return "event";
  case CategoryKind::Effect:
    return "effect";
  }
  return "event";
}

const char *to_string(ConsequenceClass cls) {
  switch (cls) {
  case ConsequenceClass::TechnicalProduct:
    return "technical_product";
  case ConsequenceClass::Human:
    return "human";
  case ConsequenceClass::Stakeholder:
    return "stakeholder";
  }
  return "technical_product";
}

const char *to_string(FailureType type) {
  switch (type) {
  case FailureType::LossOfFunction:
    return "loss_of_function";
  case FailureType::DegradedFunction:
    return "degraded_function";
  case FailureType::IntermittentFunction:
    return "intermittent_function";
  case FailureType::UnintendedFunction:
    return "unintended_function";
  }
  return "loss_of_function";
}

const char *to_string(Provenance provenance) {
  return provenance == Provenance::Potential ? "potential" : "actual";
}

std::optional<CategoryKind> category_kind_from_string(const std::string &name) {
  static const std::pair<const char *, CategoryKind> table[] = {
      {"function", CategoryKind::Function},
      {"component", CategoryKind::Component},
      {"requirement", CategoryKind::Requirement},
      {"process", CategoryKind::Process},
      {"environment", CategoryKind::Environment},
      {"event", CategoryKind::Event},
      {"effect", CategoryKind::Effect},
  };
  for (const auto &[text, kind] : table)
    if (name == text)
      return kind;
  return std::nullopt;
}

std::optional<ConsequenceClass>
consequence_class_from_string(const std::string &name) {
  if (name == "technical_product")
    return ConsequenceClass::TechnicalProduct;
  if (name == "human")
    return ConsequenceClass::Human;
  if (name == "stakeholder")
    return ConsequenceClass::Stakeholder;
  return std::nullopt;
}

std::optional<FailureType> failure_type_from_string(const std::string &name) {
  static const std::pair<const char *, FailureType> table[] = {
      {"loss_of_function", FailureType::LossOfFunction},
      {"degraded_function", FailureType::DegradedFunction},
      {"intermittent_function", FailureType::IntermittentFunction},
      {"unintended_function", FailureType::UnintendedFunction},
  };
  for (const auto &[text, type] : table)
    if (name == text)
      return type;
  return std::nullopt;
}

std::optional<Provenance> provenance_from_string(const std::string &name) {
  if (name == "potential")
    return Provenance::Potential;
  if (name == "actual")
    return Provenance::Actual;
  return std::nullopt;
}

std::optional<CategoryKind> category_of(ElementKind kind) {
  switch (kind) {
  case ElementKind::Function:
    return CategoryKind::Function;
  case ElementKind::Component:
    return CategoryKind::Component;
  case ElementKind::Requirement:
    return CategoryKind::Requirement;
  case ElementKind::Process:
    return CategoryKind::Process;
  case ElementKind::EnvironmentalFactor:
    return CategoryKind::Environment;
  case ElementKind::Event:
    return CategoryKind::Event;
  case ElementKind::Effect:
    return CategoryKind::Effect;
  case ElementKind::Actor:
  case ElementKind::Stakeholder:
    return std::nullopt;
  }
  return std::nullopt;
}

ElementKind element_kind_of(CategoryKind kind) {
  switch (kind) {
  case CategoryKind::Function:
    return ElementKind::Function;
  case CategoryKind::Component:
    return ElementKind::Component;
  case CategoryKind::Requirement:
    return ElementKind::Requirement;
  case CategoryKind::Process:
    return ElementKind::Process;
  case CategoryKind::Environment:
    return ElementKind::EnvironmentalFactor;
  case CategoryKind::Event:
    return ElementKind::Event;
  case CategoryKind::Effect:
    return ElementKind::Effect;
  }
  return ElementKind::Event;
}

RiskScore RiskScore::make(int severity, int occurrence, int detection) {
  RiskScore risk;
  risk.severity = std::clamp(severity, 1, 10);
  risk.occurrence = std::clamp(occurrence, 1, 10);
  risk.detection = std::clamp(detection, 1, 10);
  risk.rpn = risk.severity * risk.occurrence * risk.detection;
  return risk;
}

} // namespace failnet
