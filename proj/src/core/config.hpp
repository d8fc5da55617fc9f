#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "records.hpp"

namespace failnet {

struct PriorityConfig {
  double weight_safety = 0.5;
  double weight_severity = 0.3;
  double weight_frequency = 0.2;
  double safety_saturation = 3.0;   // weighted safety hits for score 1.0
  double frequency_saturation = 5.0; // duplicate count for score 1.0
};

struct RiskConfig {
  int base_human = 9;
  int base_stakeholder = 6;
  int base_technical_product = 4;
  int default_detection = 5;

  int base(ConsequenceClass cls) const {
    switch (cls) {
    case ConsequenceClass::Human:
      return base_human;
    case ConsequenceClass::Stakeholder:
      return base_stakeholder;
    case ConsequenceClass::TechnicalProduct:
      return base_technical_product;
    }
    return base_technical_product;
  }
};

struct CorrespondenceConfig {
  double weight_cause = 0.30;
  double weight_impact = 0.25;
  double weight_consequence = 0.20;
  double weight_failure_type = 0.10;
  double weight_risk = 0.15;
  double tau = 0.7; // records with best score below tau count as unmatched
};

struct ActionTemplate {
  std::string key;
  CategoryKind category = CategoryKind::Component;
  std::string action; // may use {element} and {effect}
};

struct Config {
  std::set<std::string> stopwords;
  std::map<std::string, double> safety_lexicon;   // term -> weight
  std::map<std::string, double> severity_lexicon; // term -> weight
  std::vector<ActionTemplate> action_catalog;     // catalog order preserved
  PriorityConfig priority;
  RiskConfig risk;
  CorrespondenceConfig correspondence;
  int default_scenario_depth = 3;
  int default_max_effect_hops = 3;
  int default_criticality = 5;
  int default_improve_rounds = 10;
  ElementKind placeholder_element_kind = ElementKind::Event;
};

// The shipped defaults written by `kb init`.
Config default_config();

} // namespace failnet
