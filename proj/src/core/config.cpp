#include "config.hpp"

namespace failnet {

Config default_config() {
  Config config;
  config.stopwords = {"a",   "an",  "and", "at",  "by",  "for", "in",
                      "is",  "it",  "my",  "of",  "on",  "or",  "that",
                      "the", "this", "to",  "was", "with"};
  for (const char *term :
       {"accident", "burn", "crash", "danger", "death", "explosion", "fire",
        "injury", "shock", "smoke", "unsafe"})
    config.safety_lexicon[term] = 1.0;
  config.severity_lexicon = {
      {"broken", 0.8},   {"dead", 1.0},     {"defective", 0.7},
      {"failed", 0.7},   {"flicker", 0.3},  {"intermittent", 0.4},
      {"noise", 0.2},    {"stuck", 0.5},    {"unusable", 0.9},
  };
  config.action_catalog = {
      {"function-review", CategoryKind::Function,
       "Re-verify the specification and test coverage of {element}"},
      {"function-degradation-test", CategoryKind::Function,
       "Add degraded-mode tests for {element} under {effect}"},
      {"component-design-review", CategoryKind::Component,
       "Review design and tolerances of {element}"},
      {"component-supplier-audit", CategoryKind::Component,
       "Audit supplier quality records for {element}"},
      {"requirement-clarification", CategoryKind::Requirement,
       "Clarify and re-baseline requirement {element}"},
      {"process-instruction-update", CategoryKind::Process,
       "Update work instructions for {element}"},
      {"environment-shielding", CategoryKind::Environment,
       "Introduce shielding or compensation against {element}"},
      {"environment-limit-check", CategoryKind::Environment,
       "Re-check operating limits of the design against {element}"},
      {"event-containment", CategoryKind::Event,
       "Define containment and recovery steps for {element}"},
  };
  return config;
}

} // namespace failnet
