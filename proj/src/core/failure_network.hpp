#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "knowledge_base.hpp"
#include "records.hpp"
#include "scenario.hpp"

namespace failnet {

// One cause -> effect (-> effect)* -> impact path inside a scenario.
struct FailureChain {
  std::string scenario_id;
  std::string cause;
  std::vector<std::string> effects; // 1..max_effect_hops, Triggers-connected
  std::string impact;
  ConsequenceRef consequence;
  FailureType failure_type = FailureType::LossOfFunction;

  bool operator==(const FailureChain &) const = default;
};

bool chain_less(const FailureChain &a, const FailureChain &b);

// Element kinds admissible as chain causes / impacts. Actors and
// stakeholders are consequence targets, not causes or impacts.
bool is_cause_kind(ElementKind kind);
bool is_impact_kind(ElementKind kind);

// Enumerates every chain cause -Causes-> e1 -Triggers-> ... -Triggers-> ek
// -ResultsIn-> impact with k <= max_effect_hops, all nodes in scenario scope
// and effect paths simple. Output sorted by (cause, effects, impact);
// consequence class and failure type are filled in.
std::vector<FailureChain> derive_failure_chains(const KnowledgeBase &kb,
                                                const Scenario &scenario,
                                                int max_effect_hops);

// Consequence classification: outgoing walk of length <= 2 over the causal
// link kinds (Causes, ResultsIn, Triggers, Influences) from the impact
// element. Reaching an actor wins over a stakeholder; neither means the
// consequence stays with the technical product. The reached element with the
// smallest id is recorded.
ConsequenceRef classify_consequence(const KnowledgeBase &kb,
                                    const std::string &impact_id);

// Deterministic failure-type table over the cause/impact element kinds. An
// event cause with attribute intermittent=true marks intermittency.
FailureType assign_failure_type(const KnowledgeBase &kb,
                                ElementKind cause_kind,
                                const std::string &cause_id,
                                ElementKind impact_kind);

// severity from the impact element attribute else the consequence-class base;
// occurrence from the cause element attribute else the scenario criticality;
// detection from the first effect's attribute else the configured default.
RiskScore compute_risk(const KnowledgeBase &kb, const Scenario &scenario,
                       const FailureChain &chain, const RiskConfig &config);

// Chain + risk -> unified potential-failure record (id left empty; batch
// analysis assigns ids in chain order).
FailureRecord formalize(const KnowledgeBase &kb, const FailureChain &chain,
                        const RiskScore &risk);

// Full per-scenario analysis: chains, risk, records, ids "pot-<scenario>-NNNN".
std::vector<FailureRecord> analyze_scenario(const KnowledgeBase &kb,
                                            const Scenario &scenario,
                                            int max_effect_hops,
                                            const RiskConfig &risk_config);

} // namespace failnet
