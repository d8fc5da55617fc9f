#include "failure_network.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>

#include "error.hpp"

namespace failnet {

bool chain_less(const FailureChain &a, const FailureChain &b) {
  if (a.cause != b.cause)
    return a.cause < b.cause;
  if (a.effects != b.effects)
    return a.effects < b.effects;
  return a.impact < b.impact;
}

bool is_cause_kind(ElementKind kind) {
  switch (kind) {
  case ElementKind::Function:
  case ElementKind::Component:
  case ElementKind::Requirement:
  case ElementKind::Process:
  case ElementKind::EnvironmentalFactor:
  case ElementKind::Event:
    return true;
  default:
    return false;
  }
}

bool is_impact_kind(ElementKind kind) {
  return is_cause_kind(kind) || kind == ElementKind::Effect;
}

ConsequenceRef classify_consequence(const KnowledgeBase &kb,
                                    const std::string &impact_id) {
  ConsequenceRef consequence;
  if (impact_id.empty() || !kb.contains(impact_id))
    return consequence;
  auto causal = [](LinkKind kind) {
    return kind == LinkKind::Causes || kind == LinkKind::ResultsIn ||
           kind == LinkKind::Triggers || kind == LinkKind::Influences;
  };
  std::string best_actor, best_stakeholder;
  std::set<std::string> frontier{impact_id};
  for (int hop = 0; hop < 2; ++hop) {
    std::set<std::string> next;
    for (const auto &current : frontier) {
      for (const Link &link : kb.links()) {
        if (link.from != current || !causal(link.kind))
          continue;
        const Element *target = kb.find(link.to);
        if (!target)
          continue;
        if (target->kind == ElementKind::Actor &&
            (best_actor.empty() || link.to < best_actor))
          best_actor = link.to;
        if (target->kind == ElementKind::Stakeholder &&
            (best_stakeholder.empty() || link.to < best_stakeholder))
          best_stakeholder = link.to;
        next.insert(link.to);
      }
    }
    frontier = std::move(next);
  }
  if (!best_actor.empty())
    return {ConsequenceClass::Human, best_actor};
  if (!best_stakeholder.empty())
    return {ConsequenceClass::Stakeholder, best_stakeholder};
  return consequence; // technical product, no element
}

FailureType assign_failure_type(const KnowledgeBase &kb,
                                ElementKind cause_kind,
                                const std::string &cause_id,
                                ElementKind impact_kind) {
  if (impact_kind == ElementKind::Function &&
      cause_kind == ElementKind::Component)
    return FailureType::LossOfFunction;
  if (impact_kind == ElementKind::Function &&
      cause_kind == ElementKind::EnvironmentalFactor)
    return FailureType::DegradedFunction;
  if (cause_kind == ElementKind::Event && !cause_id.empty()) {
    const Element *cause = kb.find(cause_id);
    if (cause) {
      auto it = cause->attributes.find("intermittent");
      if (it != cause->attributes.end() && it->second == "true")
        return FailureType::IntermittentFunction;
    }
  }
  if (impact_kind == ElementKind::Event || impact_kind == ElementKind::Effect)
    return FailureType::UnintendedFunction;
  return FailureType::LossOfFunction;
}

std::vector<FailureChain> derive_failure_chains(const KnowledgeBase &kb,
                                                const Scenario &scenario,
                                                int max_effect_hops) {
  if (max_effect_hops < 1)
    throw Error(ErrorCode::InvalidScenario, "max_effect_hops must be >= 1");
  ValidationReport scenario_report = validate_scenario(kb, scenario);
  if (!scenario_report.ok())
    throw Error(ErrorCode::InvalidScenario,
                "scenario '" + scenario.id + "' fails validation (" +
                    scenario_report.violations.front().code + ": " +
                    scenario_report.violations.front().message + ")");

  auto in_scope = [&](const std::string &id) {
    return scenario.elements.count(id) != 0;
  };

  std::vector<FailureChain> chains;
  std::vector<std::string> path;

  // Extends the simple effect path `path` and emits a chain for every
  // ResultsIn edge leaving its tail.
  std::function<void(const std::string &)> extend = [&](const std::string &cause) {
    const std::string &tail = path.back();
    for (const Link &link : kb.links()) {
      if (link.from != tail)
        continue;
      if (link.kind == LinkKind::ResultsIn && in_scope(link.to)) {
        const Element *impact = kb.find(link.to);
        if (impact && is_impact_kind(impact->kind)) {
          FailureChain chain;
          chain.scenario_id = scenario.id;
          chain.cause = cause;
          chain.effects = path;
          chain.impact = link.to;
          chains.push_back(std::move(chain));
        }
      }
      if (link.kind == LinkKind::Triggers && in_scope(link.to) &&
          static_cast<int>(path.size()) < max_effect_hops) {
        const Element *next = kb.find(link.to);
        if (next && next->kind == ElementKind::Effect &&
            std::find(path.begin(), path.end(), link.to) == path.end()) {
          path.push_back(link.to);
          extend(cause);
          path.pop_back();
        }
      }
    }
  };

  for (const auto &[id, element] : kb.elements()) {
    if (!in_scope(id) || !is_cause_kind(element.kind))
      continue;
    for (const Link &link : kb.links()) {
      if (link.kind != LinkKind::Causes || link.from != id || !in_scope(link.to))
        continue;
      const Element *effect = kb.find(link.to);
      if (!effect || effect->kind != ElementKind::Effect)
        continue;
      path.assign(1, link.to);
      extend(id);
    }
  }

  std::sort(chains.begin(), chains.end(), chain_less);
  std::map<std::string, ConsequenceRef> consequence_cache;
  for (FailureChain &chain : chains) {
    auto cached = consequence_cache.find(chain.impact);
    if (cached == consequence_cache.end())
      cached = consequence_cache
                   .emplace(chain.impact, classify_consequence(kb, chain.impact))
                   .first;
    chain.consequence = cached->second;
    chain.failure_type =
        assign_failure_type(kb, kb.element(chain.cause).kind, chain.cause,
                            kb.element(chain.impact).kind);
  }
  return chains;
}

RiskScore compute_risk(const KnowledgeBase &kb, const Scenario &scenario,
                       const FailureChain &chain, const RiskConfig &config) {
  int severity = config.base(chain.consequence.cls);
  if (const Element *impact = kb.find(chain.impact))
    severity = impact->int_attribute("severity", 1, 10).value_or(severity);
  int occurrence = scenario.criticality;
  if (const Element *cause = kb.find(chain.cause))
    occurrence = cause->int_attribute("occurrence", 1, 10).value_or(occurrence);
  int detection = config.default_detection;
  if (!chain.effects.empty()) {
    if (const Element *effect = kb.find(chain.effects.front()))
      detection = effect->int_attribute("detection", 1, 10).value_or(detection);
  }
  return RiskScore::make(severity, occurrence, detection);
}

FailureRecord formalize(const KnowledgeBase &kb, const FailureChain &chain,
                        const RiskScore &risk) {
  const Element &cause = kb.element(chain.cause);
  const Element &impact = kb.element(chain.impact);
  const Element &effect = kb.element(chain.effects.front());

  FailureRecord record;
  record.cause = {category_of(cause.kind).value(), cause.id};
  record.impact = {category_of(impact.kind).value(), impact.id};
  record.consequence = chain.consequence;
  record.failure_type = chain.failure_type;
  record.risk = risk;
  record.provenance = Provenance::Potential;
  record.source = chain.scenario_id;
  record.effects = chain.effects;
  record.general_description = cause.name + " causes " + effect.name +
                               " leading to " + impact.name + " affecting " +
                               to_string(chain.consequence.cls);
  return record;
}

std::vector<FailureRecord> analyze_scenario(const KnowledgeBase &kb,
                                            const Scenario &scenario,
                                            int max_effect_hops,
                                            const RiskConfig &risk_config) {
  std::vector<FailureChain> chains =
      derive_failure_chains(kb, scenario, max_effect_hops);
  std::vector<FailureRecord> records;
  records.reserve(chains.size());
  int index = 0;
  for (const FailureChain &chain : chains) {
    RiskScore risk = compute_risk(kb, scenario, chain, risk_config);
    FailureRecord record = formalize(kb, chain, risk);
    char suffix[16];
    std::snprintf(suffix, sizeof suffix, "%04d", ++index);
    record.id = "pot-" + scenario.id + "-" + suffix;
    records.push_back(std::move(record));
  }
  return records;
}

} // namespace failnet
