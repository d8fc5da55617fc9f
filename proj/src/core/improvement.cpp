#include "improvement.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"
#include "failure_network.hpp"

namespace failnet {

const char *to_string(ProposalKind kind) {
  switch (kind) {
  case ProposalKind::NewElement:
    return "new_element";
  case ProposalKind::NewLink:
    return "new_link";
  case ProposalKind::ExtendScenario:
    return "extend_scenario";
  case ProposalKind::NewAlias:
    return "new_alias";
  }
  return "new_element";
}

std::optional<ProposalKind> proposal_kind_from_string(const std::string &name) {
  if (name == "new_element")
    return ProposalKind::NewElement;
  if (name == "new_link")
    return ProposalKind::NewLink;
  if (name == "extend_scenario")
    return ProposalKind::ExtendScenario;
  if (name == "new_alias")
    return ProposalKind::NewAlias;
  return std::nullopt;
}

const char *to_string(ProposalStatus status) {
  switch (status) {
  case ProposalStatus::Applied:
    return "applied";
  case ProposalStatus::Rejected:
    return "rejected";
  case ProposalStatus::AlreadyApplied:
    return "already_applied";
  case ProposalStatus::Failed:
    return "failed";
  }
  return "applied";
}

namespace {

std::string join_tokens(const std::vector<std::string> &tokens) {
  std::string out;
  for (const auto &token : tokens) {
    if (!out.empty())
      out += " ";
    out += token;
  }
  return out;
}

// Target effect for anchoring a proposed event, by preference: smallest
// in-scope effect that results in a valid impact (so the new event becomes
// an analyzable chain immediately), then smallest in-scope effect, then
// smallest effect anywhere; empty when the kb has no effects at all.
std::string pick_target_effect(const KnowledgeBase &kb,
                               const std::map<std::string, Scenario> &scenarios) {
  auto continues_to_impact = [&](const std::string &id) {
    for (const Link &link : kb.links()) {
      if (link.kind != LinkKind::ResultsIn || link.from != id)
        continue;
      const Element *target = kb.find(link.to);
      if (target && is_impact_kind(target->kind))
        return true;
    }
    return false;
  };
  std::string in_scope, in_scope_chained, anywhere;
  for (const auto &[id, element] : kb.elements()) {
    if (element.kind != ElementKind::Effect)
      continue;
    if (anywhere.empty())
      anywhere = id;
    bool scoped = false;
    for (const auto &[sid, scenario] : scenarios) {
      if (scenario.elements.count(id)) {
        scoped = true;
        break;
      }
    }
    if (!scoped)
      continue;
    if (in_scope.empty())
      in_scope = id;
    if (continues_to_impact(id)) {
      in_scope_chained = id; // elements iterate in id order, first is smallest
      break;
    }
  }
  if (!in_scope_chained.empty())
    return in_scope_chained;
  return in_scope.empty() ? anywhere : in_scope;
}

std::string pick_target_scenario(const std::map<std::string, Scenario> &scenarios,
                                 const std::string &best_source) {
  if (scenarios.empty())
    return "";
  if (!best_source.empty() && scenarios.count(best_source))
    return best_source;
  return scenarios.begin()->first;
}

} // namespace

std::vector<UpdateProposal>
propose_updates(const KnowledgeBase &kb,
                const std::map<std::string, Scenario> &scenarios,
                const CorrespondenceReport &report,
                const std::vector<FailureRecord> &actual_records,
                const Config &config) {
  std::set<std::string> report_ids, record_ids;
  for (const BestMatch &match : report.matches)
    report_ids.insert(match.actual);
  std::map<std::string, const FailureRecord *> records;
  for (const FailureRecord &record : actual_records) {
    records[record.id] = &record;
    record_ids.insert(record.id);
  }
  if (report_ids != record_ids)
    throw Error(ErrorCode::ReportMismatch,
                "correspondence report was not derived from the given records");

  std::map<std::string, std::string> best_source;
  for (const BestMatch &match : report.matches)
    best_source[match.actual] = match.potential_source;

  std::vector<UpdateProposal> proposals;
  std::vector<std::string> unmatched = report.unmatched;
  std::sort(unmatched.begin(), unmatched.end());

  for (const std::string &actual_id : unmatched) {
    const FailureRecord &record = *records.at(actual_id);
    std::string target_scenario =
        pick_target_scenario(scenarios, best_source[actual_id]);
    int counter = 0;
    auto next_id = [&]() {
      return "prop-" + actual_id + "-" + std::to_string(++counter);
    };

    if (record.placeholder) {
      std::string element_id = "evt-" + record.source;
      std::string phrase = join_tokens(record.unmatched_tokens);
      std::string name =
          phrase.empty() ? "unrecognized event " + record.source : phrase;

      UpdateProposal new_element;
      new_element.id = next_id();
      new_element.kind = ProposalKind::NewElement;
      new_element.element = {element_id, config.placeholder_element_kind, name,
                             {}, {}};
      new_element.source = actual_id;
      new_element.rationale =
          "complaint " + record.source + " could not be localized";
      proposals.push_back(std::move(new_element));

      std::vector<std::string> aliases;
      if (!phrase.empty())
        aliases.push_back(phrase);
      for (const std::string &token : record.unmatched_tokens)
        if (std::find(aliases.begin(), aliases.end(), token) == aliases.end())
          aliases.push_back(token);
      for (const std::string &alias : aliases) {
        UpdateProposal new_alias;
        new_alias.id = next_id();
        new_alias.kind = ProposalKind::NewAlias;
        new_alias.element_id = element_id;
        new_alias.alias = alias;
        new_alias.source = actual_id;
        new_alias.rationale = "match future complaints mentioning '" + alias + "'";
        proposals.push_back(std::move(new_alias));
      }

      std::string effect_id = pick_target_effect(kb, scenarios);
      if (effect_id.empty()) {
        effect_id = "eff-" + record.source;
        UpdateProposal new_effect;
        new_effect.id = next_id();
        new_effect.kind = ProposalKind::NewElement;
        new_effect.element = {effect_id, ElementKind::Effect,
                              "effect of " + name, {}, {}};
        new_effect.source = actual_id;
        new_effect.rationale = "no effect element available to anchor the new event";
        proposals.push_back(std::move(new_effect));
      }
      UpdateProposal new_link;
      new_link.id = next_id();
      new_link.kind = ProposalKind::NewLink;
      new_link.link = {element_id, effect_id, LinkKind::Causes};
      new_link.source = actual_id;
      new_link.rationale = "connect the new event into the failure network";
      proposals.push_back(std::move(new_link));

      if (!target_scenario.empty()) {
        UpdateProposal extend;
        extend.id = next_id();
        extend.kind = ProposalKind::ExtendScenario;
        extend.scenario_id = target_scenario;
        extend.element_id = element_id;
        extend.source = actual_id;
        extend.rationale = "bring the new event into analysis scope";
        proposals.push_back(std::move(extend));
      }
      continue;
    }

    const std::string &cause_id = record.cause.element;
    if (cause_id.empty() || !kb.contains(cause_id))
      continue;
    bool in_any_scope = false;
    for (const auto &[sid, scenario] : scenarios)
      if (scenario.elements.count(cause_id)) {
        in_any_scope = true;
        break;
      }
    if (!in_any_scope && !target_scenario.empty()) {
      UpdateProposal extend;
      extend.id = next_id();
      extend.kind = ProposalKind::ExtendScenario;
      extend.scenario_id = target_scenario;
      extend.element_id = cause_id;
      extend.source = actual_id;
      extend.rationale = "cause element '" + cause_id +
                         "' is known but outside every scenario scope";
      proposals.push_back(std::move(extend));
    }
  }
  return proposals;
}

namespace {

void refresh_event_order(Scenario &scenario, const KnowledgeBase &kb) {
  scenario.event_order.clear();
  for (const Link &link : kb.links())
    if (link.kind == LinkKind::Precedes && scenario.elements.count(link.from) &&
        scenario.elements.count(link.to))
      scenario.event_order.emplace_back(link.from, link.to);
  std::sort(scenario.event_order.begin(), scenario.event_order.end());
}

} // namespace

std::vector<ProposalOutcome>
apply_updates(KnowledgeBase &kb, std::map<std::string, Scenario> &scenarios,
              const std::vector<UpdateProposal> &proposals,
              const AcceptFilter &accept, const std::string &timestamp) {
  std::vector<ProposalOutcome> outcomes;
  for (const UpdateProposal &proposal : proposals) {
    ProposalOutcome outcome;
    outcome.proposal = proposal;
    if (kb.applied_proposals().count(proposal.id)) {
      outcome.status = ProposalStatus::AlreadyApplied;
      outcomes.push_back(std::move(outcome));
      continue;
    }
    if (accept && !accept(proposal)) {
      outcome.status = ProposalStatus::Rejected;
      outcomes.push_back(std::move(outcome));
      continue;
    }
    try {
      switch (proposal.kind) {
      case ProposalKind::NewElement:
        kb.add_element(proposal.element, timestamp);
        break;
      case ProposalKind::NewLink:
        kb.add_link(proposal.link, timestamp);
        break;
      case ProposalKind::NewAlias:
        kb.add_alias(proposal.element_id, proposal.alias, timestamp);
        break;
      case ProposalKind::ExtendScenario: {
        auto it = scenarios.find(proposal.scenario_id);
        if (it == scenarios.end())
          throw Error(ErrorCode::InvalidScenario,
                      "unknown scenario '" + proposal.scenario_id + "'");
        if (!kb.contains(proposal.element_id))
          throw Error(ErrorCode::UnknownElement,
                      "no element with id '" + proposal.element_id + "'");
        it->second.elements.insert(proposal.element_id);
        refresh_event_order(it->second, kb);
        break;
      }
      }
      kb.mark_proposal_applied(proposal.id);
      outcome.status = ProposalStatus::Applied;
    } catch (const Error &error) {
      outcome.status = ProposalStatus::Failed;
      outcome.error = error.what();
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

std::vector<FailureRecord>
analyze_all(const KnowledgeBase &kb,
            const std::map<std::string, Scenario> &scenarios,
            const Config &config) {
  std::vector<FailureRecord> records;
  for (const auto &[id, scenario] : scenarios) {
    std::vector<FailureRecord> part = analyze_scenario(
        kb, scenario, config.default_max_effect_hops, config.risk);
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  return records;
}

ImprovementRound run_round(KnowledgeBase &kb,
                           std::map<std::string, Scenario> &scenarios,
                           const std::vector<Complaint> &complaints,
                           const Config &config, const AcceptFilter &accept,
                           const std::string &timestamp, int round_number) {
  ImprovementRound round;
  round.round = round_number;

  std::vector<FailureRecord> potential = analyze_all(kb, scenarios, config);
  std::vector<IngestedComplaint> ingested =
      ingest_complaints(kb, complaints, config);
  std::vector<FailureRecord> actual;
  actual.reserve(ingested.size());
  for (const IngestedComplaint &item : ingested)
    actual.push_back(item.record);

  CorrespondenceReport before =
      degree_of_correspondence(potential, actual, config.correspondence);
  round.degree_before = before.degree;
  round.potential_before = potential.size();
  round.actual_count = actual.size();

  std::vector<UpdateProposal> proposals =
      propose_updates(kb, scenarios, before, actual, config);
  round.outcomes = apply_updates(kb, scenarios, proposals, accept, timestamp);

  if (proposals.empty()) {
    round.degree_after = round.degree_before;
    round.potential_after = round.potential_before;
    return round;
  }
  std::vector<FailureRecord> potential_after = analyze_all(kb, scenarios, config);
  CorrespondenceReport after =
      degree_of_correspondence(potential_after, actual, config.correspondence);
  round.degree_after = after.degree;
  round.potential_after = potential_after.size();
  return round;
}

} // namespace failnet
