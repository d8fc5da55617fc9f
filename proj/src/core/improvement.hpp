#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "complaints.hpp"
#include "correspondence.hpp"
#include "knowledge_base.hpp"
#include "scenario.hpp"

namespace failnet {

enum class ProposalKind { NewElement, NewLink, ExtendScenario, NewAlias };

const char *to_string(ProposalKind kind);
std::optional<ProposalKind> proposal_kind_from_string(const std::string &name);

// One proposed knowledge-base or scenario update derived from an unmatched
// actual failure. Payload fields are populated per kind.
struct UpdateProposal {
  std::string id; // stable; drives apply idempotence
  ProposalKind kind = ProposalKind::NewElement;
  Element element;          // NewElement
  Link link;                // NewLink
  std::string scenario_id;  // ExtendScenario
  std::string element_id;   // ExtendScenario / NewAlias
  std::string alias;        // NewAlias
  std::string source;       // actual record id
  std::string rationale;
};

enum class ProposalStatus { Applied, Rejected, AlreadyApplied, Failed };

const char *to_string(ProposalStatus status);

struct ProposalOutcome {
  UpdateProposal proposal;
  ProposalStatus status = ProposalStatus::Applied;
  std::string error; // set when status == Failed
};

// Accepts or rejects one proposal; the default accepts everything.
using AcceptFilter = std::function<bool(const UpdateProposal &)>;

// Derives update proposals for every unmatched actual record in the report.
// Placeholder records yield NewElement + NewAlias(es) + NewLink + an
// ExtendScenario into the target scenario; localized records whose cause
// element lies outside every scenario yield one ExtendScenario. Ordered by
// actual record id. Throws ReportMismatch when the report's actual ids do not
// equal the given record set.
std::vector<UpdateProposal>
propose_updates(const KnowledgeBase &kb,
                const std::map<std::string, Scenario> &scenarios,
                const CorrespondenceReport &report,
                const std::vector<FailureRecord> &actual_records,
                const Config &config);

// Applies accepted proposals in order; per-proposal failures are collected,
// not fatal. Re-applying a proposal id is a no-op (AlreadyApplied).
std::vector<ProposalOutcome>
apply_updates(KnowledgeBase &kb, std::map<std::string, Scenario> &scenarios,
              const std::vector<UpdateProposal> &proposals,
              const AcceptFilter &accept, const std::string &timestamp);

struct ImprovementRound {
  int round = 0;
  double degree_before = 1.0;
  double degree_after = 1.0;
  std::size_t potential_before = 0;
  std::size_t potential_after = 0;
  std::size_t actual_count = 0;
  std::vector<ProposalOutcome> outcomes;

  bool converged() const { return outcomes.empty(); }
};

// One analyze -> ingest -> correspond -> propose -> apply -> re-correspond
// cycle. Potential records are pooled over all scenarios; the actual records
// stay fixed inside the round, so applying every proposal can only extend the
// potential set and the degree never drops within a round.
ImprovementRound run_round(KnowledgeBase &kb,
                           std::map<std::string, Scenario> &scenarios,
                           const std::vector<Complaint> &complaints,
                           const Config &config, const AcceptFilter &accept,
                           const std::string &timestamp, int round_number);

// Pooled potential records for all scenarios (default max effect hops).
std::vector<FailureRecord>
analyze_all(const KnowledgeBase &kb,
            const std::map<std::string, Scenario> &scenarios,
            const Config &config);

} // namespace failnet
