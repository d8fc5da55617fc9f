#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "complaints.hpp"
#include "config.hpp"
#include "correspondence.hpp"
#include "improvement.hpp"
#include "knowledge_base.hpp"
#include "records.hpp"
#include "scenario.hpp"

namespace failnet {

using Json = nlohmann::json;

// All persisted artifacts share one canonical rendering: sorted object keys
// (nlohmann default), two-space indent, trailing newline. Byte-identical
// serialization is the test substrate for determinism and round-trips.
std::string canonical_dump(const Json &value);

Json to_json(const Element &element);
Json to_json(const Link &link);
Json to_json(const KnowledgeBase &kb);
Json to_json(const Scenario &scenario);
Json scenarios_to_json(const std::map<std::string, Scenario> &scenarios);
Json to_json(const ValidationReport &report);
Json to_json(const FailureRecord &record);
Json records_to_json(const std::vector<FailureRecord> &records);
Json to_json(const CorrespondenceReport &report);
Json to_json(const UpdateProposal &proposal);
Json to_json(const ProposalOutcome &outcome);
Json to_json(const ImprovementRound &round);
Json improvement_to_json(const std::vector<ImprovementRound> &rounds);
Json to_json(const Config &config);
Json details_to_json(const std::vector<IngestedComplaint> &ingested);

// Parsers throw Error(FormatError) on any structural or value problem.
Element element_from_json(const Json &value);
Link link_from_json(const Json &value);
KnowledgeBase kb_from_json(const Json &value);
std::map<std::string, Scenario> scenarios_from_json(const Json &value);
std::vector<FailureRecord> records_from_json(const Json &value);
Config config_from_json(const Json &value);

// One complaint object per non-empty line.
std::vector<Complaint> complaints_from_jsonl(const std::string &content);

Json parse_json(const std::string &content, const std::string &what);

// Plain-text rendering of any report document (dispatch on "type").
std::string render_report_text(const Json &value);

} // namespace failnet
