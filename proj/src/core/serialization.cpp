#include "serialization.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace failnet {

std::string canonical_dump(const Json &value) { return value.dump(2) + "\n"; }

namespace {

[[noreturn]] void bad(const std::string &what, const std::string &detail) {
  throw Error(ErrorCode::FormatError, what + ": " + detail);
}

const Json &need(const Json &value, const char *key, const std::string &what) {
  if (!value.is_object() || !value.contains(key))
    bad(what, std::string("missing field '") + key + "'");
  return value.at(key);
}

std::string need_string(const Json &value, const char *key,
                        const std::string &what) {
  const Json &field = need(value, key, what);
  if (!field.is_string())
    bad(what, std::string("field '") + key + "' must be a string");
  return field.get<std::string>();
}

std::string opt_string(const Json &value, const char *key) {
  if (value.is_object() && value.contains(key) && value.at(key).is_string())
    return value.at(key).get<std::string>();
  return "";
}

int need_int(const Json &value, const char *key, const std::string &what) {
  const Json &field = need(value, key, what);
  if (!field.is_number_integer())
    bad(what, std::string("field '") + key + "' must be an integer");
  return field.get<int>();
}

double need_number(const Json &value, const char *key, const std::string &what) {
  const Json &field = need(value, key, what);
  if (!field.is_number())
    bad(what, std::string("field '") + key + "' must be a number");
  return field.get<double>();
}

std::vector<std::string> string_list(const Json &value, const char *key,
                                     const std::string &what) {
  std::vector<std::string> out;
  if (!value.is_object() || !value.contains(key))
    return out;
  const Json &field = value.at(key);
  if (!field.is_array())
    bad(what, std::string("field '") + key + "' must be an array");
  for (const Json &item : field) {
    if (!item.is_string())
      bad(what, std::string("entries of '") + key + "' must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

} // namespace

Json to_json(const Element &element) {
  Json value;
  value["id"] = element.id;
  value["kind"] = to_string(element.kind);
  value["name"] = element.name;
  value["aliases"] = element.aliases;
  value["attributes"] = element.attributes;
  return value;
}

Json to_json(const Link &link) {
  Json value;
  value["from"] = link.from;
  value["to"] = link.to;
  value["kind"] = to_string(link.kind);
  return value;
}

Json to_json(const KnowledgeBase &kb) {
  Json value;
  value["type"] = "knowledge_base";
  value["version"] = kb.version();
  Json elements = Json::array();
  for (const auto &[id, element] : kb.elements())
    elements.push_back(to_json(element));
  value["elements"] = std::move(elements);
  Json links = Json::array();
  for (const Link &link : kb.links())
    links.push_back(to_json(link));
  value["links"] = std::move(links);
  Json audit = Json::array();
  for (const AuditEntry &entry : kb.audit()) {
    Json record;
    record["timestamp"] = entry.timestamp;
    record["operation"] = entry.operation;
    record["payload_digest"] = entry.payload_digest;
    audit.push_back(std::move(record));
  }
  value["audit"] = std::move(audit);
  value["applied_proposals"] = kb.applied_proposals();
  return value;
}

Element element_from_json(const Json &value) {
  static const std::string what = "element";
  Element element;
  element.id = need_string(value, "id", what);
  std::string kind = need_string(value, "kind", what);
  auto parsed = element_kind_from_string(kind);
  if (!parsed)
    bad(what, "unknown element kind '" + kind + "'");
  element.kind = *parsed;
  element.name = need_string(value, "name", what);
  element.aliases = string_list(value, "aliases", what);
  if (value.contains("attributes")) {
    const Json &attrs = value.at("attributes");
    if (!attrs.is_object())
      bad(what, "field 'attributes' must be an object");
    for (auto it = attrs.begin(); it != attrs.end(); ++it) {
      if (!it.value().is_string())
        bad(what, "attribute values must be strings");
      element.attributes[it.key()] = it.value().get<std::string>();
    }
  }
  return element;
}

Link link_from_json(const Json &value) {
  static const std::string what = "link";
  Link link;
  link.from = need_string(value, "from", what);
  link.to = need_string(value, "to", what);
  std::string kind = need_string(value, "kind", what);
  auto parsed = link_kind_from_string(kind);
  if (!parsed)
    bad(what, "unknown link kind '" + kind + "'");
  link.kind = *parsed;
  return link;
}

KnowledgeBase kb_from_json(const Json &value) {
  static const std::string what = "knowledge base";
  if (!value.is_object())
    bad(what, "document must be an object");
  std::vector<Element> elements;
  const Json &element_list = need(value, "elements", what);
  if (!element_list.is_array())
    bad(what, "field 'elements' must be an array");
  for (const Json &item : element_list)
    elements.push_back(element_from_json(item));
  std::vector<Link> links;
  const Json &link_list = need(value, "links", what);
  if (!link_list.is_array())
    bad(what, "field 'links' must be an array");
  for (const Json &item : link_list)
    links.push_back(link_from_json(item));
  std::uint64_t version = 0;
  if (value.contains("version")) {
    if (!value.at("version").is_number_unsigned() &&
        !value.at("version").is_number_integer())
      bad(what, "field 'version' must be an integer");
    version = value.at("version").get<std::uint64_t>();
  }
  std::vector<AuditEntry> audit;
  if (value.contains("audit")) {
    if (!value.at("audit").is_array())
      bad(what, "field 'audit' must be an array");
    for (const Json &item : value.at("audit"))
      audit.push_back({need_string(item, "timestamp", "audit entry"),
                       need_string(item, "operation", "audit entry"),
                       need_string(item, "payload_digest", "audit entry")});
  }
  std::set<std::string> applied;
  for (const std::string &id : string_list(value, "applied_proposals", what))
    applied.insert(id);
  try {
    return KnowledgeBase::from_parts(std::move(elements), std::move(links),
                                     version, std::move(audit), std::move(applied));
  } catch (const Error &error) {
    bad(what, error.what());
  }
}

Json to_json(const Scenario &scenario) {
  Json value;
  value["id"] = scenario.id;
  value["name"] = scenario.name;
  value["functions"] = scenario.functions;
  value["elements"] = scenario.elements;
  Json order = Json::array();
  for (const auto &[from, to] : scenario.event_order)
    order.push_back(Json::array({from, to}));
  value["event_order"] = std::move(order);
  value["criticality"] = scenario.criticality;
  return value;
}

Json scenarios_to_json(const std::map<std::string, Scenario> &scenarios) {
  Json value;
  value["type"] = "scenarios";
  Json list = Json::array();
  for (const auto &[id, scenario] : scenarios)
    list.push_back(to_json(scenario));
  value["scenarios"] = std::move(list);
  return value;
}

std::map<std::string, Scenario> scenarios_from_json(const Json &value) {
  static const std::string what = "scenarios";
  std::map<std::string, Scenario> out;
  const Json &list = need(value, "scenarios", what);
  if (!list.is_array())
    bad(what, "field 'scenarios' must be an array");
  for (const Json &item : list) {
    Scenario scenario;
    scenario.id = need_string(item, "id", what);
    scenario.name = opt_string(item, "name");
    scenario.functions = string_list(item, "functions", what);
    for (const std::string &id : string_list(item, "elements", what))
      scenario.elements.insert(id);
    if (item.contains("event_order")) {
      const Json &order = item.at("event_order");
      if (!order.is_array())
        bad(what, "field 'event_order' must be an array");
      for (const Json &pair : order) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string())
          bad(what, "event_order entries must be [from, to] pairs");
        scenario.event_order.emplace_back(pair[0].get<std::string>(),
                                          pair[1].get<std::string>());
      }
    }
    scenario.criticality = item.contains("criticality")
                               ? need_int(item, "criticality", what)
                               : 5;
    if (!out.emplace(scenario.id, std::move(scenario)).second)
      bad(what, "duplicate scenario id");
  }
  return out;
}

Json to_json(const ValidationReport &report) {
  Json value;
  value["type"] = "validation";
  Json list = Json::array();
  for (const Violation &violation : report.violations) {
    Json item;
    item["code"] = violation.code;
    item["context"] = violation.context;
    item["message"] = violation.message;
    list.push_back(std::move(item));
  }
  value["violations"] = std::move(list);
  return value;
}

Json to_json(const FailureRecord &record) {
  Json value;
  value["id"] = record.id;
  value["general_description"] = record.general_description;
  value["cause_category"] =
      Json{{"kind", to_string(record.cause.kind)}, {"element", record.cause.element}};
  value["impact_category"] = Json{{"kind", to_string(record.impact.kind)},
                                  {"element", record.impact.element}};
  value["consequence_category"] =
      Json{{"class", to_string(record.consequence.cls)},
           {"element", record.consequence.element}};
  value["failure_type"] = to_string(record.failure_type);
  value["risk"] = Json{{"severity", record.risk.severity},
                       {"occurrence", record.risk.occurrence},
                       {"detection", record.risk.detection},
                       {"rpn", record.risk.rpn}};
  value["provenance"] = to_string(record.provenance);
  value["source"] = record.source;
  value["effect_path"] = record.effects;
  value["placeholder"] = record.placeholder;
  value["unmatched_tokens"] = record.unmatched_tokens;
  return value;
}

Json records_to_json(const std::vector<FailureRecord> &records) {
  Json value;
  value["type"] = "records";
  Json list = Json::array();
  for (const FailureRecord &record : records)
    list.push_back(to_json(record));
  value["records"] = std::move(list);
  return value;
}

namespace {

CategoryRef category_from_json(const Json &value, const std::string &what) {
  CategoryRef ref;
  std::string kind = need_string(value, "kind", what);
  auto parsed = category_kind_from_string(kind);
  if (!parsed)
    bad(what, "unknown category kind '" + kind + "'");
  ref.kind = *parsed;
  ref.element = opt_string(value, "element");
  return ref;
}

} // namespace

std::vector<FailureRecord> records_from_json(const Json &value) {
  static const std::string what = "records";
  const Json &list = need(value, "records", what);
  if (!list.is_array())
    bad(what, "field 'records' must be an array");
  std::vector<FailureRecord> out;
  for (const Json &item : list) {
    FailureRecord record;
    record.id = need_string(item, "id", what);
    record.general_description = opt_string(item, "general_description");
    record.cause = category_from_json(need(item, "cause_category", what), what);
    record.impact = category_from_json(need(item, "impact_category", what), what);
    const Json &consequence = need(item, "consequence_category", what);
    std::string cls = need_string(consequence, "class", what);
    auto parsed_cls = consequence_class_from_string(cls);
    if (!parsed_cls)
      bad(what, "unknown consequence class '" + cls + "'");
    record.consequence = {*parsed_cls, opt_string(consequence, "element")};
    std::string type = need_string(item, "failure_type", what);
    auto parsed_type = failure_type_from_string(type);
    if (!parsed_type)
      bad(what, "unknown failure type '" + type + "'");
    record.failure_type = *parsed_type;
    const Json &risk = need(item, "risk", what);
    record.risk.severity = need_int(risk, "severity", what);
    record.risk.occurrence = need_int(risk, "occurrence", what);
    record.risk.detection = need_int(risk, "detection", what);
    record.risk.rpn = need_int(risk, "rpn", what);
    for (int factor : {record.risk.severity, record.risk.occurrence,
                       record.risk.detection})
      if (factor < 1 || factor > 10)
        bad(what, "risk factors must lie in 1..10");
    if (record.risk.rpn !=
        record.risk.severity * record.risk.occurrence * record.risk.detection)
      bad(what, "rpn must equal severity * occurrence * detection");
    std::string provenance = need_string(item, "provenance", what);
    auto parsed_provenance = provenance_from_string(provenance);
    if (!parsed_provenance)
      bad(what, "unknown provenance '" + provenance + "'");
    record.provenance = *parsed_provenance;
    record.source = opt_string(item, "source");
    record.effects = string_list(item, "effect_path", what);
    record.placeholder = item.contains("placeholder") &&
                         item.at("placeholder").is_boolean() &&
                         item.at("placeholder").get<bool>();
    record.unmatched_tokens = string_list(item, "unmatched_tokens", what);
    out.push_back(std::move(record));
  }
  return out;
}

Json to_json(const CorrespondenceReport &report) {
  Json value;
  value["type"] = "correspondence";
  value["degree"] = report.degree;
  value["tau"] = report.tau;
  value["potential_count"] = report.potential_count;
  value["actual_count"] = report.actual_count;
  value["coverage_of_potential"] = report.coverage_of_potential;
  Json matches = Json::array();
  for (const BestMatch &match : report.matches) {
    Json item;
    item["actual"] = match.actual;
    if (match.potential)
      item["potential"] = *match.potential;
    else
      item["potential"] = nullptr;
    item["potential_source"] = match.potential_source;
    item["total"] = match.total;
    item["fields"] = Json{{"cause", match.fields.cause},
                          {"impact", match.fields.impact},
                          {"consequence", match.fields.consequence},
                          {"failure_type", match.fields.failure_type},
                          {"risk", match.fields.risk}};
    matches.push_back(std::move(item));
  }
  value["matches"] = std::move(matches);
  value["unmatched"] = report.unmatched;
  return value;
}

Json to_json(const UpdateProposal &proposal) {
  Json value;
  value["id"] = proposal.id;
  value["kind"] = to_string(proposal.kind);
  value["source"] = proposal.source;
  value["rationale"] = proposal.rationale;
  switch (proposal.kind) {
  case ProposalKind::NewElement:
    value["element"] = to_json(proposal.element);
    break;
  case ProposalKind::NewLink:
    value["link"] = to_json(proposal.link);
    break;
  case ProposalKind::ExtendScenario:
    value["scenario_id"] = proposal.scenario_id;
    value["element_id"] = proposal.element_id;
    break;
  case ProposalKind::NewAlias:
    value["element_id"] = proposal.element_id;
    value["alias"] = proposal.alias;
    break;
  }
  return value;
}

Json to_json(const ProposalOutcome &outcome) {
  Json value;
  value["proposal"] = to_json(outcome.proposal);
  value["status"] = to_string(outcome.status);
  value["error"] = outcome.error;
  return value;
}

Json to_json(const ImprovementRound &round) {
  Json value;
  value["round"] = round.round;
  value["degree_before"] = round.degree_before;
  value["degree_after"] = round.degree_after;
  value["potential_before"] = round.potential_before;
  value["potential_after"] = round.potential_after;
  value["actual_count"] = round.actual_count;
  Json outcomes = Json::array();
  for (const ProposalOutcome &outcome : round.outcomes)
    outcomes.push_back(to_json(outcome));
  value["outcomes"] = std::move(outcomes);
  return value;
}

Json improvement_to_json(const std::vector<ImprovementRound> &rounds) {
  Json value;
  value["type"] = "improvement";
  Json list = Json::array();
  for (const ImprovementRound &round : rounds)
    list.push_back(to_json(round));
  value["rounds"] = std::move(list);
  value["converged"] = !rounds.empty() && rounds.back().converged();
  value["final_degree"] = rounds.empty() ? 1.0 : rounds.back().degree_after;
  return value;
}

Json to_json(const Config &config) {
  Json value;
  value["type"] = "config";
  value["stopwords"] = config.stopwords;
  value["safety_lexicon"] = config.safety_lexicon;
  value["severity_lexicon"] = config.severity_lexicon;
  Json catalog = Json::array();
  for (const ActionTemplate &entry : config.action_catalog)
    catalog.push_back(Json{{"key", entry.key},
                           {"category", to_string(entry.category)},
                           {"action", entry.action}});
  value["action_catalog"] = std::move(catalog);
  value["priority"] =
      Json{{"weights",
            Json{{"safety", config.priority.weight_safety},
                 {"severity", config.priority.weight_severity},
                 {"frequency", config.priority.weight_frequency}}},
           {"safety_saturation", config.priority.safety_saturation},
           {"frequency_saturation", config.priority.frequency_saturation}};
  value["risk"] = Json{{"bases",
                        Json{{"human", config.risk.base_human},
                             {"stakeholder", config.risk.base_stakeholder},
                             {"technical_product", config.risk.base_technical_product}}},
                       {"default_detection", config.risk.default_detection}};
  value["correspondence"] =
      Json{{"weights",
            Json{{"cause", config.correspondence.weight_cause},
                 {"impact", config.correspondence.weight_impact},
                 {"consequence", config.correspondence.weight_consequence},
                 {"failure_type", config.correspondence.weight_failure_type},
                 {"risk", config.correspondence.weight_risk}}},
           {"tau", config.correspondence.tau}};
  value["defaults"] = Json{{"scenario_depth", config.default_scenario_depth},
                           {"max_effect_hops", config.default_max_effect_hops},
                           {"criticality", config.default_criticality},
                           {"improve_rounds", config.default_improve_rounds}};
  value["placeholder_element_kind"] = to_string(config.placeholder_element_kind);
  return value;
}

Config config_from_json(const Json &value) {
  static const std::string what = "config";
  Config config; // defaults fill anything absent
  if (!value.is_object())
    bad(what, "document must be an object");
  if (value.contains("stopwords")) {
    config.stopwords.clear();
    for (const std::string &word : string_list(value, "stopwords", what))
      config.stopwords.insert(word);
  }
  auto load_lexicon = [&](const char *key, std::map<std::string, double> &out) {
    if (!value.contains(key))
      return;
    const Json &lexicon = value.at(key);
    if (!lexicon.is_object())
      bad(what, std::string("field '") + key + "' must be an object");
    out.clear();
    for (auto it = lexicon.begin(); it != lexicon.end(); ++it) {
      if (!it.value().is_number())
        bad(what, std::string("weights in '") + key + "' must be numbers");
      out[it.key()] = it.value().get<double>();
    }
  };
  load_lexicon("safety_lexicon", config.safety_lexicon);
  load_lexicon("severity_lexicon", config.severity_lexicon);
  if (value.contains("action_catalog")) {
    const Json &catalog = value.at("action_catalog");
    if (!catalog.is_array())
      bad(what, "field 'action_catalog' must be an array");
    config.action_catalog.clear();
    for (const Json &item : catalog) {
      ActionTemplate entry;
      entry.key = need_string(item, "key", what);
      std::string category = need_string(item, "category", what);
      auto parsed = category_kind_from_string(category);
      if (!parsed)
        bad(what, "unknown action category '" + category + "'");
      entry.category = *parsed;
      entry.action = need_string(item, "action", what);
      config.action_catalog.push_back(std::move(entry));
    }
  }
  if (value.contains("priority")) {
    const Json &priority = value.at("priority");
    const Json &weights = need(priority, "weights", what);
    config.priority.weight_safety = need_number(weights, "safety", what);
    config.priority.weight_severity = need_number(weights, "severity", what);
    config.priority.weight_frequency = need_number(weights, "frequency", what);
    config.priority.safety_saturation =
        need_number(priority, "safety_saturation", what);
    config.priority.frequency_saturation =
        need_number(priority, "frequency_saturation", what);
    if (config.priority.safety_saturation <= 0 ||
        config.priority.frequency_saturation <= 0)
      bad(what, "priority saturations must be positive");
  }
  if (value.contains("risk")) {
    const Json &risk = value.at("risk");
    const Json &bases = need(risk, "bases", what);
    config.risk.base_human = need_int(bases, "human", what);
    config.risk.base_stakeholder = need_int(bases, "stakeholder", what);
    config.risk.base_technical_product = need_int(bases, "technical_product", what);
    config.risk.default_detection = need_int(risk, "default_detection", what);
  }
  if (value.contains("correspondence")) {
    const Json &correspondence = value.at("correspondence");
    const Json &weights = need(correspondence, "weights", what);
    config.correspondence.weight_cause = need_number(weights, "cause", what);
    config.correspondence.weight_impact = need_number(weights, "impact", what);
    config.correspondence.weight_consequence =
        need_number(weights, "consequence", what);
    config.correspondence.weight_failure_type =
        need_number(weights, "failure_type", what);
    config.correspondence.weight_risk = need_number(weights, "risk", what);
    config.correspondence.tau = need_number(correspondence, "tau", what);
  }
  if (value.contains("defaults")) {
    const Json &defaults = value.at("defaults");
    config.default_scenario_depth = need_int(defaults, "scenario_depth", what);
    config.default_max_effect_hops = need_int(defaults, "max_effect_hops", what);
    config.default_criticality = need_int(defaults, "criticality", what);
    config.default_improve_rounds = need_int(defaults, "improve_rounds", what);
  }
  if (value.contains("placeholder_element_kind")) {
    std::string kind = need_string(value, "placeholder_element_kind", what);
    auto parsed = element_kind_from_string(kind);
    if (!parsed)
      bad(what, "unknown placeholder element kind '" + kind + "'");
    config.placeholder_element_kind = *parsed;
  }
  return config;
}

std::vector<Complaint> complaints_from_jsonl(const std::string &content) {
  static const std::string what = "complaint corpus";
  std::vector<Complaint> out;
  std::istringstream stream(content);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    Json value;
    try {
      value = Json::parse(line);
    } catch (const Json::exception &error) {
      bad(what, "line " + std::to_string(line_number) + ": " + error.what());
    }
    Complaint complaint;
    complaint.id = need_string(value, "id", what);
    complaint.text = need_string(value, "text", what);
    complaint.received_at = opt_string(value, "received_at");
    complaint.product_ref = opt_string(value, "product_ref");
    complaint.duplicate_count = value.contains("duplicate_count")
                                    ? need_int(value, "duplicate_count", what)
                                    : 1;
    if (complaint.text.empty())
      bad(what, "complaint '" + complaint.id + "' has empty text");
    if (complaint.duplicate_count < 1)
      bad(what, "complaint '" + complaint.id + "' has duplicate_count < 1");
    out.push_back(std::move(complaint));
  }
  return out;
}

Json parse_json(const std::string &content, const std::string &what) {
  try {
    return Json::parse(content);
  } catch (const Json::exception &error) {
    bad(what, error.what());
  }
}

Json details_to_json(const std::vector<IngestedComplaint> &ingested) {
  Json value;
  value["type"] = "complaint_details";
  Json list = Json::array();
  for (const IngestedComplaint &item : ingested) {
    Json entry;
    entry["id"] = item.complaint.id;
    Json tokens = Json::array();
    for (const Token &token : item.generalized.tokens)
      tokens.push_back(token.text);
    entry["tokens"] = std::move(tokens);
    Json matched = Json::array();
    for (const MatchedTerm &term : item.generalized.matched_terms)
      matched.push_back(Json{{"first_token", term.first_token},
                             {"token_count", term.token_count},
                             {"element", term.element},
                             {"alias", term.alias},
                             {"score", term.score}});
    entry["matched_terms"] = std::move(matched);
    entry["priority"] = Json{{"value", item.priority.value},
                             {"safety", item.priority.safety},
                             {"severity", item.priority.severity},
                             {"frequency", item.priority.frequency}};
    auto localized = [](const std::vector<LocalizedElement> &list) {
      Json out = Json::array();
      for (const LocalizedElement &entry : list)
        out.push_back(Json{{"element", entry.element},
                           {"kind", to_string(entry.kind)},
                           {"score", entry.score}});
      return out;
    };
    entry["localization"] = Json{{"primary", localized(item.localization.primary)},
                                 {"secondary", localized(item.localization.secondary)}};
    Json actions = Json::array();
    for (const CorrectiveAction &action : item.actions)
      actions.push_back(Json{{"catalog_key", action.catalog_key},
                             {"category", to_string(action.category)},
                             {"action_text", action.action_text}});
    entry["corrective_actions"] = std::move(actions);
    entry["record"] = item.record.id;
    list.push_back(std::move(entry));
  }
  value["complaints"] = std::move(list);
  return value;
}

namespace {

std::string render_validation(const Json &value) {
  std::ostringstream out;
  const Json &violations = value.at("violations");
  if (violations.empty()) {
    out << "validation: OK (no violations)\n";
    return out.str();
  }
  out << "validation: " << violations.size() << " violation(s)\n";
  for (const Json &violation : violations)
    out << "  [" << violation.at("code").get<std::string>() << "] "
        << violation.at("context").get<std::string>() << ": "
        << violation.at("message").get<std::string>() << "\n";
  return out.str();
}

std::string render_records(const Json &value) {
  std::ostringstream out;
  const Json &records = value.at("records");
  out << "records: " << records.size() << "\n";
  for (const Json &record : records) {
    out << "  " << record.at("id").get<std::string>() << " ["
        << record.at("failure_type").get<std::string>()
        << ", rpn " << record.at("risk").at("rpn") << "] "
        << record.at("general_description").get<std::string>() << "\n";
  }
  return out.str();
}

std::string render_correspondence(const Json &value) {
  std::ostringstream out;
  out << "degree of correspondence: " << value.at("degree").dump() << "\n";
  out << "potential records: " << value.at("potential_count")
      << ", actual records: " << value.at("actual_count") << "\n";
  out << "coverage of potential: " << value.at("coverage_of_potential").dump()
      << ", tau: " << value.at("tau").dump() << "\n";
  for (const Json &match : value.at("matches")) {
    out << "  " << match.at("actual").get<std::string>() << " -> ";
    if (match.at("potential").is_null())
      out << "(none)";
    else
      out << match.at("potential").get<std::string>();
    out << " total " << match.at("total").dump() << "\n";
  }
  const Json &unmatched = value.at("unmatched");
  out << "unmatched: " << unmatched.size();
  for (const Json &id : unmatched)
    out << " " << id.get<std::string>();
  out << "\n";
  return out.str();
}

std::string render_improvement(const Json &value) {
  std::ostringstream out;
  out << "improvement: " << value.at("rounds").size() << " round(s), "
      << (value.at("converged").get<bool>() ? "converged" : "not converged")
      << ", final degree " << value.at("final_degree").dump() << "\n";
  for (const Json &round : value.at("rounds")) {
    out << "  round " << round.at("round") << ": degree "
        << round.at("degree_before").dump() << " -> "
        << round.at("degree_after").dump() << ", "
        << round.at("outcomes").size() << " proposal(s)\n";
    for (const Json &outcome : round.at("outcomes")) {
      const Json &proposal = outcome.at("proposal");
      out << "    [" << outcome.at("status").get<std::string>() << "] "
          << proposal.at("id").get<std::string>() << " "
          << proposal.at("kind").get<std::string>() << " ("
          << proposal.at("rationale").get<std::string>() << ")\n";
    }
  }
  return out.str();
}

std::string render_details(const Json &value) {
  std::ostringstream out;
  const Json &complaints = value.at("complaints");
  out << "complaints processed: " << complaints.size() << "\n";
  for (const Json &entry : complaints) {
    out << "  " << entry.at("id").get<std::string>() << ": priority "
        << entry.at("priority").at("value").dump() << ", "
        << entry.at("matched_terms").size() << " matched term(s), "
        << entry.at("corrective_actions").size() << " action(s)\n";
  }
  return out.str();
}

} // namespace

std::string render_report_text(const Json &value) {
  if (!value.is_object() || !value.contains("type") ||
      !value.at("type").is_string())
    throw Error(ErrorCode::FormatError, "report: missing 'type' field");
  std::string type = value.at("type").get<std::string>();
  try {
    if (type == "validation")
      return render_validation(value);
    if (type == "records")
      return render_records(value);
    if (type == "correspondence")
      return render_correspondence(value);
    if (type == "improvement")
      return render_improvement(value);
    if (type == "complaint_details")
      return render_details(value);
  } catch (const Json::exception &error) {
    throw Error(ErrorCode::FormatError,
                std::string("report: malformed document: ") + error.what());
  }
  throw Error(ErrorCode::FormatError, "report: unknown type '" + type + "'");
}

} // namespace failnet
