#include "complaints.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "failure_network.hpp"

namespace failnet {

namespace {

bool word_byte(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z') || c >= 0x80;
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

} // namespace

std::vector<Token> tokenize(const std::string &text,
                            const std::set<std::string> &stopwords) {
  if (text.empty())
    throw Error(ErrorCode::EmptyText, "text must not be empty");
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (!word_byte(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    std::string token;
    while (i < n && word_byte(static_cast<unsigned char>(text[i]))) {
      char c = text[i];
      if (c >= 'A' && c <= 'Z')
        c = static_cast<char>(c - 'A' + 'a');
      token.push_back(c);
      ++i;
    }
    if (!stopwords.count(token))
      out.push_back({std::move(token), start, i});
  }
  return out;
}

AliasIndex AliasIndex::build(const KnowledgeBase &kb,
                             const std::set<std::string> &stopwords) {
  AliasIndex index;
  for (const auto &[id, element] : kb.elements()) {
    for (const auto &alias : element.aliases) {
      std::vector<Token> alias_tokens = tokenize(alias, stopwords);
      if (alias_tokens.empty())
        continue; // alias made of stopwords only, nothing to match
      Entry entry;
      entry.element = id;
      entry.alias = alias;
      for (const Token &token : alias_tokens)
        entry.tokens.push_back(token.text);
      index.entries_.push_back(std::move(entry));
    }
  }
  for (std::size_t e = 0; e < index.entries_.size(); ++e)
    for (std::size_t offset = 0; offset < index.entries_[e].tokens.size(); ++offset)
      index.by_token_[index.entries_[e].tokens[offset]].push_back({e, offset});
  return index;
}

const std::vector<std::pair<std::size_t, std::size_t>> &
AliasIndex::occurrences(const std::string &token) const {
  static const std::vector<std::pair<std::size_t, std::size_t>> none;
  auto it = by_token_.find(token);
  return it == by_token_.end() ? none : it->second;
}

GeneralizedComplaint generalize(const AliasIndex &index,
                                const std::string &complaint_id,
                                std::vector<Token> tokens) {
  GeneralizedComplaint out;
  out.complaint_id = complaint_id;
  out.tokens = std::move(tokens);
  const std::size_t n = out.tokens.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t best_run = 0;
    double best_score = 0.0;
    const AliasIndex::Entry *best_entry = nullptr;
    for (const auto &[entry_index, offset] : index.occurrences(out.tokens[i].text)) {
      const AliasIndex::Entry &entry = index.entries()[entry_index];
      std::size_t run = 0;
      while (i + run < n && offset + run < entry.tokens.size() &&
             out.tokens[i + run].text == entry.tokens[offset + run])
        ++run;
      double score = static_cast<double>(run) /
                     static_cast<double>(entry.tokens.size());
      bool better = run > best_run ||
                    (run == best_run && score > best_score) ||
                    (run == best_run && score == best_score && best_entry &&
                     (entry.element < best_entry->element ||
                      (entry.element == best_entry->element &&
                       entry.alias < best_entry->alias)));
      if (better) {
        best_run = run;
        best_score = score;
        best_entry = &entry;
      }
    }
    if (best_run > 0 && best_entry) {
      out.matched_terms.push_back(
          {i, best_run, best_entry->element, best_entry->alias, best_score});
      i += best_run;
    } else {
      ++i;
    }
  }
  return out;
}

GeneralizedComplaint generalize(const KnowledgeBase &kb, const Config &config,
                                const std::string &complaint_id,
                                std::vector<Token> tokens) {
  return generalize(AliasIndex::build(kb, config.stopwords), complaint_id,
                    std::move(tokens));
}

Priority compute_priority(const Complaint &complaint,
                          const GeneralizedComplaint &generalized,
                          const Config &config) {
  Priority priority;
  double safety_hits = 0.0;
  for (const Token &token : generalized.tokens) {
    auto hit = config.safety_lexicon.find(token.text);
    if (hit != config.safety_lexicon.end())
      safety_hits += hit->second;
    auto severe = config.severity_lexicon.find(token.text);
    if (severe != config.severity_lexicon.end())
      priority.severity = std::max(priority.severity, severe->second);
  }
  priority.safety = std::min(1.0, safety_hits / config.priority.safety_saturation);
  priority.frequency = std::min(
      1.0, complaint.duplicate_count / config.priority.frequency_saturation);
  priority.value = clamp01(config.priority.weight_safety * priority.safety +
                           config.priority.weight_severity * priority.severity +
                           config.priority.weight_frequency * priority.frequency);
  return priority;
}

namespace {

bool primary_kind(ElementKind kind) {
  switch (kind) {
  case ElementKind::Requirement:
  case ElementKind::Component:
  case ElementKind::Function:
  case ElementKind::Process:
  case ElementKind::Actor:
    return true;
  default:
    return false;
  }
}

bool secondary_kind(ElementKind kind) {
  return kind == ElementKind::EnvironmentalFactor || kind == ElementKind::Event;
}

} // namespace

LocalizationResult localize_failure_cause(const KnowledgeBase &kb,
                                          const GeneralizedComplaint &generalized) {
  std::map<std::string, double> sums;
  for (const MatchedTerm &term : generalized.matched_terms) {
    const Element *element = kb.find(term.element);
    if (!element)
      continue;
    if (primary_kind(element->kind) || secondary_kind(element->kind))
      sums[term.element] += term.score;
  }
  LocalizationResult result;
  if (sums.empty())
    return result;
  double norm = 0.0;
  for (const auto &[id, sum] : sums)
    norm = std::max(norm, sum);
  for (const auto &[id, sum] : sums) {
    const Element &element = kb.element(id);
    LocalizedElement entry{id, element.kind, sum / norm};
    (primary_kind(element.kind) ? result.primary : result.secondary)
        .push_back(std::move(entry));
  }
  auto order = [](const LocalizedElement &a, const LocalizedElement &b) {
    if (a.score != b.score)
      return a.score > b.score;
    return a.element < b.element;
  };
  std::sort(result.primary.begin(), result.primary.end(), order);
  std::sort(result.secondary.begin(), result.secondary.end(), order);
  return result;
}

namespace {

std::string substitute(std::string text, const std::string &placeholder,
                       const std::string &value) {
  std::size_t at = 0;
  while ((at = text.find(placeholder, at)) != std::string::npos) {
    text.replace(at, placeholder.size(), value);
    at += value.size();
  }
  return text;
}

std::string element_name_or(const KnowledgeBase &kb, const std::string &id,
                            const std::string &fallback) {
  if (const Element *element = id.empty() ? nullptr : kb.find(id))
    return element->name;
  return fallback;
}

} // namespace

std::vector<CorrectiveAction>
suggest_corrective_actions(const KnowledgeBase &kb, const FailureRecord &record,
                           const std::vector<ActionTemplate> &catalog) {
  if (catalog.empty())
    throw Error(ErrorCode::MissingCatalog, "no corrective-action catalog configured");
  std::string element_name =
      element_name_or(kb, record.cause.element, "the affected element");
  std::string effect_name =
      record.effects.empty()
          ? element_name_or(kb, record.impact.element, "the observed effect")
          : element_name_or(kb, record.effects.front(), "the observed effect");
  std::vector<CorrectiveAction> actions;
  for (const ActionTemplate &entry : catalog) {
    if (entry.category != record.cause.kind)
      continue;
    std::string text = substitute(entry.action, "{element}", element_name);
    text = substitute(text, "{effect}", effect_name);
    actions.push_back({entry.key, entry.category, std::move(text)});
  }
  return actions;
}

FailureRecord to_actual_record(const KnowledgeBase &kb,
                               const Complaint &complaint,
                               const GeneralizedComplaint &generalized,
                               const LocalizationResult &localization,
                               const Priority &priority, const Config &config) {
  FailureRecord record;
  record.id = "act-" + complaint.id;
  record.provenance = Provenance::Actual;
  record.source = complaint.id;
  int occurrence =
      static_cast<int>(std::lround(1.0 + 9.0 * priority.value));

  // Actors rank in localization but are not a failure-cause category; the
  // first categorizable primary hit is the candidate.
  const LocalizedElement *primary_cause = nullptr;
  for (const LocalizedElement &entry : localization.primary) {
    if (category_of(entry.kind)) {
      primary_cause = &entry;
      break;
    }
  }
  const LocalizedElement *secondary_cause =
      localization.secondary.empty() ? nullptr : &localization.secondary.front();

  const LocalizedElement *cause = nullptr;
  if (secondary_cause &&
      (!primary_cause || secondary_cause->score >= primary_cause->score))
    cause = secondary_cause;
  else
    cause = primary_cause;

  if (!cause) {
    // Unlocalizable: emit a placeholder the improvement loop can turn into
    // a new knowledge-base element.
    record.placeholder = true;
    record.cause = {CategoryKind::Event, ""};
    record.impact = {CategoryKind::Event, ""};
    record.consequence = {ConsequenceClass::TechnicalProduct, ""};
    record.failure_type = FailureType::UnintendedFunction;
    record.risk = RiskScore::make(config.risk.base(record.consequence.cls),
                                  occurrence, config.risk.default_detection);
    record.general_description =
        "unrecognized failure reported in complaint " + complaint.id;
    std::vector<bool> covered(generalized.tokens.size(), false);
    for (const MatchedTerm &term : generalized.matched_terms)
      for (std::size_t t = term.first_token;
           t < term.first_token + term.token_count; ++t)
        covered[t] = true;
    for (std::size_t t = 0;
         t < generalized.tokens.size() && record.unmatched_tokens.size() < 3; ++t) {
      const std::string &text = generalized.tokens[t].text;
      if (!covered[t] && std::find(record.unmatched_tokens.begin(),
                                   record.unmatched_tokens.end(),
                                   text) == record.unmatched_tokens.end())
        record.unmatched_tokens.push_back(text);
    }
    return record;
  }

  const LocalizedElement *impact = nullptr;
  for (const LocalizedElement &entry : localization.primary) {
    if (entry.kind == ElementKind::Function) {
      impact = &entry;
      break;
    }
  }
  if (!impact) {
    for (const LocalizedElement &entry : localization.primary) {
      if (category_of(entry.kind)) {
        impact = &entry;
        break;
      }
    }
  }
  std::string impact_id = impact ? impact->element : cause->element;
  ElementKind cause_kind = kb.element(cause->element).kind;
  ElementKind impact_kind = kb.element(impact_id).kind;

  record.cause = {category_of(cause_kind).value(), cause->element};
  record.impact = {category_of(impact_kind).value(), impact_id};
  record.consequence = classify_consequence(kb, impact_id);
  record.failure_type =
      assign_failure_type(kb, cause_kind, cause->element, impact_kind);
  record.risk = RiskScore::make(config.risk.base(record.consequence.cls),
                                occurrence, config.risk.default_detection);
  record.general_description =
      kb.element(cause->element).name + " linked to " +
      kb.element(impact_id).name + " affecting " +
      to_string(record.consequence.cls);
  return record;
}

std::vector<IngestedComplaint> ingest_complaints(const KnowledgeBase &kb,
                                                 std::vector<Complaint> complaints,
                                                 const Config &config) {
  std::sort(complaints.begin(), complaints.end(),
            [](const Complaint &a, const Complaint &b) { return a.id < b.id; });
  for (std::size_t i = 1; i < complaints.size(); ++i)
    if (complaints[i].id == complaints[i - 1].id)
      throw Error(ErrorCode::FormatError,
                  "duplicate complaint id '" + complaints[i].id + "'");
  AliasIndex index = AliasIndex::build(kb, config.stopwords);
  std::vector<IngestedComplaint> out;
  out.reserve(complaints.size());
  for (Complaint &complaint : complaints) {
    IngestedComplaint item;
    item.generalized = generalize(index, complaint.id,
                                  tokenize(complaint.text, config.stopwords));
    item.priority = compute_priority(complaint, item.generalized, config);
    item.localization = localize_failure_cause(kb, item.generalized);
    item.record = to_actual_record(kb, complaint, item.generalized,
                                   item.localization, item.priority, config);
    item.actions =
        suggest_corrective_actions(kb, item.record, config.action_catalog);
    item.complaint = std::move(complaint);
    out.push_back(std::move(item));
  }
  return out;
}

} // namespace failnet
