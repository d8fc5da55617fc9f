#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "config.hpp"
#include "knowledge_base.hpp"
#include "records.hpp"

namespace failnet {

struct Complaint {
  std::string id;
  std::string text;
  std::string received_at;
  std::string product_ref;
  int duplicate_count = 1;

  bool operator==(const Complaint &) const = default;
};

struct Token {
  std::string text;  // lowercase
  std::size_t begin; // byte offsets into the original text
  std::size_t end;

  bool operator==(const Token &) const = default;
};

// Word segmentation over the raw text: maximal runs of ASCII alphanumerics
// (lowercased) and non-ASCII bytes form tokens, everything else separates.
// Stopwords are dropped after lowercasing; spans survive for reporting.
// Throws EmptyText on an empty input string.
std::vector<Token> tokenize(const std::string &text,
                            const std::set<std::string> &stopwords);

struct MatchedTerm {
  std::size_t first_token; // index into the token list
  std::size_t token_count;
  std::string element;
  std::string alias;
  double score; // matched alias tokens / alias tokens

  bool operator==(const MatchedTerm &) const = default;
};

struct GeneralizedComplaint {
  std::string complaint_id;
  std::vector<Token> tokens;
  std::vector<MatchedTerm> matched_terms; // left-to-right, non-overlapping
};

// Precomputed alias tables for batch matching against one kb snapshot.
class AliasIndex {
public:
  static AliasIndex build(const KnowledgeBase &kb,
                          const std::set<std::string> &stopwords);

  struct Entry {
    std::string element;
    std::string alias;
    std::vector<std::string> tokens;
  };

  const std::vector<Entry> &entries() const { return entries_; }
  // (entry index, offset inside the alias) pairs whose alias token equals `token`.
  const std::vector<std::pair<std::size_t, std::size_t>> &
  occurrences(const std::string &token) const;

private:
  std::vector<Entry> entries_;
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> by_token_;
};

// Greedy left-to-right longest-match against element aliases. At each token
// position the longest contiguous alias-token run wins (ties: higher score,
// then smaller element id, then smaller alias); matched positions are
// consumed, so matches never overlap.
GeneralizedComplaint generalize(const AliasIndex &index,
                                const std::string &complaint_id,
                                std::vector<Token> tokens);
GeneralizedComplaint generalize(const KnowledgeBase &kb, const Config &config,
                                const std::string &complaint_id,
                                std::vector<Token> tokens);

struct Priority {
  double value = 0.0; // clamp01(w_s * safety + w_v * severity + w_f * frequency)
  double safety = 0.0;
  double severity = 0.0;
  double frequency = 0.0;

  bool operator==(const Priority &) const = default;
};

Priority compute_priority(const Complaint &complaint,
                          const GeneralizedComplaint &generalized,
                          const Config &config);

struct LocalizedElement {
  std::string element;
  ElementKind kind = ElementKind::Component;
  double score = 0.0; // in [0,1], best hit is exactly 1.0

  bool operator==(const LocalizedElement &) const = default;
};

struct LocalizationResult {
  std::vector<LocalizedElement> primary;   // requirement/component/function/process/actor
  std::vector<LocalizedElement> secondary; // environment/event

  bool empty() const { return primary.empty() && secondary.empty(); }
};

// Per-element sum of match scores, normalized so the best element maps to
// 1.0. Sorted descending, ties by ascending element id.
LocalizationResult localize_failure_cause(const KnowledgeBase &kb,
                                          const GeneralizedComplaint &generalized);

struct CorrectiveAction {
  std::string catalog_key;
  CategoryKind category = CategoryKind::Component;
  std::string action_text;

  bool operator==(const CorrectiveAction &) const = default;
};

// All catalog entries for the record's cause category, in catalog order;
// {element} and {effect} are substituted from the record. Throws
// MissingCatalog when the catalog has no entries at all.
std::vector<CorrectiveAction>
suggest_corrective_actions(const KnowledgeBase &kb, const FailureRecord &record,
                           const std::vector<ActionTemplate> &catalog);

// Unifies one processed complaint into an actual-failure record
// (id "act-<complaint id>"). Complaints without any localizable hit become
// placeholder records carrying their unmatched top tokens.
FailureRecord to_actual_record(const KnowledgeBase &kb,
                               const Complaint &complaint,
                               const GeneralizedComplaint &generalized,
                               const LocalizationResult &localization,
                               const Priority &priority, const Config &config);

// Full pipeline over a corpus; output ordered by complaint id.
struct IngestedComplaint {
  Complaint complaint;
  GeneralizedComplaint generalized;
  Priority priority;
  LocalizationResult localization;
  std::vector<CorrectiveAction> actions;
  FailureRecord record;
};

std::vector<IngestedComplaint> ingest_complaints(const KnowledgeBase &kb,
                                                 std::vector<Complaint> complaints,
                                                 const Config &config);

} // namespace failnet
