#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "records.hpp"

namespace failnet {

struct FieldScores {
  double cause = 0.0;
  double impact = 0.0;
  double consequence = 0.0;
  double failure_type = 0.0;
  double risk = 0.0;

  bool operator==(const FieldScores &) const = default;
};

// Element-reference fields: 1.0 on identical element ids (both non-empty),
// 0.5 on matching category kinds, else 0.0.
double category_similarity(const CategoryRef &p, const CategoryRef &a);
// 1.0 on equal class; the element is ignored.
double consequence_similarity(const ConsequenceRef &p, const ConsequenceRef &a);
double failure_type_similarity(FailureType p, FailureType a);
// 1 - |rpn_p - rpn_a| / 1000.
double risk_similarity(const RiskScore &p, const RiskScore &a);

FieldScores score_fields(const FailureRecord &potential,
                         const FailureRecord &actual);
double total_score(const FieldScores &fields, const CorrespondenceConfig &config);

struct BestMatch {
  std::string actual;
  std::optional<std::string> potential;
  std::string potential_source; // scenario id of the matched potential record
  FieldScores fields;
  double total = 0.0;
};

struct CorrespondenceReport {
  double degree = 1.0; // mean best total over actuals; 1.0 for an empty set
  std::vector<BestMatch> matches;       // ordered by actual id
  std::vector<std::string> unmatched;   // actual ids with best total < tau
  double coverage_of_potential = 1.0;   // potentials that are someone's best
  std::size_t potential_count = 0;
  std::size_t actual_count = 0;
  double tau = 0.7;
};

// Scores every actual against every potential record; best match per actual,
// ties to the lexicographically smallest potential id. Throws InvalidWeights
// unless the configured weights are non-negative and sum to 1 (1e-9).
CorrespondenceReport
degree_of_correspondence(const std::vector<FailureRecord> &potential,
                         const std::vector<FailureRecord> &actual,
                         const CorrespondenceConfig &config);

} // namespace failnet
