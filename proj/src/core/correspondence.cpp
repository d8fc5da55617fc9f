#include "correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "error.hpp"

namespace failnet {

double category_similarity(const CategoryRef &p, const CategoryRef &a) {
  if (!p.element.empty() && p.element == a.element)
    return 1.0;
  if (p.kind == a.kind)
    return 0.5;
  return 0.0;
}

double consequence_similarity(const ConsequenceRef &p, const ConsequenceRef &a) {
  return p.cls == a.cls ? 1.0 : 0.0;
}

double failure_type_similarity(FailureType p, FailureType a) {
  return p == a ? 1.0 : 0.0;
}

double risk_similarity(const RiskScore &p, const RiskScore &a) {
  return 1.0 - std::abs(p.rpn - a.rpn) / 1000.0;
}

FieldScores score_fields(const FailureRecord &potential,
                         const FailureRecord &actual) {
  FieldScores fields;
  fields.cause = category_similarity(potential.cause, actual.cause);
  fields.impact = category_similarity(potential.impact, actual.impact);
  fields.consequence =
      consequence_similarity(potential.consequence, actual.consequence);
  fields.failure_type =
      failure_type_similarity(potential.failure_type, actual.failure_type);
  fields.risk = risk_similarity(potential.risk, actual.risk);
  return fields;
}

double total_score(const FieldScores &fields, const CorrespondenceConfig &config) {
  // Normalizing by the (validated) weight sum keeps a full match at exactly
  // 1.0 regardless of rounding in the configured weights.
  double weight_sum = config.weight_cause + config.weight_impact +
                      config.weight_consequence + config.weight_failure_type +
                      config.weight_risk;
  return (config.weight_cause * fields.cause +
          config.weight_impact * fields.impact +
          config.weight_consequence * fields.consequence +
          config.weight_failure_type * fields.failure_type +
          config.weight_risk * fields.risk) /
         weight_sum;
}

CorrespondenceReport
degree_of_correspondence(const std::vector<FailureRecord> &potential,
                         const std::vector<FailureRecord> &actual,
                         const CorrespondenceConfig &config) {
  const double weights[] = {config.weight_cause, config.weight_impact,
                            config.weight_consequence, config.weight_failure_type,
                            config.weight_risk};
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0)
      throw Error(ErrorCode::InvalidWeights, "weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error(ErrorCode::InvalidWeights, "weights must sum to 1");

  // Input order must not matter: work on id-sorted views.
  std::vector<const FailureRecord *> pots, acts;
  for (const FailureRecord &record : potential)
    pots.push_back(&record);
  for (const FailureRecord &record : actual)
    acts.push_back(&record);
  auto by_id = [](const FailureRecord *a, const FailureRecord *b) {
    return a->id < b->id;
  };
  std::sort(pots.begin(), pots.end(), by_id);
  std::sort(acts.begin(), acts.end(), by_id);

  CorrespondenceReport report;
  report.tau = config.tau;
  report.potential_count = pots.size();
  report.actual_count = acts.size();

  std::set<std::string> covered;
  double degree_sum = 0.0;
  for (const FailureRecord *act : acts) {
    BestMatch best;
    best.actual = act->id;
    for (const FailureRecord *pot : pots) {
      FieldScores fields = score_fields(*pot, *act);
      double total = total_score(fields, config);
      if (!best.potential || total > best.total) {
        best.potential = pot->id;
        best.potential_source = pot->source;
        best.fields = fields;
        best.total = total;
      }
    }
    degree_sum += best.total;
    if (best.total < config.tau)
      report.unmatched.push_back(act->id);
    if (best.potential)
      covered.insert(*best.potential);
    report.matches.push_back(std::move(best));
  }
  report.degree = acts.empty() ? 1.0 : degree_sum / acts.size();
  report.coverage_of_potential =
      pots.empty() ? 1.0 : static_cast<double>(covered.size()) / pots.size();
  return report;
}

} // namespace failnet
