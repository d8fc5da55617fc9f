#pragma once

// Independent reference implementations used to cross-check the engine.
// Everything here is written as plain, direct loops over the raw data —
// no shared code with the implementation paths under test.

#include <algorithm>
#include <compare>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "complaints.hpp"
#include "correspondence.hpp"
#include "failure_network.hpp"
#include "knowledge_base.hpp"
#include "records.hpp"
#include "scenario.hpp"

namespace oracle {

using failnet::Element;
using failnet::ElementKind;
using failnet::KnowledgeBase;
using failnet::Link;
using failnet::LinkKind;

// ---- graph oracles --------------------------------------------------------

// Directed cycle detection by exhaustive path search from every node.
inline bool has_cycle(const std::vector<std::pair<std::string, std::string>> &edges) {
  std::set<std::string> nodes;
  for (const auto &[a, b] : edges) {
    nodes.insert(a);
    nodes.insert(b);
  }
  for (const auto &start : nodes) {
    // breadth-first from each successor of start; if start is reachable
    // again, the edge set has a cycle through start
    std::set<std::string> reached;
    std::vector<std::string> frontier;
    for (const auto &[a, b] : edges)
      if (a == start)
        frontier.push_back(b);
    while (!frontier.empty()) {
      std::string current = frontier.back();
      frontier.pop_back();
      if (current == start)
        return true;
      if (!reached.insert(current).second)
        continue;
      for (const auto &[a, b] : edges)
        if (a == current)
          frontier.push_back(b);
    }
  }
  return false;
}

// Exhaustive scan over the raw link list, mirroring the documented
// neighbors() contract.
inline std::vector<failnet::Neighbor>
neighbors_scan(const KnowledgeBase &kb, const std::string &id,
               std::optional<LinkKind> kind_filter, failnet::Direction direction) {
  std::vector<failnet::Neighbor> out;
  for (const Link &link : kb.links()) {
    if (kind_filter && link.kind != *kind_filter)
      continue;
    if (direction == failnet::Direction::Out && link.from != id)
      continue;
    if (direction == failnet::Direction::In && link.to != id)
      continue;
    if (direction == failnet::Direction::Both && link.from != id && link.to != id)
      continue;
    std::string other;
    if (direction == failnet::Direction::In)
      other = link.from;
    else if (direction == failnet::Direction::Out)
      other = link.to;
    else
      other = link.from == id ? link.to : link.from;
    out.push_back({link, kb.element(other)});
  }
  std::sort(out.begin(), out.end(),
            [](const failnet::Neighbor &a, const failnet::Neighbor &b) {
              return std::make_tuple(a.element.id,
                                     std::string(to_string(a.link.kind)),
                                     a.link.from, a.link.to) <
                     std::make_tuple(b.element.id,
                                     std::string(to_string(b.link.kind)),
                                     b.link.from, b.link.to);
            });
  return out;
}

// Breadth-first closure over undirected hops, the scenario-scope contract.
inline std::set<std::string> reachable(const KnowledgeBase &kb,
                                       const std::vector<std::string> &starts,
                                       int depth) {
  std::set<std::string> current(starts.begin(), starts.end());
  std::set<std::string> all = current;
  for (int hop = 0; hop < depth; ++hop) {
    std::set<std::string> next;
    for (const Link &link : kb.links()) {
      if (current.count(link.from) && !all.count(link.to))
        next.insert(link.to);
      if (current.count(link.to) && !all.count(link.from))
        next.insert(link.from);
    }
    if (next.empty())
      break;
    all.insert(next.begin(), next.end());
    current = next;
  }
  return all;
}

// ---- failure-chain oracle ---------------------------------------------------

// Brute-force enumeration of cause -Causes-> e1 (-Triggers-> e)* -ResultsIn->
// impact paths: recursive depth-first over explicit link scans, simple effect
// paths, every node inside the scenario scope.
struct ChainTuple {
  std::string cause;
  std::vector<std::string> effects;
  std::string impact;

  auto operator<=>(const ChainTuple &) const = default;
};

inline void chain_walk(const KnowledgeBase &kb, const failnet::Scenario &scenario,
                       int max_hops, const std::string &cause,
                       std::vector<std::string> &effects,
                       std::vector<ChainTuple> &out) {
  const std::string &tail = effects.back();
  for (const Link &link : kb.links()) {
    if (link.from != tail)
      continue;
    if (link.kind == LinkKind::ResultsIn && scenario.elements.count(link.to)) {
      const Element *impact = kb.find(link.to);
      if (impact && failnet::is_impact_kind(impact->kind))
        out.push_back({cause, effects, link.to});
    }
    if (link.kind == LinkKind::Triggers && scenario.elements.count(link.to) &&
        static_cast<int>(effects.size()) < max_hops) {
      const Element *next = kb.find(link.to);
      bool revisits =
          std::find(effects.begin(), effects.end(), link.to) != effects.end();
      if (next && next->kind == ElementKind::Effect && !revisits) {
        effects.push_back(link.to);
        chain_walk(kb, scenario, max_hops, cause, effects, out);
        effects.pop_back();
      }
    }
  }
}

inline std::vector<ChainTuple> enumerate_chains(const KnowledgeBase &kb,
                                                const failnet::Scenario &scenario,
                                                int max_hops) {
  std::vector<ChainTuple> out;
  for (const auto &id : scenario.elements) {
    const Element *cause = kb.find(id);
    if (!cause || !failnet::is_cause_kind(cause->kind))
      continue;
    for (const Link &link : kb.links()) {
      if (link.kind != LinkKind::Causes || link.from != id)
        continue;
      if (!scenario.elements.count(link.to))
        continue;
      const Element *effect = kb.find(link.to);
      if (!effect || effect->kind != ElementKind::Effect)
        continue;
      std::vector<std::string> effects{link.to};
      chain_walk(kb, scenario, max_hops, id, effects, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- text-matching oracles --------------------------------------------------

// Reference splitter: same segmentation rules as the engine tokenizer,
// written as a straightforward two-phase split-then-filter pass.
inline std::vector<std::string>
reference_split(const std::string &text, const std::set<std::string> &stopwords) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&]() {
    if (!current.empty()) {
      words.push_back(current);
      current.clear();
    }
  };
  for (unsigned char c : text) {
    bool wordish = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
                   (c >= 'A' && c <= 'Z') || c >= 0x80;
    if (!wordish) {
      flush();
      continue;
    }
    current.push_back(
        (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a')
                               : static_cast<char>(c));
  }
  flush();
  std::vector<std::string> kept;
  for (const auto &word : words)
    if (!stopwords.count(word))
      kept.push_back(word);
  return kept;
}

// Naive greedy matcher over (element, alias-token-list) pairs: at each token
// position enumerate every alias at every offset, take the longest run
// (ties: higher score, then smaller element, then smaller alias), consume it.
struct AliasSpec {
  std::string element;
  std::string alias;
  std::vector<std::string> tokens;
};

struct PlacedMatch {
  std::size_t first = 0;
  std::size_t count = 0;
  std::string element;
  std::string alias;
  double score = 0.0;

  bool operator==(const PlacedMatch &) const = default;
};

inline std::vector<PlacedMatch>
greedy_place(const std::vector<std::string> &tokens,
             const std::vector<AliasSpec> &aliases) {
  std::vector<PlacedMatch> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    PlacedMatch best;
    for (const AliasSpec &spec : aliases) {
      for (std::size_t offset = 0; offset < spec.tokens.size(); ++offset) {
        std::size_t run = 0;
        while (i + run < tokens.size() && offset + run < spec.tokens.size() &&
               tokens[i + run] == spec.tokens[offset + run])
          ++run;
        if (run == 0)
          continue;
        double score = double(run) / double(spec.tokens.size());
        bool better = run > best.count ||
                      (run == best.count && score > best.score) ||
                      (run == best.count && score == best.score &&
                       (spec.element < best.element ||
                        (spec.element == best.element && spec.alias < best.alias)));
        if (better)
          best = {i, run, spec.element, spec.alias, score};
      }
    }
    if (best.count > 0) {
      out.push_back(best);
      i += best.count;
    } else {
      ++i;
    }
  }
  return out;
}

// ---- correspondence oracle --------------------------------------------------

// All-pairs scoring with literal field rules; per-actual best with smallest
// potential id on ties; mean of bests.
struct CorrespondenceOracle {
  double degree = 1.0;
  std::map<std::string, std::pair<std::string, double>> best; // actual -> (pot, score)
  std::vector<std::string> unmatched;
};

inline double oracle_pair_score(const failnet::FailureRecord &p,
                                const failnet::FailureRecord &a,
                                const failnet::CorrespondenceConfig &w) {
  double cause = 0.0;
  if (!p.cause.element.empty() && p.cause.element == a.cause.element)
    cause = 1.0;
  else if (p.cause.kind == a.cause.kind)
    cause = 0.5;
  double impact = 0.0;
  if (!p.impact.element.empty() && p.impact.element == a.impact.element)
    impact = 1.0;
  else if (p.impact.kind == a.impact.kind)
    impact = 0.5;
  double consequence = p.consequence.cls == a.consequence.cls ? 1.0 : 0.0;
  double type = p.failure_type == a.failure_type ? 1.0 : 0.0;
  double risk = 1.0 - std::abs(p.risk.rpn - a.risk.rpn) / 1000.0;
  double weight_sum = w.weight_cause + w.weight_impact + w.weight_consequence +
                      w.weight_failure_type + w.weight_risk;
  return (w.weight_cause * cause + w.weight_impact * impact +
          w.weight_consequence * consequence + w.weight_failure_type * type +
          w.weight_risk * risk) /
         weight_sum;
}

inline CorrespondenceOracle
correspondence_brute_force(const std::vector<failnet::FailureRecord> &potential,
                           const std::vector<failnet::FailureRecord> &actual,
                           const failnet::CorrespondenceConfig &config) {
  CorrespondenceOracle out;
  double sum = 0.0;
  for (const auto &act : actual) {
    std::string best_id;
    double best_score = 0.0;
    bool first = true;
    for (const auto &pot : potential) {
      double score = oracle_pair_score(pot, act, config);
      if (first || score > best_score ||
          (score == best_score && pot.id < best_id)) {
        best_id = pot.id;
        best_score = score;
        first = false;
      }
    }
    if (potential.empty())
      best_score = 0.0;
    out.best[act.id] = {best_id, best_score};
    sum += best_score;
    if (best_score < config.tau)
      out.unmatched.push_back(act.id);
  }
  out.degree = actual.empty() ? 1.0 : sum / actual.size();
  std::sort(out.unmatched.begin(), out.unmatched.end());
  return out;
}

} // namespace oracle
