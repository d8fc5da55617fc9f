#include "knowledge_base.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "digest.hpp"
#include "error.hpp"

namespace failnet {

std::string ascii_lower(std::string text) {
  for (char &c : text)
    if (c >= 'A' && c <= 'Z')
      c = static_cast<char>(c - 'A' + 'a');
  return text;
}

namespace {

std::string element_payload(const Element &e) {
  std::string payload = "element;id=" + e.id + ";kind=" + to_string(e.kind) +
                        ";name=" + e.name + ";aliases=";
  for (const auto &alias : e.aliases)
    payload += alias + ",";
  payload += ";attrs=";
  for (const auto &[key, value] : e.attributes)
    payload += key + "=" + value + ",";
  return payload;
}

std::string link_payload(const Link &l) {
  return "link;from=" + l.from + ";to=" + l.to + ";kind=" + to_string(l.kind);
}

// True when a path `from` -> ... -> `to` exists over links of one kind.
bool path_exists(const std::vector<Link> &links, LinkKind kind,
                 const std::string &from, const std::string &to) {
  if (from == to)
    return true;
  std::set<std::string> seen{from};
  std::vector<std::string> frontier{from};
  while (!frontier.empty()) {
    std::string current = frontier.back();
    frontier.pop_back();
    for (const Link &link : links) {
      if (link.kind != kind || link.from != current)
        continue;
      if (link.to == to)
        return true;
      if (seen.insert(link.to).second)
        frontier.push_back(link.to);
    }
  }
  return false;
}

void check_element_shape(const Element &e) {
  if (e.id.empty())
    throw Error(ErrorCode::MalformedElement, "element id must not be empty");
  if (e.name.empty())
    throw Error(ErrorCode::MalformedElement,
                "element '" + e.id + "' has an empty name");
  for (const auto &alias : e.aliases)
    if (alias.empty())
      throw Error(ErrorCode::MalformedElement,
                  "element '" + e.id + "' has an empty alias");
}

} // namespace

bool KnowledgeBase::contains(const std::string &id) const {
  return elements_.count(id) != 0;
}

const Element *KnowledgeBase::find(const std::string &id) const {
  auto it = elements_.find(id);
  return it == elements_.end() ? nullptr : &it->second;
}

const Element &KnowledgeBase::element(const std::string &id) const {
  const Element *found = find(id);
  if (!found)
    throw Error(ErrorCode::UnknownElement, "no element with id '" + id + "'");
  return *found;
}

void KnowledgeBase::record(const std::string &timestamp, std::string operation,
                           const std::string &payload) {
  audit_.push_back({timestamp, std::move(operation), digest(payload)});
  version_ += 1;
}

void KnowledgeBase::add_element(Element element, const std::string &timestamp) {
  check_element_shape(element);
  if (contains(element.id))
    throw Error(ErrorCode::DuplicateId,
                "element id '" + element.id + "' already present");
  for (auto &alias : element.aliases)
    alias = ascii_lower(std::move(alias));
  std::sort(element.aliases.begin(), element.aliases.end());
  element.aliases.erase(
      std::unique(element.aliases.begin(), element.aliases.end()),
      element.aliases.end());
  std::string payload = element_payload(element);
  std::string id = element.id;
  elements_.emplace(id, std::move(element));
  record(timestamp, "add_element", payload);
}

void KnowledgeBase::add_link(Link link, const std::string &timestamp) {
  const Element *from = find(link.from);
  const Element *to = find(link.to);
  if (!from || !to)
    throw Error(ErrorCode::UnknownEndpoint,
                "link endpoint '" + (from ? link.to : link.from) +
                    "' does not resolve");
  if (!link_kind_allows(link.kind, from->kind, to->kind))
    throw Error(ErrorCode::KindConstraintViolated,
                std::string(to_string(link.kind)) + " cannot connect " +
                    to_string(from->kind) + " '" + link.from + "' to " +
                    to_string(to->kind) + " '" + link.to + "'");
  auto position = std::lower_bound(links_.begin(), links_.end(), link, link_less);
  if (position != links_.end() && *position == link)
    throw Error(ErrorCode::DuplicateLink,
                "link " + std::string(to_string(link.kind)) + " '" + link.from +
                    "' -> '" + link.to + "' already present");
  if (link_kind_acyclic(link.kind) &&
      path_exists(links_, link.kind, link.to, link.from))
    throw Error(ErrorCode::CycleIntroduced,
                "link " + std::string(to_string(link.kind)) + " '" + link.from +
                    "' -> '" + link.to + "' would close a cycle");
  std::string payload = link_payload(link);
  links_.insert(position, std::move(link));
  record(timestamp, "add_link", payload);
}

void KnowledgeBase::add_alias(const std::string &id, const std::string &alias,
                              const std::string &timestamp) {
  auto it = elements_.find(id);
  if (it == elements_.end())
    throw Error(ErrorCode::UnknownElement, "no element with id '" + id + "'");
  if (alias.empty())
    throw Error(ErrorCode::MalformedElement, "alias must not be empty");
  std::string lowered = ascii_lower(alias);
  auto &aliases = it->second.aliases;
  auto position = std::lower_bound(aliases.begin(), aliases.end(), lowered);
  if (position != aliases.end() && *position == lowered)
    throw Error(ErrorCode::DuplicateAlias,
                "element '" + id + "' already has alias '" + lowered + "'");
  aliases.insert(position, lowered);
  record(timestamp, "add_alias", "alias;id=" + id + ";alias=" + lowered);
}

void KnowledgeBase::mark_proposal_applied(const std::string &proposal_id) {
  applied_proposals_.insert(proposal_id);
}

std::vector<Neighbor> KnowledgeBase::neighbors(
    const std::string &id, std::optional<LinkKind> kind_filter,
    Direction direction) const {
  if (!contains(id))
    throw Error(ErrorCode::UnknownElement, "no element with id '" + id + "'");
  std::vector<Neighbor> out;
  for (const Link &link : links_) {
    if (kind_filter && link.kind != *kind_filter)
      continue;
    bool matches = false;
    std::string other;
    switch (direction) {
    case Direction::Out:
      matches = link.from == id;
      other = link.to;
      break;
    case Direction::In:
      matches = link.to == id;
      other = link.from;
      break;
    case Direction::Both:
      matches = link.from == id || link.to == id;
      other = link.from == id ? link.to : link.from;
      break;
    }
    if (matches)
      out.push_back({link, element(other)});
  }
  std::sort(out.begin(), out.end(), [](const Neighbor &a, const Neighbor &b) {
    auto key = [](const Neighbor &n) {
      return std::make_tuple(n.element.id, std::string(to_string(n.link.kind)),
                             n.link.from, n.link.to);
    };
    return key(a) < key(b);
  });
  return out;
}

ValidationReport KnowledgeBase::validate() const {
  ValidationReport report;
  for (const auto &[id, element] : elements_) {
    if (id != element.id)
      report.add("duplicate_id", id, "element id mismatch in store");
    if (element.name.empty())
      report.add("malformed_element", id, "empty name");
    for (const auto &alias : element.aliases) {
      if (alias.empty())
        report.add("malformed_element", id, "empty alias");
      else if (alias != ascii_lower(alias))
        report.add("malformed_element", id, "alias '" + alias + "' not lowercase");
    }
  }
  std::vector<Link> sorted = links_;
  std::sort(sorted.begin(), sorted.end(), link_less);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Link &link = sorted[i];
    std::string context = std::string(to_string(link.kind)) + " " + link.from +
                          " -> " + link.to;
    const Element *from = find(link.from);
    const Element *to = find(link.to);
    if (!from)
      report.add("unknown_endpoint", context, "source '" + link.from + "' missing");
    if (!to)
      report.add("unknown_endpoint", context, "target '" + link.to + "' missing");
    if (from && to && !link_kind_allows(link.kind, from->kind, to->kind))
      report.add("kind_constraint_violated", context,
                 std::string(to_string(from->kind)) + " -> " +
                     to_string(to->kind) + " not allowed for this kind");
    if (i > 0 && sorted[i - 1] == link)
      report.add("duplicate_link", context, "duplicate link triple");
  }
  for (LinkKind kind : {LinkKind::PartOf, LinkKind::Precedes}) {
    // Any edge lying on a cycle is one whose reversal already has a path.
    for (const Link &link : sorted) {
      if (link.kind != kind)
        continue;
      if (path_exists(sorted, kind, link.to, link.from)) {
        report.add("cycle_introduced",
                   std::string(to_string(kind)) + " " + link.from + " -> " +
                       link.to,
                   "edge lies on a cycle");
      }
    }
  }
  report.sort();
  return report;
}

KnowledgeBase KnowledgeBase::from_parts(std::vector<Element> elements,
                                        std::vector<Link> links,
                                        std::uint64_t version,
                                        std::vector<AuditEntry> audit,
                                        std::set<std::string> applied_proposals) {
  KnowledgeBase kb;
  for (auto &element : elements) {
    std::string id = element.id;
    if (!kb.elements_.emplace(id, std::move(element)).second)
      throw Error(ErrorCode::DuplicateId,
                  "duplicate element id '" + id + "' in input");
  }
  kb.links_ = std::move(links);
  std::sort(kb.links_.begin(), kb.links_.end(), link_less);
  kb.version_ = version;
  kb.audit_ = std::move(audit);
  kb.applied_proposals_ = std::move(applied_proposals);
  return kb;
}

} // namespace failnet
