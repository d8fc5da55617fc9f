#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "types.hpp"

namespace failnet {

struct AuditEntry {
  std::string timestamp;
  std::string operation;
  std::string payload_digest;

  bool operator==(const AuditEntry &) const = default;
};

enum class Direction { In, Out, Both };

struct Neighbor {
  Link link;
  Element element; // the element on the other end

  bool operator==(const Neighbor &) const = default;
};

// The linked element store for all views of the product-environment system.
//
// Mutations are atomic (a failed call leaves the store untouched), bump the
// version by exactly one and append an audit entry. The class has value
// semantics; copying yields an independent snapshot, which is how readers
// isolate themselves from the single writer.
class KnowledgeBase {
public:
  bool contains(const std::string &id) const;
  const Element *find(const std::string &id) const;
  const Element &element(const std::string &id) const; // throws UnknownElement
  const std::map<std::string, Element> &elements() const { return elements_; }
  const std::vector<Link> &links() const { return links_; } // canonical order
  std::uint64_t version() const { return version_; }
  const std::vector<AuditEntry> &audit() const { return audit_; }
  const std::set<std::string> &applied_proposals() const {
    return applied_proposals_;
  }

  // Links touching `id`, filtered by kind/direction, ordered by
  // (other element id, link kind name, from, to).
  std::vector<Neighbor> neighbors(const std::string &id,
                                  std::optional<LinkKind> kind_filter,
                                  Direction direction) const;

  // Full invariant sweep. Catches states reachable only through raw imports
  // (dangling endpoints, kind violations, duplicate links, cycles,
  // malformed elements).
  ValidationReport validate() const;

  void add_element(Element element, const std::string &timestamp);
  void add_link(Link link, const std::string &timestamp);
  void add_alias(const std::string &id, const std::string &alias,
                 const std::string &timestamp);
  void mark_proposal_applied(const std::string &proposal_id);

  // Raw assembly for deserialization; performs no invariant checks beyond
  // element id uniqueness (validate() reports the rest).
  static KnowledgeBase
  from_parts(std::vector<Element> elements, std::vector<Link> links,
             std::uint64_t version, std::vector<AuditEntry> audit,
             std::set<std::string> applied_proposals);

  bool operator==(const KnowledgeBase &) const = default;

private:
  void record(const std::string &timestamp, std::string operation,
              const std::string &payload);

  std::map<std::string, Element> elements_;
  std::vector<Link> links_; // sorted by link_less
  std::uint64_t version_ = 0;
  std::vector<AuditEntry> audit_;
  std::set<std::string> applied_proposals_;
};

// Lowercases ASCII letters in place; multi-byte UTF-8 is left untouched.
std::string ascii_lower(std::string text);

} // namespace failnet
