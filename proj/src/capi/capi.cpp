// extern-C surface of the engine. Wraps the C++ core behind an opaque
// project handle; exceptions become status codes, the message is kept on
// the handle for failnet_last_error().

#include "failnet.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "../core/error.hpp"
#include "../core/project.hpp"
#include "../core/serialization.hpp"

using failnet::Error;
using failnet::ErrorCategory;

struct failnet_project {
  failnet::Project project;
  std::string last_error;

  explicit failnet_project(const char *root) : project(root) {}
};

namespace {

failnet_status status_of(ErrorCategory category) {
  switch (category) {
  case ErrorCategory::Validation:
    return FAILNET_E_VALIDATION;
  case ErrorCategory::Format:
    return FAILNET_E_FORMAT;
  case ErrorCategory::Internal:
    return FAILNET_E_INTERNAL;
  }
  return FAILNET_E_INTERNAL;
}

template <typename Fn>
failnet_status guarded(failnet_project *p, Fn &&fn) {
  if (!p)
    return FAILNET_E_INTERNAL;
  p->last_error.clear();
  try {
    return fn();
  } catch (const Error &error) {
    p->last_error = error.what();
    return status_of(error.category());
  } catch (const std::exception &error) {
    p->last_error = error.what();
    return FAILNET_E_INTERNAL;
  } catch (...) {
    p->last_error = "unknown error";
    return FAILNET_E_INTERNAL;
  }
}

char *copy_string(const std::string &text) {
  char *out = static_cast<char *>(std::malloc(text.size() + 1));
  if (out)
    std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::optional<std::string> opt(const char *value) {
  if (!value || !*value)
    return std::nullopt;
  return std::string(value);
}

} // namespace

extern "C" {

const char *failnet_library_version(void) { return "0.1.0"; }

failnet_status failnet_project_open(const char *root, failnet_project **out) {
  if (!root || !out)
    return FAILNET_E_INTERNAL;
  *out = new (std::nothrow) failnet_project(root);
  return *out ? FAILNET_OK : FAILNET_E_INTERNAL;
}

void failnet_project_close(failnet_project *p) { delete p; }

const char *failnet_last_error(const failnet_project *p) {
  return p ? p->last_error.c_str() : "";
}

void failnet_string_free(char *s) { std::free(s); }

failnet_status failnet_set_fixed_time(failnet_project *p, const char *iso8601) {
  return guarded(p, [&]() {
    p->project.set_fixed_time(iso8601 ? iso8601 : "");
    return FAILNET_OK;
  });
}

failnet_status failnet_kb_init(failnet_project *p) {
  return guarded(p, [&]() {
    p->project.init();
    return FAILNET_OK;
  });
}

failnet_status failnet_kb_import(failnet_project *p, const char *path) {
  return guarded(p, [&]() {
    if (!path)
      throw Error(failnet::ErrorCode::MissingInput, "import path is required");
    p->project.import_kb(path);
    return FAILNET_OK;
  });
}

failnet_status failnet_kb_export(failnet_project *p, const char *path) {
  return guarded(p, [&]() {
    if (!path)
      throw Error(failnet::ErrorCode::MissingInput, "export path is required");
    p->project.export_kb(path);
    return FAILNET_OK;
  });
}

failnet_status failnet_kb_validate(failnet_project *p, char **report_json) {
  return guarded(p, [&]() {
    failnet::ValidationReport report = p->project.validate_kb();
    if (report_json)
      *report_json =
          copy_string(failnet::canonical_dump(failnet::to_json(report)));
    if (!report.ok()) {
      p->last_error = "knowledge base has " +
                      std::to_string(report.violations.size()) +
                      " invariant violation(s)";
      return FAILNET_E_VALIDATION;
    }
    return FAILNET_OK;
  });
}

failnet_status failnet_kb_add_element(failnet_project *p, const char *id,
                                      const char *kind, const char *name,
                                      const char *const *aliases,
                                      size_t n_aliases,
                                      const char *const *attr_keys,
                                      const char *const *attr_values,
                                      size_t n_attrs) {
  return guarded(p, [&]() {
    failnet::Element element;
    element.id = id ? id : "";
    auto parsed = failnet::element_kind_from_string(kind ? kind : "");
    if (!parsed)
      throw Error(failnet::ErrorCode::FormatError,
                  std::string("unknown element kind '") + (kind ? kind : "") + "'");
    element.kind = *parsed;
    element.name = name ? name : "";
    for (size_t i = 0; i < n_aliases; ++i)
      element.aliases.push_back(aliases[i] ? aliases[i] : "");
    for (size_t i = 0; i < n_attrs; ++i)
      element.attributes[attr_keys[i] ? attr_keys[i] : ""] =
          attr_values[i] ? attr_values[i] : "";
    p->project.add_element(element);
    return FAILNET_OK;
  });
}

failnet_status failnet_kb_link(failnet_project *p, const char *from,
                               const char *to, const char *kind) {
  return guarded(p, [&]() {
    auto parsed = failnet::link_kind_from_string(kind ? kind : "");
    if (!parsed)
      throw Error(failnet::ErrorCode::FormatError,
                  std::string("unknown link kind '") + (kind ? kind : "") + "'");
    p->project.add_link({from ? from : "", to ? to : "", *parsed});
    return FAILNET_OK;
  });
}

failnet_status failnet_scenario_build(failnet_project *p,
                                      const char *scenario_id, const char *name,
                                      const char *const *function_ids,
                                      size_t n_functions, int depth,
                                      int criticality) {
  return guarded(p, [&]() {
    std::vector<std::string> functions;
    for (size_t i = 0; i < n_functions; ++i)
      functions.push_back(function_ids[i] ? function_ids[i] : "");
    p->project.build_scenario_cmd(scenario_id ? scenario_id : "",
                                  name ? name : "", functions, depth,
                                  criticality);
    return FAILNET_OK;
  });
}

failnet_status failnet_scenario_validate(failnet_project *p,
                                         const char *scenario_id,
                                         char **report_json) {
  return guarded(p, [&]() {
    failnet::ValidationReport report =
        p->project.validate_scenarios(opt(scenario_id));
    if (report_json)
      *report_json =
          copy_string(failnet::canonical_dump(failnet::to_json(report)));
    if (!report.ok()) {
      p->last_error = "scenarios have " +
                      std::to_string(report.violations.size()) +
                      " violation(s)";
      return FAILNET_E_VALIDATION;
    }
    return FAILNET_OK;
  });
}

failnet_status failnet_analyze(failnet_project *p, const char *scenario_id,
                               int max_effect_hops, const char *out_path) {
  return guarded(p, [&]() {
    if (!scenario_id || !*scenario_id)
      throw Error(failnet::ErrorCode::MissingInput, "scenario id is required");
    p->project.analyze(scenario_id, max_effect_hops, opt(out_path));
    return FAILNET_OK;
  });
}

failnet_status failnet_complaints_ingest(failnet_project *p,
                                         const char *corpus_path,
                                         const char *records_out,
                                         const char *details_out) {
  return guarded(p, [&]() {
    if (!corpus_path)
      throw Error(failnet::ErrorCode::MissingInput, "corpus path is required");
    p->project.ingest(corpus_path, opt(records_out), opt(details_out));
    return FAILNET_OK;
  });
}

failnet_status failnet_correspond(failnet_project *p,
                                  const char *potential_path,
                                  const char *actual_path,
                                  const char *scenario_id,
                                  const char *report_out) {
  return guarded(p, [&]() {
    if (!potential_path || !actual_path)
      throw Error(failnet::ErrorCode::MissingInput,
                  "potential and actual record files are required");
    p->project.correspond(potential_path, actual_path, opt(scenario_id),
                          opt(report_out));
    return FAILNET_OK;
  });
}

failnet_status failnet_improve(failnet_project *p, const char *corpus_path,
                               int max_rounds, failnet_accept_fn accept,
                               void *user, const char *summary_out) {
  return guarded(p, [&]() {
    if (!corpus_path)
      throw Error(failnet::ErrorCode::MissingInput, "corpus path is required");
    failnet::AcceptFilter filter;
    if (accept) {
      filter = [accept, user](const failnet::UpdateProposal &proposal) {
        std::string json =
            failnet::canonical_dump(failnet::to_json(proposal));
        return accept(proposal.id.c_str(), json.c_str(), user) != 0;
      };
    }
    p->project.improve(corpus_path, max_rounds, filter, opt(summary_out));
    return FAILNET_OK;
  });
}

failnet_status failnet_report_render(failnet_project *p,
                                     const char *report_path,
                                     const char *format, char **out_text) {
  return guarded(p, [&]() {
    if (!report_path)
      throw Error(failnet::ErrorCode::MissingInput, "report path is required");
    std::string text =
        p->project.render(report_path, format && *format ? format : "text");
    if (out_text)
      *out_text = copy_string(text);
    return FAILNET_OK;
  });
}

} // extern "C"
