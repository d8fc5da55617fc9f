// failnet command-line front end. Argument parsing only; all engine work
// happens behind the C API in libfailnet.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "failnet.h"

namespace {

struct ProjectCloser {
  void operator()(failnet_project *p) const { failnet_project_close(p); }
};
using ProjectHandle = std::unique_ptr<failnet_project, ProjectCloser>;

const char *category_name(failnet_status status) {
  switch (status) {
  case FAILNET_OK:
    return "ok";
  case FAILNET_E_VALIDATION:
    return "validation";
  case FAILNET_E_FORMAT:
    return "format";
  case FAILNET_E_INTERNAL:
    return "internal";
  }
  return "internal";
}

int finish(const ProjectHandle &project, failnet_status status) {
  if (status != FAILNET_OK)
    std::cerr << "error: category=" << category_name(status) << " "
              << failnet_last_error(project.get()) << "\n";
  return static_cast<int>(status);
}

std::vector<const char *> c_array(const std::vector<std::string> &values) {
  std::vector<const char *> out;
  out.reserve(values.size());
  for (const auto &value : values)
    out.push_back(value.c_str());
  return out;
}

struct AcceptContext {
  bool interactive = false;
  std::set<std::string> allow_list;
  bool use_allow_list = false;
};

int accept_proposal(const char *proposal_id, const char *proposal_json,
                    void *user) {
  auto *context = static_cast<AcceptContext *>(user);
  if (context->use_allow_list)
    return context->allow_list.count(proposal_id) ? 1 : 0;
  if (context->interactive) {
    std::cout << proposal_json << "apply " << proposal_id << "? [y/N] "
              << std::flush;
    std::string line;
    std::getline(std::cin, line);
    return (line == "y" || line == "Y" || line == "yes") ? 1 : 0;
  }
  return 1;
}

void print_owned(char *text) {
  if (text) {
    std::cout << text;
    failnet_string_free(text);
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"failnet — scenario-driven failure identification for "
               "product-environment systems"};
  app.require_subcommand(1);

  std::string project_root = ".";
  std::string fixed_time;
  app.add_option("--project", project_root, "Project root directory")
      ->capture_default_str();
  app.add_option("--fixed-time", fixed_time,
                 "Freeze generated timestamps (ISO-8601) for reproducible output");

  // kb
  auto *kb = app.add_subcommand("kb", "Manage the knowledge base");
  kb->require_subcommand(1);
  kb->add_subcommand("init", "Scaffold a new project with default config");
  std::string import_file;
  auto *kb_import = kb->add_subcommand("import", "Import a knowledge-base file");
  kb_import->add_option("file", import_file, "Knowledge-base file")->required();
  std::string export_file;
  auto *kb_export = kb->add_subcommand("export", "Export the knowledge base");
  kb_export->add_option("file", export_file, "Target path")->required();
  kb->add_subcommand("validate", "Check all knowledge-base invariants");
  std::string el_id, el_kind, el_name;
  std::vector<std::string> el_aliases, el_attrs;
  auto *kb_add = kb->add_subcommand("add-element", "Add one element");
  kb_add->add_option("--id", el_id, "Element id")->required();
  kb_add->add_option("--kind", el_kind,
                     "component|function|event|effect|environmental_factor|"
                     "actor|process|requirement|stakeholder")
      ->required();
  kb_add->add_option("--name", el_name, "Human-readable name")->required();
  kb_add->add_option("--alias", el_aliases, "Alias phrase (repeatable)");
  kb_add->add_option("--attr", el_attrs, "key=value attribute (repeatable)");
  std::string link_from, link_to, link_kind;
  auto *kb_link = kb->add_subcommand("link", "Link two elements");
  kb_link->add_option("from", link_from, "Source element id")->required();
  kb_link->add_option("to", link_to, "Target element id")->required();
  kb_link->add_option("kind", link_kind,
                      "realizes|causes|results_in|triggers|influences|precedes|"
                      "requires|performs|uses|part_of")
      ->required();

  // scenario
  auto *scenario = app.add_subcommand("scenario", "Manage usage scenarios");
  scenario->require_subcommand(1);
  std::string scn_id, scn_name;
  std::vector<std::string> scn_functions;
  int scn_depth = 0, scn_criticality = 0;
  auto *scn_build = scenario->add_subcommand(
      "build", "Build a scenario around selected functions");
  scn_build->add_option("--function", scn_functions, "Function element id")
      ->required();
  scn_build->add_option("--depth", scn_depth, "Hop-bounded scope depth");
  scn_build->add_option("--id", scn_id, "Scenario id (default scn-<n>)");
  scn_build->add_option("--name", scn_name, "Scenario name");
  scn_build->add_option("--criticality", scn_criticality, "Criticality 1..10");
  std::string scn_validate_id;
  auto *scn_validate =
      scenario->add_subcommand("validate", "Validate stored scenarios");
  scn_validate->add_option("--id", scn_validate_id, "Only this scenario");

  // analyze
  std::string analyze_scenario_id, analyze_out;
  int analyze_hops = 0;
  auto *analyze =
      app.add_subcommand("analyze", "Derive potential failure records");
  analyze->add_option("--scenario", analyze_scenario_id, "Scenario id")
      ->required();
  analyze->add_option("--max-effect-hops", analyze_hops,
                      "Longest traversed effect cascade");
  analyze->add_option("--out", analyze_out, "Output records file");

  // complaints
  auto *complaints = app.add_subcommand("complaints", "Process complaint corpora");
  complaints->require_subcommand(1);
  std::string corpus_path, records_out, details_out;
  auto *ingest = complaints->add_subcommand(
      "ingest", "Generalize, prioritize and localize a complaint corpus");
  ingest->add_option("corpus", corpus_path, "Corpus file (one JSON per line)")
      ->required();
  ingest->add_option("--records-out", records_out, "Actual-records output file");
  ingest->add_option("--details-out", details_out, "Per-complaint details file");

  // correspond
  std::string pot_path, act_path, corr_scenario, corr_out;
  auto *correspond = app.add_subcommand(
      "correspond", "Score actual against potential failure records");
  correspond->add_option("--potential", pot_path, "Potential records file")
      ->required();
  correspond->add_option("--actual", act_path, "Actual records file")->required();
  correspond->add_option("--scenario", corr_scenario,
                         "Restrict potential records to one scenario");
  correspond->add_option("--out", corr_out, "Report output file");

  // improve
  std::string improve_corpus, improve_out, accept_list_path;
  int improve_rounds = 0;
  bool improve_interactive = false;
  auto *improve = app.add_subcommand(
      "improve", "Run improvement rounds until convergence");
  improve->add_option("--complaints", improve_corpus, "Complaint corpus file")
      ->required();
  improve->add_option("--rounds", improve_rounds, "Maximum rounds");
  improve->add_flag("--interactive", improve_interactive,
                    "Confirm each proposal on stdin");
  improve->add_option("--accept-list", accept_list_path,
                      "File of proposal ids to accept (one per line)");
  improve->add_option("--out", improve_out, "Round summary output file");

  // report
  std::string report_path, report_format = "text";
  auto *report = app.add_subcommand("report", "Render a stored report");
  report->add_option("file", report_path, "Report file")->required();
  report->add_option("--format", report_format, "text|structured")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  failnet_project *raw = nullptr;
  if (failnet_project_open(project_root.c_str(), &raw) != FAILNET_OK) {
    std::cerr << "error: category=internal cannot open project\n";
    return FAILNET_E_INTERNAL;
  }
  ProjectHandle project(raw);
  if (!fixed_time.empty()) {
    failnet_status status =
        failnet_set_fixed_time(project.get(), fixed_time.c_str());
    if (status != FAILNET_OK)
      return finish(project, status);
  }

  if (kb->parsed()) {
    if (kb->got_subcommand("init"))
      return finish(project, failnet_kb_init(project.get()));
    if (kb->got_subcommand("import"))
      return finish(project,
                    failnet_kb_import(project.get(), import_file.c_str()));
    if (kb->got_subcommand("export"))
      return finish(project,
                    failnet_kb_export(project.get(), export_file.c_str()));
    if (kb->got_subcommand("validate")) {
      char *report_json = nullptr;
      failnet_status status = failnet_kb_validate(project.get(), &report_json);
      print_owned(report_json);
      return finish(project, status);
    }
    if (kb->got_subcommand("add-element")) {
      std::vector<std::string> keys, values;
      for (const auto &attr : el_attrs) {
        auto eq = attr.find('=');
        if (eq == std::string::npos) {
          std::cerr << "error: category=format --attr expects key=value, got '"
                    << attr << "'\n";
          return FAILNET_E_FORMAT;
        }
        keys.push_back(attr.substr(0, eq));
        values.push_back(attr.substr(eq + 1));
      }
      auto alias_ptrs = c_array(el_aliases);
      auto key_ptrs = c_array(keys);
      auto value_ptrs = c_array(values);
      return finish(project,
                    failnet_kb_add_element(
                        project.get(), el_id.c_str(), el_kind.c_str(),
                        el_name.c_str(), alias_ptrs.data(), alias_ptrs.size(),
                        key_ptrs.data(), value_ptrs.data(), key_ptrs.size()));
    }
    if (kb->got_subcommand("link"))
      return finish(project,
                    failnet_kb_link(project.get(), link_from.c_str(),
                                    link_to.c_str(), link_kind.c_str()));
  }

  if (scenario->parsed()) {
    if (scenario->got_subcommand("build")) {
      auto function_ptrs = c_array(scn_functions);
      return finish(project,
                    failnet_scenario_build(
                        project.get(), scn_id.c_str(), scn_name.c_str(),
                        function_ptrs.data(), function_ptrs.size(), scn_depth,
                        scn_criticality));
    }
    if (scenario->got_subcommand("validate")) {
      char *report_json = nullptr;
      failnet_status status = failnet_scenario_validate(
          project.get(),
          scn_validate_id.empty() ? nullptr : scn_validate_id.c_str(),
          &report_json);
      print_owned(report_json);
      return finish(project, status);
    }
  }

  if (analyze->parsed())
    return finish(project,
                  failnet_analyze(project.get(), analyze_scenario_id.c_str(),
                                  analyze_hops,
                                  analyze_out.empty() ? nullptr
                                                      : analyze_out.c_str()));

  if (complaints->parsed() && complaints->got_subcommand("ingest"))
    return finish(project,
                  failnet_complaints_ingest(
                      project.get(), corpus_path.c_str(),
                      records_out.empty() ? nullptr : records_out.c_str(),
                      details_out.empty() ? nullptr : details_out.c_str()));

  if (correspond->parsed())
    return finish(project,
                  failnet_correspond(
                      project.get(), pot_path.c_str(), act_path.c_str(),
                      corr_scenario.empty() ? nullptr : corr_scenario.c_str(),
                      corr_out.empty() ? nullptr : corr_out.c_str()));

  if (improve->parsed()) {
    AcceptContext context;
    context.interactive = improve_interactive;
    if (!accept_list_path.empty()) {
      std::ifstream in(accept_list_path);
      if (!in) {
        std::cerr << "error: category=format cannot read accept list '"
                  << accept_list_path << "'\n";
        return FAILNET_E_FORMAT;
      }
      std::string line;
      while (std::getline(in, line))
        if (!line.empty())
          context.allow_list.insert(line);
      context.use_allow_list = true;
    }
    bool filtered = context.interactive || context.use_allow_list;
    return finish(project,
                  failnet_improve(project.get(), improve_corpus.c_str(),
                                  improve_rounds,
                                  filtered ? accept_proposal : nullptr,
                                  filtered ? &context : nullptr,
                                  improve_out.empty() ? nullptr
                                                      : improve_out.c_str()));
  }

  if (report->parsed()) {
    char *text = nullptr;
    failnet_status status = failnet_report_render(
        project.get(), report_path.c_str(), report_format.c_str(), &text);
    print_owned(text);
    return finish(project, status);
  }

  std::cerr << "error: category=format no command given\n";
  return FAILNET_E_FORMAT;
}
