#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "improvement.hpp"
#include "knowledge_base.hpp"
#include "scenario.hpp"
#include "serialization.hpp"

namespace failnet {

// A project directory: kb.json, scenarios.json, config.json, reports/,
// audit.log. One Project instance backs one CLI command; mutating commands
// hold an exclusive lock file, every file write goes through a temp file and
// an atomic rename.
class Project {
public:
  explicit Project(std::filesystem::path root);

  const std::filesystem::path &root() const { return root_; }
  std::filesystem::path kb_path() const { return root_ / "kb.json"; }
  std::filesystem::path scenarios_path() const { return root_ / "scenarios.json"; }
  std::filesystem::path config_path() const { return root_ / "config.json"; }
  std::filesystem::path reports_dir() const { return root_ / "reports"; }
  std::filesystem::path audit_log_path() const { return root_ / "audit.log"; }

  void set_fixed_time(const std::string &iso8601);
  std::string now() const;

  // Scaffolds kb/scenarios/config/reports with shipped defaults.
  void init();

  void import_kb(const std::filesystem::path &file);
  void export_kb(const std::filesystem::path &file);
  ValidationReport validate_kb();
  void add_element(const Element &element);
  void add_link(const Link &link);

  Scenario build_scenario_cmd(const std::string &id, const std::string &name,
                              const std::vector<std::string> &function_ids,
                              int depth, int criticality);
  ValidationReport validate_scenarios(const std::optional<std::string> &id);

  std::filesystem::path analyze(const std::string &scenario_id,
                                int max_effect_hops,
                                const std::optional<std::string> &out);
  std::pair<std::filesystem::path, std::filesystem::path>
  ingest(const std::filesystem::path &corpus,
         const std::optional<std::string> &records_out,
         const std::optional<std::string> &details_out);
  std::filesystem::path correspond(const std::filesystem::path &potential_file,
                                   const std::filesystem::path &actual_file,
                                   const std::optional<std::string> &scenario_id,
                                   const std::optional<std::string> &out);
  std::filesystem::path improve(const std::filesystem::path &corpus,
                                int max_rounds, const AcceptFilter &accept,
                                const std::optional<std::string> &out);

  std::string render(const std::filesystem::path &report_path,
                     const std::string &format);

private:
  void require_files(const std::vector<std::filesystem::path> &paths) const;
  KnowledgeBase load_kb() const;
  std::map<std::string, Scenario> load_scenarios() const;
  Config load_config() const;
  std::vector<Complaint> load_corpus(const std::filesystem::path &corpus) const;
  void save_kb(const KnowledgeBase &kb) const;
  void save_scenarios(const std::map<std::string, Scenario> &scenarios) const;
  std::filesystem::path resolve_out(const std::optional<std::string> &out,
                                    const std::string &default_name) const;

  std::filesystem::path root_;
  std::optional<std::string> fixed_time_;
};

// Writes content to path atomically (temp file + rename); creates parent
// directories as needed.
void atomic_write(const std::filesystem::path &path, const std::string &content);
std::string read_file(const std::filesystem::path &path);

} // namespace failnet
