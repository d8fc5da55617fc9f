#include "project.hpp"

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>

#include <fcntl.h>
#include <unistd.h>

#include "digest.hpp"
#include "error.hpp"
#include "failure_network.hpp"

namespace failnet {

namespace fs = std::filesystem;

void atomic_write(const fs::path &path, const std::string &content) {
  fs::path dir = path.parent_path();
  if (!dir.empty()) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
      throw Error(ErrorCode::IoError,
                  "cannot create directory '" + dir.string() + "': " + ec.message());
  }
  fs::path temp = path;
  temp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(ErrorCode::IoError, "cannot open '" + temp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(temp, ec);
      throw Error(ErrorCode::IoError, "short write to '" + temp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw Error(ErrorCode::IoError, "cannot move temp file onto '" + path.string() + "'");
  }
}

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::MissingInput, "cannot read '" + path.string() + "'");
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return content;
}

namespace {

// Exclusive advisory lock for mutating commands.
class LockFile {
public:
  explicit LockFile(const fs::path &path) : path_(path) {
    fd_ = ::open(path.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd_ < 0)
      throw Error(ErrorCode::Locked,
                  errno == EEXIST
                      ? "project is locked by another command (" + path.string() + ")"
                      : "cannot create lock file '" + path.string() +
                            "': " + std::strerror(errno));
  }
  ~LockFile() {
    if (fd_ >= 0) {
      ::close(fd_);
      ::unlink(path_.c_str());
    }
  }
  LockFile(const LockFile &) = delete;
  LockFile &operator=(const LockFile &) = delete;

private:
  fs::path path_;
  int fd_ = -1;
};

void append_line(const fs::path &path, const std::string &line) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot append to '" + path.string() + "'");
  out << line << "\n";
}

} // namespace

Project::Project(fs::path root) : root_(std::move(root)) {}

void Project::set_fixed_time(const std::string &iso8601) {
  if (iso8601.empty())
    throw Error(ErrorCode::FormatError, "fixed time must not be empty");
  fixed_time_ = iso8601;
}

std::string Project::now() const {
  if (fixed_time_)
    return *fixed_time_;
  std::time_t t = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm_utc;
  gmtime_r(&t, &tm_utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

void Project::require_files(const std::vector<fs::path> &paths) const {
  std::string missing;
  for (const fs::path &path : paths) {
    if (!fs::exists(path)) {
      if (!missing.empty())
        missing += ", ";
      missing += path.string();
    }
  }
  if (!missing.empty())
    throw Error(ErrorCode::MissingInput, "missing required file(s): " + missing);
}

KnowledgeBase Project::load_kb() const {
  require_files({kb_path()});
  return kb_from_json(parse_json(read_file(kb_path()), "knowledge base"));
}

std::map<std::string, Scenario> Project::load_scenarios() const {
  require_files({scenarios_path()});
  return scenarios_from_json(parse_json(read_file(scenarios_path()), "scenarios"));
}

Config Project::load_config() const {
  require_files({config_path()});
  return config_from_json(parse_json(read_file(config_path()), "config"));
}

std::vector<Complaint> Project::load_corpus(const fs::path &corpus) const {
  require_files({corpus});
  return complaints_from_jsonl(read_file(corpus));
}

void Project::save_kb(const KnowledgeBase &kb) const {
  atomic_write(kb_path(), canonical_dump(to_json(kb)));
}

void Project::save_scenarios(const std::map<std::string, Scenario> &scenarios) const {
  atomic_write(scenarios_path(), canonical_dump(scenarios_to_json(scenarios)));
}

fs::path Project::resolve_out(const std::optional<std::string> &out,
                              const std::string &default_name) const {
  if (out)
    return *out;
  return reports_dir() / default_name;
}

void Project::init() {
  if (fs::exists(kb_path()))
    throw Error(ErrorCode::AlreadyInitialized,
                "project already initialized at '" + root_.string() + "'");
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec)
    throw Error(ErrorCode::IoError, "cannot create '" + root_.string() + "'");
  LockFile lock(root_ / ".failnet.lock");
  save_kb(KnowledgeBase{});
  save_scenarios({});
  atomic_write(config_path(), canonical_dump(to_json(default_config())));
  fs::create_directories(reports_dir(), ec);
  if (!fs::exists(audit_log_path()))
    atomic_write(audit_log_path(), "");
}

void Project::import_kb(const fs::path &file) {
  require_files({file});
  LockFile lock(root_ / ".failnet.lock");
  // Imports may carry invariant violations on purpose; `kb validate`
  // reports them. Only structural format errors reject the file here.
  KnowledgeBase kb = kb_from_json(parse_json(read_file(file), "knowledge base"));
  save_kb(kb);
}

void Project::export_kb(const fs::path &file) {
  KnowledgeBase kb = load_kb();
  atomic_write(file, canonical_dump(to_json(kb)));
}

ValidationReport Project::validate_kb() { return load_kb().validate(); }

void Project::add_element(const Element &element) {
  LockFile lock(root_ / ".failnet.lock");
  KnowledgeBase kb = load_kb();
  kb.add_element(element, now());
  save_kb(kb);
}

void Project::add_link(const Link &link) {
  LockFile lock(root_ / ".failnet.lock");
  KnowledgeBase kb = load_kb();
  kb.add_link(link, now());
  save_kb(kb);
}

Scenario Project::build_scenario_cmd(const std::string &id,
                                     const std::string &name,
                                     const std::vector<std::string> &function_ids,
                                     int depth, int criticality) {
  LockFile lock(root_ / ".failnet.lock");
  KnowledgeBase kb = load_kb();
  std::map<std::string, Scenario> scenarios = load_scenarios();
  Config config = load_config();
  std::string scenario_id = id;
  if (scenario_id.empty())
    scenario_id = "scn-" + std::to_string(scenarios.size() + 1);
  if (scenarios.count(scenario_id))
    throw Error(ErrorCode::DuplicateId,
                "scenario id '" + scenario_id + "' already present");
  Scenario scenario = build_scenario(
      kb, scenario_id, name, function_ids,
      depth > 0 ? depth : config.default_scenario_depth,
      criticality > 0 ? criticality : config.default_criticality);
  scenarios.emplace(scenario.id, scenario);
  save_scenarios(scenarios);
  return scenario;
}

ValidationReport
Project::validate_scenarios(const std::optional<std::string> &id) {
  KnowledgeBase kb = load_kb();
  std::map<std::string, Scenario> scenarios = load_scenarios();
  ValidationReport merged;
  for (const auto &[sid, scenario] : scenarios) {
    if (id && sid != *id)
      continue;
    ValidationReport report = validate_scenario(kb, scenario);
    for (Violation &violation : report.violations) {
      violation.context = sid + ":" + violation.context;
      merged.violations.push_back(std::move(violation));
    }
  }
  if (id && !scenarios.count(*id))
    throw Error(ErrorCode::UnknownElement, "no scenario with id '" + *id + "'");
  merged.sort();
  return merged;
}

fs::path Project::analyze(const std::string &scenario_id, int max_effect_hops,
                          const std::optional<std::string> &out) {
  KnowledgeBase kb = load_kb();
  std::map<std::string, Scenario> scenarios = load_scenarios();
  Config config = load_config();
  auto it = scenarios.find(scenario_id);
  if (it == scenarios.end())
    throw Error(ErrorCode::UnknownElement,
                "no scenario with id '" + scenario_id + "'");
  std::vector<FailureRecord> records = analyze_scenario(
      kb, it->second,
      max_effect_hops > 0 ? max_effect_hops : config.default_max_effect_hops,
      config.risk);
  fs::path target = resolve_out(out, "potential-" + scenario_id + ".json");
  atomic_write(target, canonical_dump(records_to_json(records)));
  return target;
}

std::pair<fs::path, fs::path>
Project::ingest(const fs::path &corpus,
                const std::optional<std::string> &records_out,
                const std::optional<std::string> &details_out) {
  KnowledgeBase kb = load_kb();
  Config config = load_config();
  std::vector<IngestedComplaint> ingested =
      ingest_complaints(kb, load_corpus(corpus), config);
  std::vector<FailureRecord> records;
  records.reserve(ingested.size());
  for (const IngestedComplaint &item : ingested)
    records.push_back(item.record);
  fs::path records_path = resolve_out(records_out, "actual-records.json");
  fs::path details_path = resolve_out(details_out, "complaint-details.json");
  atomic_write(records_path, canonical_dump(records_to_json(records)));
  atomic_write(details_path, canonical_dump(details_to_json(ingested)));
  return {records_path, details_path};
}

fs::path Project::correspond(const fs::path &potential_file,
                             const fs::path &actual_file,
                             const std::optional<std::string> &scenario_id,
                             const std::optional<std::string> &out) {
  require_files({potential_file, actual_file});
  Config config = load_config();
  std::vector<FailureRecord> potential =
      records_from_json(parse_json(read_file(potential_file), "records"));
  std::vector<FailureRecord> actual =
      records_from_json(parse_json(read_file(actual_file), "records"));
  if (scenario_id) {
    std::vector<FailureRecord> filtered;
    for (FailureRecord &record : potential)
      if (record.source == *scenario_id)
        filtered.push_back(std::move(record));
    potential = std::move(filtered);
  }
  CorrespondenceReport report =
      degree_of_correspondence(potential, actual, config.correspondence);
  fs::path target = resolve_out(out, "correspondence.json");
  atomic_write(target, canonical_dump(to_json(report)));
  return target;
}

fs::path Project::improve(const fs::path &corpus, int max_rounds,
                          const AcceptFilter &accept,
                          const std::optional<std::string> &out) {
  LockFile lock(root_ / ".failnet.lock");
  KnowledgeBase kb = load_kb();
  std::map<std::string, Scenario> scenarios = load_scenarios();
  Config config = load_config();
  std::vector<Complaint> complaints = load_corpus(corpus);
  int rounds_cap = max_rounds > 0 ? max_rounds : config.default_improve_rounds;

  std::vector<ImprovementRound> rounds;
  for (int round_number = 1; round_number <= rounds_cap; ++round_number) {
    ImprovementRound round = run_round(kb, scenarios, complaints, config,
                                       accept, now(), round_number);
    for (const ProposalOutcome &outcome : round.outcomes) {
      Json entry;
      entry["timestamp"] = now();
      entry["round"] = round.round;
      entry["proposal"] = outcome.proposal.id;
      entry["status"] = to_string(outcome.status);
      entry["source"] = outcome.proposal.source;
      entry["payload_digest"] = digest(canonical_dump(to_json(outcome.proposal)));
      append_line(audit_log_path(), entry.dump());
    }
    save_kb(kb);
    save_scenarios(scenarios);
    bool converged = round.converged();
    rounds.push_back(std::move(round));
    if (converged)
      break;
  }
  fs::path target = resolve_out(out, "improvement.json");
  atomic_write(target, canonical_dump(improvement_to_json(rounds)));
  return target;
}

std::string Project::render(const fs::path &report_path,
                            const std::string &format) {
  require_files({report_path});
  Json value = parse_json(read_file(report_path), "report");
  if (format == "structured")
    return canonical_dump(value);
  if (format == "text")
    return render_report_text(value);
  throw Error(ErrorCode::FormatError,
              "unknown report format '" + format + "' (use text|structured)");
}

} // namespace failnet
