#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "error.hpp"
#include "project.hpp"

using namespace failnet;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("failnet-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int &counter() {
    static int value = 0;
    return value;
  }
};

Element make(const std::string &id, ElementKind kind, const std::string &name,
             std::vector<std::string> aliases = {}) {
  Element element;
  element.id = id;
  element.kind = kind;
  element.name = name;
  element.aliases = std::move(aliases);
  return element;
}

// A project with the worked kb, one scenario and a small corpus.
void populate(Project &project) {
  project.init();
  project.add_element(make("cam", ElementKind::Component, "forward camera",
                           {"camera", "forward camera"}));
  project.add_element(make("det", ElementKind::Function, "object detection",
                           {"object detection", "detection"}));
  project.add_element(make("sky", ElementKind::EnvironmentalFactor,
                           "bright sky background", {"bright sky"}));
  project.add_element(make("con", ElementKind::Effect, "contrast loss",
                           {"contrast loss"}));
  project.add_link({"cam", "det", LinkKind::Realizes});
  project.add_link({"sky", "con", LinkKind::Causes});
  project.add_link({"con", "det", LinkKind::ResultsIn});
  project.build_scenario_cmd("s1", "driving", {"det"}, 3, 0);
}

void write_corpus(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

} // namespace

TEST_CASE("init scaffolds a project and refuses to run twice") {
  TempDir dir;
  Project project(dir.path / "p");
  project.set_fixed_time("2026-01-01T00:00:00Z");
  project.init();
  CHECK(fs::exists(project.kb_path()));
  CHECK(fs::exists(project.scenarios_path()));
  CHECK(fs::exists(project.config_path()));
  CHECK(fs::exists(project.reports_dir()));
  CHECK(fs::exists(project.audit_log_path()));
  try {
    project.init();
    FAIL("second init must fail");
  } catch (const Error &error) {
    CHECK(error.code() == ErrorCode::AlreadyInitialized);
  }
}

TEST_CASE("missing mandatory files produce one consolidated error") {
  TempDir dir;
  Project project(dir.path / "empty");
  try {
    project.analyze("s1", 0, std::nullopt);
    FAIL("expected missing-input error");
  } catch (const Error &error) {
    CHECK(error.code() == ErrorCode::MissingInput);
    std::string message = error.what();
    CHECK(message.find("kb.json") != std::string::npos);
  }
}

TEST_CASE("mutating commands respect the lock file") {
  TempDir dir;
  Project project(dir.path / "p");
  project.set_fixed_time("2026-01-01T00:00:00Z");
  project.init();
  {
    std::ofstream lock(dir.path / "p" / ".failnet.lock");
    lock << "held";
  }
  try {
    project.add_element(make("x", ElementKind::Component, "x"));
    FAIL("expected lock error");
  } catch (const Error &error) {
    CHECK(error.code() == ErrorCode::Locked);
  }
  // read-only commands are unaffected
  CHECK(project.validate_kb().ok());
  fs::remove(dir.path / "p" / ".failnet.lock");
  project.add_element(make("x", ElementKind::Component, "x"));
  CHECK(project.validate_kb().ok());
}

TEST_CASE("no temp files survive a command") {
  TempDir dir;
  Project project(dir.path / "p");
  project.set_fixed_time("2026-01-01T00:00:00Z");
  populate(project);
  project.analyze("s1", 0, std::nullopt);
  for (const auto &entry : fs::recursive_directory_iterator(dir.path)) {
    CHECK(entry.path().string().find(".tmp-") == std::string::npos);
    CHECK(entry.path().filename() != ".failnet.lock");
  }
}

TEST_CASE("identical inputs produce byte-identical outputs under fixed time") {
  TempDir dir;
  std::string corpus =
      R"({"id":"c1","text":"bright sky ruined detection","duplicate_count":5})"
      "\n"
      R"({"id":"c2","text":"odd ticking sound","duplicate_count":2})"
      "\n";

  auto run = [&](const std::string &name) {
    Project project(dir.path / name);
    project.set_fixed_time("2026-01-01T00:00:00Z");
    populate(project);
    write_corpus(dir.path / (name + ".jsonl"), corpus);
    project.analyze("s1", 0, std::nullopt);
    project.ingest(dir.path / (name + ".jsonl"), std::nullopt, std::nullopt);
    project.correspond(project.reports_dir() / "potential-s1.json",
                       project.reports_dir() / "actual-records.json",
                       std::nullopt, std::nullopt);
    project.improve(dir.path / (name + ".jsonl"), 0, nullptr, std::nullopt);
  };
  run("a");
  run("b");

  for (const char *file :
       {"kb.json", "scenarios.json", "config.json", "audit.log",
        "reports/potential-s1.json", "reports/actual-records.json",
        "reports/complaint-details.json", "reports/correspondence.json",
        "reports/improvement.json"}) {
    CAPTURE(file);
    CHECK(read_file(dir.path / "a" / file) == read_file(dir.path / "b" / file));
  }
}

TEST_CASE("kb export, import, export round-trips byte-identically") {
  TempDir dir;
  Project project(dir.path / "p");
  project.set_fixed_time("2026-01-01T00:00:00Z");
  populate(project);
  fs::path first = dir.path / "export1.json";
  project.export_kb(first);

  Project other(dir.path / "q");
  other.set_fixed_time("2026-01-02T00:00:00Z");
  other.init();
  other.import_kb(first);
  fs::path second = dir.path / "export2.json";
  other.export_kb(second);
  CHECK(read_file(first) == read_file(second));
  CHECK(read_file(first) == read_file(project.kb_path()));

  // scenarios are canonical on disk as well: a reload re-serializes identically
  std::string scenarios_bytes = read_file(project.scenarios_path());
  auto scenarios = scenarios_from_json(parse_json(scenarios_bytes, "scenarios"));
  CHECK(canonical_dump(scenarios_to_json(scenarios)) == scenarios_bytes);
}

TEST_CASE("imports may carry violations for validate to find") {
  TempDir dir;
  Project project(dir.path / "p");
  project.set_fixed_time("2026-01-01T00:00:00Z");
  project.init();
  fs::path damaged = dir.path / "damaged.json";
  atomic_write(damaged, R"({
    "elements": [{"id": "a", "kind": "component", "name": "a"}],
    "links": [{"from": "a", "to": "ghost", "kind": "part_of"}],
    "version": 2
  })");
  project.import_kb(damaged);
  ValidationReport report = project.validate_kb();
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].code == "unknown_endpoint");
}

TEST_CASE("correspond filters potential records per scenario") {
  TempDir dir;
  Project project(dir.path / "p");
  project.set_fixed_time("2026-01-01T00:00:00Z");
  populate(project);
  write_corpus(dir.path / "c.jsonl",
               R"({"id":"c1","text":"bright sky broke detection","duplicate_count":5})"
               "\n");
  project.analyze("s1", 0, std::nullopt);
  project.ingest(dir.path / "c.jsonl", std::nullopt, std::nullopt);

  fs::path with = project.correspond(
      project.reports_dir() / "potential-s1.json",
      project.reports_dir() / "actual-records.json", std::string("s1"),
      (dir.path / "with.json").string());
  fs::path without = project.correspond(
      project.reports_dir() / "potential-s1.json",
      project.reports_dir() / "actual-records.json", std::string("other"),
      (dir.path / "without.json").string());
  Json with_json = parse_json(read_file(with), "report");
  Json without_json = parse_json(read_file(without), "report");
  CHECK(with_json.at("potential_count").get<int>() == 1);
  CHECK(without_json.at("potential_count").get<int>() == 0);
  CHECK(without_json.at("degree").get<double>() == 0.0);
}

TEST_CASE("render structured output equals the canonical file") {
  TempDir dir;
  Project project(dir.path / "p");
  project.set_fixed_time("2026-01-01T00:00:00Z");
  populate(project);
  fs::path records = project.analyze("s1", 0, std::nullopt);
  CHECK(project.render(records, "structured") == read_file(records));
  std::string text = project.render(records, "text");
  CHECK(text.find("records: 1") != std::string::npos);
  CHECK_THROWS_AS(project.render(records, "yaml"), Error);
}

TEST_CASE("improve honors the accept filter") {
  TempDir dir;
  Project project(dir.path / "p");
  project.set_fixed_time("2026-01-01T00:00:00Z");
  populate(project);
  write_corpus(dir.path / "c.jsonl",
               R"({"id":"c9","text":"phantom rattle","duplicate_count":1})"
               "\n");
  fs::path summary =
      project.improve(dir.path / "c.jsonl", 3,
                      [](const UpdateProposal &) { return false; }, std::nullopt);
  Json value = parse_json(read_file(summary), "report");
  // every proposal rejected: the loop cannot converge within the cap
  CHECK(value.at("converged").get<bool>() == false);
  REQUIRE(value.at("rounds").size() == 3);
  for (const Json &round : value.at("rounds"))
    for (const Json &outcome : round.at("outcomes"))
      CHECK(outcome.at("status").get<std::string>() == "rejected");
  // audit log recorded each decision
  std::string audit = read_file(project.audit_log_path());
  CHECK(audit.find("rejected") != std::string::npos);
}
