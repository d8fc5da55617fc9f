#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "failnet.h"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("failnet-capi-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

struct Handle {
  failnet_project *p = nullptr;
  explicit Handle(const fs::path &root) {
    REQUIRE(failnet_project_open(root.string().c_str(), &p) == FAILNET_OK);
    REQUIRE(failnet_set_fixed_time(p, "2026-01-01T00:00:00Z") == FAILNET_OK);
  }
  ~Handle() { failnet_project_close(p); }
};

void seed_project(failnet_project *p) {
  REQUIRE(failnet_kb_init(p) == FAILNET_OK);
  const char *cam_aliases[] = {"camera"};
  REQUIRE(failnet_kb_add_element(p, "cam", "component", "forward camera",
                                 cam_aliases, 1, nullptr, nullptr, 0) ==
          FAILNET_OK);
  const char *det_aliases[] = {"object detection", "detection"};
  REQUIRE(failnet_kb_add_element(p, "det", "function", "object detection",
                                 det_aliases, 2, nullptr, nullptr, 0) ==
          FAILNET_OK);
  const char *sky_aliases[] = {"bright sky"};
  REQUIRE(failnet_kb_add_element(p, "sky", "environmental_factor",
                                 "bright sky background", sky_aliases, 1,
                                 nullptr, nullptr, 0) == FAILNET_OK);
  const char *con_aliases[] = {"contrast loss"};
  REQUIRE(failnet_kb_add_element(p, "con", "effect", "contrast loss",
                                 con_aliases, 1, nullptr, nullptr, 0) ==
          FAILNET_OK);
  REQUIRE(failnet_kb_link(p, "cam", "det", "realizes") == FAILNET_OK);
  REQUIRE(failnet_kb_link(p, "sky", "con", "causes") == FAILNET_OK);
  REQUIRE(failnet_kb_link(p, "con", "det", "results_in") == FAILNET_OK);
  const char *functions[] = {"det"};
  REQUIRE(failnet_scenario_build(p, "s1", "driving", functions, 1, 3, 0) ==
          FAILNET_OK);
}

} // namespace

TEST_CASE("status codes mirror the error categories") {
  TempDir dir;
  Handle handle(dir.path / "p");
  failnet_project *p = handle.p;
  seed_project(p);

  SUBCASE("validation errors return 1 with a message") {
    const char *aliases[] = {"camera"};
    failnet_status status = failnet_kb_add_element(
        p, "cam", "component", "duplicate", aliases, 1, nullptr, nullptr, 0);
    CHECK(status == FAILNET_E_VALIDATION);
    CHECK(std::strlen(failnet_last_error(p)) > 0);
  }

  SUBCASE("format errors return 2") {
    CHECK(failnet_kb_add_element(p, "x", "gizmo", "bad kind", nullptr, 0,
                                 nullptr, nullptr, 0) == FAILNET_E_FORMAT);
    CHECK(failnet_kb_link(p, "cam", "det", "telepathy") == FAILNET_E_FORMAT);
  }

  SUBCASE("missing inputs return 2") {
    CHECK(failnet_complaints_ingest(p, (dir.path / "nope.jsonl").c_str(),
                                    nullptr, nullptr) == FAILNET_E_FORMAT);
  }

  SUBCASE("a successful call clears the previous error") {
    CHECK(failnet_kb_link(p, "cam", "det", "telepathy") == FAILNET_E_FORMAT);
    CHECK(failnet_kb_validate(p, nullptr) == FAILNET_OK);
    CHECK(std::strlen(failnet_last_error(p)) == 0);
  }
}

TEST_CASE("validation report is returned as an owned string") {
  TempDir dir;
  Handle handle(dir.path / "p");
  seed_project(handle.p);
  char *report = nullptr;
  CHECK(failnet_kb_validate(handle.p, &report) == FAILNET_OK);
  REQUIRE(report != nullptr);
  CHECK(std::string(report).find("\"violations\": []") != std::string::npos);
  failnet_string_free(report);
}

TEST_CASE("full pipeline through the C surface") {
  TempDir dir;
  Handle handle(dir.path / "p");
  failnet_project *p = handle.p;
  seed_project(p);

  {
    std::ofstream corpus(dir.path / "c.jsonl");
    corpus << R"({"id":"c1","text":"bright sky killed detection","duplicate_count":5})"
           << "\n"
           << R"({"id":"c2","text":"mysterious crackle","duplicate_count":1})"
           << "\n";
  }

  CHECK(failnet_analyze(p, "s1", 0, nullptr) == FAILNET_OK);
  CHECK(failnet_complaints_ingest(p, (dir.path / "c.jsonl").c_str(), nullptr,
                                  nullptr) == FAILNET_OK);
  fs::path reports = dir.path / "p" / "reports";
  CHECK(fs::exists(reports / "potential-s1.json"));
  CHECK(fs::exists(reports / "actual-records.json"));
  CHECK(fs::exists(reports / "complaint-details.json"));

  CHECK(failnet_correspond(p, (reports / "potential-s1.json").c_str(),
                           (reports / "actual-records.json").c_str(), nullptr,
                           nullptr) == FAILNET_OK);
  char *text = nullptr;
  CHECK(failnet_report_render(p, (reports / "correspondence.json").c_str(),
                              "text", &text) == FAILNET_OK);
  REQUIRE(text != nullptr);
  CHECK(std::string(text).find("degree of correspondence") != std::string::npos);
  failnet_string_free(text);

  CHECK(failnet_improve(p, (dir.path / "c.jsonl").c_str(), 0, nullptr, nullptr,
                        nullptr) == FAILNET_OK);
  CHECK(fs::exists(reports / "improvement.json"));
}

TEST_CASE("improve consults the accept callback") {
  TempDir dir;
  Handle handle(dir.path / "p");
  failnet_project *p = handle.p;
  seed_project(p);
  {
    std::ofstream corpus(dir.path / "c.jsonl");
    corpus << R"({"id":"c9","text":"phantom rattle","duplicate_count":1})"
           << "\n";
  }
  struct Counter {
    int calls = 0;
  } counter;
  auto reject_all = [](const char *id, const char *json, void *user) -> int {
    auto *c = static_cast<Counter *>(user);
    c->calls += 1;
    CHECK(std::strlen(id) > 0);
    CHECK(std::strlen(json) > 0);
    return 0;
  };
  CHECK(failnet_improve(p, (dir.path / "c.jsonl").c_str(), 1, reject_all,
                        &counter, nullptr) == FAILNET_OK);
  CHECK(counter.calls > 0);
}

TEST_CASE("library identifies itself") {
  CHECK(std::strlen(failnet_library_version()) > 0);
}
