#include <doctest.h>

#include <random>

#include "error.hpp"
#include "failure_network.hpp"

#include "generators.hpp"
#include "oracles.hpp"

using namespace failnet;

namespace {

Element make(const std::string &id, ElementKind kind, const std::string &name) {
  Element element;
  element.id = id;
  element.kind = kind;
  element.name = name;
  return element;
}

// env1 -Causes-> eff1 -ResultsIn-> f1, everything in scope.
KnowledgeBase minimal_triple() {
  KnowledgeBase kb;
  kb.add_element(make("env1", ElementKind::EnvironmentalFactor, "heat"), "t");
  kb.add_element(make("eff1", ElementKind::Effect, "expansion"), "t");
  kb.add_element(make("f1", ElementKind::Function, "sealing"), "t");
  kb.add_link({"env1", "eff1", LinkKind::Causes}, "t");
  kb.add_link({"eff1", "f1", LinkKind::ResultsIn}, "t");
  return kb;
}

Scenario whole_kb_scenario(const KnowledgeBase &kb, int criticality = 5) {
  Scenario scenario;
  scenario.id = "s1";
  scenario.name = "all";
  scenario.criticality = criticality;
  for (const auto &[id, element] : kb.elements()) {
    if (element.kind == ElementKind::Function)
      scenario.functions.push_back(id);
    scenario.elements.insert(id);
  }
  for (const Link &link : kb.links())
    if (link.kind == LinkKind::Precedes)
      scenario.event_order.emplace_back(link.from, link.to);
  std::sort(scenario.event_order.begin(), scenario.event_order.end());
  return scenario;
}

} // namespace

TEST_CASE("no effects means no chains") {
  KnowledgeBase kb;
  kb.add_element(make("f1", ElementKind::Function, "work"), "t");
  kb.add_element(make("c1", ElementKind::Component, "part"), "t");
  kb.add_link({"c1", "f1", LinkKind::Realizes}, "t");
  Scenario scenario = whole_kb_scenario(kb);
  CHECK(derive_failure_chains(kb, scenario, 3).empty());
}

TEST_CASE("minimal triple yields exactly one chain") {
  KnowledgeBase kb = minimal_triple();
  Scenario scenario = whole_kb_scenario(kb);
  std::vector<FailureChain> chains = derive_failure_chains(kb, scenario, 3);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].cause == "env1");
  CHECK(chains[0].effects == std::vector<std::string>{"eff1"});
  CHECK(chains[0].impact == "f1");
  CHECK(chains[0].failure_type == FailureType::DegradedFunction);
  CHECK(chains[0].consequence.cls == ConsequenceClass::TechnicalProduct);
}

TEST_CASE("effect cascades honor max_effect_hops") {
  KnowledgeBase kb;
  kb.add_element(make("c1", ElementKind::Component, "pump"), "t");
  kb.add_element(make("a", ElementKind::Effect, "leak"), "t");
  kb.add_element(make("b", ElementKind::Effect, "pressure drop"), "t");
  kb.add_element(make("c", ElementKind::Effect, "overheat"), "t");
  kb.add_element(make("f1", ElementKind::Function, "cooling"), "t");
  kb.add_link({"c1", "a", LinkKind::Causes}, "t");
  kb.add_link({"a", "b", LinkKind::Triggers}, "t");
  kb.add_link({"b", "c", LinkKind::Triggers}, "t");
  kb.add_link({"c", "f1", LinkKind::ResultsIn}, "t");
  Scenario scenario = whole_kb_scenario(kb);

  CHECK(derive_failure_chains(kb, scenario, 1).empty());
  CHECK(derive_failure_chains(kb, scenario, 2).empty());
  std::vector<FailureChain> chains = derive_failure_chains(kb, scenario, 3);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].effects == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(derive_failure_chains(kb, scenario, 0), Error);
}

TEST_CASE("chains outside scenario scope are not derived") {
  KnowledgeBase kb = minimal_triple();
  Scenario scenario = whole_kb_scenario(kb);
  scenario.elements.erase("eff1"); // effect out of scope
  CHECK(derive_failure_chains(kb, scenario, 3).empty());
}

TEST_CASE("chain enumeration equals the depth-first brute-force oracle") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    KnowledgeBase kb = gen::random_kb(rng, 20, 40);
    Scenario scenario = gen::scope_scenario(kb, rng, trial % 2 == 1);
    for (int hops : {1, 3}) {
      std::vector<FailureChain> chains = derive_failure_chains(kb, scenario, hops);
      std::vector<oracle::ChainTuple> expected =
          oracle::enumerate_chains(kb, scenario, hops);
      REQUIRE(chains.size() == expected.size());
      for (std::size_t i = 0; i < chains.size(); ++i) {
        CHECK(chains[i].cause == expected[i].cause);
        CHECK(chains[i].effects == expected[i].effects);
        CHECK(chains[i].impact == expected[i].impact);
      }
      // every chain satisfies the structural invariants
      for (const FailureChain &chain : chains) {
        CHECK(scenario.elements.count(chain.cause));
        CHECK(scenario.elements.count(chain.impact));
        for (const auto &effect : chain.effects)
          CHECK(scenario.elements.count(effect));
        Link head{chain.cause, chain.effects.front(), LinkKind::Causes};
        CHECK(std::find(kb.links().begin(), kb.links().end(), head) !=
              kb.links().end());
        Link tail{chain.effects.back(), chain.impact, LinkKind::ResultsIn};
        CHECK(std::find(kb.links().begin(), kb.links().end(), tail) !=
              kb.links().end());
      }
    }
  }
}

TEST_CASE("chain set is stable under element insertion order") {
  KnowledgeBase forward = minimal_triple();
  KnowledgeBase reversed;
  reversed.add_element(make("f1", ElementKind::Function, "sealing"), "t");
  reversed.add_element(make("eff1", ElementKind::Effect, "expansion"), "t");
  reversed.add_element(make("env1", ElementKind::EnvironmentalFactor, "heat"), "t");
  reversed.add_link({"eff1", "f1", LinkKind::ResultsIn}, "t");
  reversed.add_link({"env1", "eff1", LinkKind::Causes}, "t");
  Scenario scenario = whole_kb_scenario(forward);
  CHECK(derive_failure_chains(forward, scenario, 3) ==
        derive_failure_chains(reversed, scenario, 3));
}

TEST_CASE("additions outside a scenario scope never change its chains") {
  KnowledgeBase kb = minimal_triple();
  Scenario scenario = whole_kb_scenario(kb);
  std::vector<FailureChain> before = derive_failure_chains(kb, scenario, 3);
  kb.add_element(make("env2", ElementKind::EnvironmentalFactor, "dust"), "t");
  kb.add_element(make("eff2", ElementKind::Effect, "abrasion"), "t");
  kb.add_link({"env2", "eff2", LinkKind::Causes}, "t");
  kb.add_link({"eff2", "f1", LinkKind::ResultsIn}, "t"); // impact in scope, effect not
  CHECK(derive_failure_chains(kb, scenario, 3) == before);
}

TEST_CASE("failure type rule table") {
  KnowledgeBase kb;
  kb.add_element(make("ev", ElementKind::Event, "spike"), "t");
  Element flaky = make("ev2", ElementKind::Event, "brownout");
  flaky.attributes["intermittent"] = "true";
  kb.add_element(flaky, "t");

  CHECK(assign_failure_type(kb, ElementKind::Component, "", ElementKind::Function) ==
        FailureType::LossOfFunction);
  CHECK(assign_failure_type(kb, ElementKind::EnvironmentalFactor, "",
                            ElementKind::Function) ==
        FailureType::DegradedFunction);
  CHECK(assign_failure_type(kb, ElementKind::Process, "", ElementKind::Event) ==
        FailureType::UnintendedFunction);
  CHECK(assign_failure_type(kb, ElementKind::Event, "ev", ElementKind::Component) ==
        FailureType::LossOfFunction);
  CHECK(assign_failure_type(kb, ElementKind::Event, "ev2", ElementKind::Component) ==
        FailureType::IntermittentFunction);
  // component cause on a function impact outranks intermittency
  CHECK(assign_failure_type(kb, ElementKind::Component, "ev2",
                            ElementKind::Function) ==
        FailureType::LossOfFunction);
}

TEST_CASE("consequence classification walks causal links") {
  KnowledgeBase kb = minimal_triple();
  kb.add_element(make("col", ElementKind::Effect, "collision"), "t");
  kb.add_element(make("drv", ElementKind::Actor, "driver"), "t");
  kb.add_element(make("own", ElementKind::Stakeholder, "fleet owner"), "t");
  kb.add_link({"f1", "col", LinkKind::Causes}, "t");

  SUBCASE("no actor or stakeholder reachable: technical product") {
    CHECK(classify_consequence(kb, "f1").cls == ConsequenceClass::TechnicalProduct);
  }

  SUBCASE("actor within two hops: human") {
    kb.add_link({"col", "drv", LinkKind::ResultsIn}, "t");
    ConsequenceRef consequence = classify_consequence(kb, "f1");
    CHECK(consequence.cls == ConsequenceClass::Human);
    CHECK(consequence.element == "drv");
  }

  SUBCASE("actor beats stakeholder") {
    kb.add_link({"col", "drv", LinkKind::ResultsIn}, "t");
    kb.add_link({"col", "own", LinkKind::ResultsIn}, "t");
    CHECK(classify_consequence(kb, "f1").cls == ConsequenceClass::Human);
  }

  SUBCASE("stakeholder only: stakeholder") {
    kb.add_link({"col", "own", LinkKind::ResultsIn}, "t");
    ConsequenceRef consequence = classify_consequence(kb, "f1");
    CHECK(consequence.cls == ConsequenceClass::Stakeholder);
    CHECK(consequence.element == "own");
  }

  SUBCASE("three hops away is out of reach") {
    kb.add_element(make("col2", ElementKind::Effect, "fire"), "t");
    kb.add_link({"col", "col2", LinkKind::Triggers}, "t");
    kb.add_link({"col2", "drv", LinkKind::ResultsIn}, "t");
    CHECK(classify_consequence(kb, "f1").cls == ConsequenceClass::TechnicalProduct);
  }
}

TEST_CASE("compute_risk") {
  KnowledgeBase kb = minimal_triple();
  Scenario scenario = whole_kb_scenario(kb, 5);
  std::vector<FailureChain> chains = derive_failure_chains(kb, scenario, 3);
  REQUIRE(chains.size() == 1);
  RiskConfig config;

  SUBCASE("human base, criticality occurrence, default detection: rpn 225") {
    chains[0].consequence.cls = ConsequenceClass::Human;
    RiskScore risk = compute_risk(kb, scenario, chains[0], config);
    CHECK(risk.severity == 9);
    CHECK(risk.occurrence == 5);
    CHECK(risk.detection == 5);
    CHECK(risk.rpn == 225);
  }

  SUBCASE("attributes drive the factors to the minimum") {
    KnowledgeBase attributed;
    Element env = make("env1", ElementKind::EnvironmentalFactor, "heat");
    env.attributes["occurrence"] = "1";
    Element eff = make("eff1", ElementKind::Effect, "expansion");
    eff.attributes["detection"] = "1";
    Element fun = make("f1", ElementKind::Function, "sealing");
    fun.attributes["severity"] = "1";
    attributed.add_element(env, "t");
    attributed.add_element(eff, "t");
    attributed.add_element(fun, "t");
    attributed.add_link({"env1", "eff1", LinkKind::Causes}, "t");
    attributed.add_link({"eff1", "f1", LinkKind::ResultsIn}, "t");
    Scenario s2 = whole_kb_scenario(attributed, 5);
    std::vector<FailureChain> chain2 = derive_failure_chains(attributed, s2, 3);
    REQUIRE(chain2.size() == 1);
    RiskScore risk = compute_risk(attributed, s2, chain2[0], config);
    CHECK(risk.rpn == 1);
  }

  SUBCASE("attributes drive the factors to the maximum") {
    KnowledgeBase attributed;
    Element env = make("env1", ElementKind::EnvironmentalFactor, "heat");
    env.attributes["occurrence"] = "10";
    Element eff = make("eff1", ElementKind::Effect, "expansion");
    eff.attributes["detection"] = "10";
    Element fun = make("f1", ElementKind::Function, "sealing");
    fun.attributes["severity"] = "10";
    attributed.add_element(env, "t");
    attributed.add_element(eff, "t");
    attributed.add_element(fun, "t");
    attributed.add_link({"env1", "eff1", LinkKind::Causes}, "t");
    attributed.add_link({"eff1", "f1", LinkKind::ResultsIn}, "t");
    Scenario s2 = whole_kb_scenario(attributed, 5);
    std::vector<FailureChain> chain2 = derive_failure_chains(attributed, s2, 3);
    REQUIRE(chain2.size() == 1);
    CHECK(compute_risk(attributed, s2, chain2[0], config).rpn == 1000);
  }

  SUBCASE("factors stay in range on random inputs") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
      KnowledgeBase random_kb = gen::random_kb(rng, 15, 35);
      Scenario s2 = gen::scope_scenario(random_kb, rng, false);
      for (const FailureChain &chain : derive_failure_chains(random_kb, s2, 3)) {
        RiskScore risk = compute_risk(random_kb, s2, chain, config);
        CHECK(risk.severity >= 1);
        CHECK(risk.severity <= 10);
        CHECK(risk.occurrence >= 1);
        CHECK(risk.occurrence <= 10);
        CHECK(risk.detection >= 1);
        CHECK(risk.detection <= 10);
        CHECK(risk.rpn == risk.severity * risk.occurrence * risk.detection);
      }
    }
  }
}

TEST_CASE("formalize maps chains onto the category schema") {
  KnowledgeBase kb;
  kb.add_element(make("sky", ElementKind::EnvironmentalFactor,
                      "bright sky background"), "t");
  kb.add_element(make("con", ElementKind::Effect, "contrast loss"), "t");
  kb.add_element(make("det", ElementKind::Function, "object detection"), "t");
  kb.add_element(make("col", ElementKind::Effect, "collision"), "t");
  kb.add_element(make("drv", ElementKind::Actor, "driver"), "t");
  kb.add_link({"sky", "con", LinkKind::Causes}, "t");
  kb.add_link({"con", "det", LinkKind::ResultsIn}, "t");
  kb.add_link({"det", "col", LinkKind::Causes}, "t");
  kb.add_link({"col", "drv", LinkKind::ResultsIn}, "t");
  Scenario scenario = whole_kb_scenario(kb);

  std::vector<FailureChain> chains = derive_failure_chains(kb, scenario, 3);
  REQUIRE(chains.size() == 1); // collision's only target is an actor
  const FailureChain &chain = chains[0];
  CHECK(chain.consequence.cls == ConsequenceClass::Human);

  FailureRecord record =
      formalize(kb, chain, compute_risk(kb, scenario, chain, RiskConfig{}));
  CHECK(record.cause.kind == CategoryKind::Environment);
  CHECK(record.cause.element == "sky");
  CHECK(record.impact.kind == CategoryKind::Function);
  CHECK(record.impact.element == "det");
  CHECK(record.consequence.cls == ConsequenceClass::Human);
  CHECK(record.failure_type == FailureType::DegradedFunction);
  CHECK(record.risk.rpn == 225);
  CHECK(record.provenance == Provenance::Potential);
  CHECK(record.general_description ==
        "bright sky background causes contrast loss leading to object detection "
        "affecting human");
}

TEST_CASE("formalize component cause") {
  KnowledgeBase kb;
  kb.add_element(make("c1", ElementKind::Component, "bearing"), "t");
  kb.add_element(make("e1", ElementKind::Effect, "vibration"), "t");
  kb.add_element(make("f1", ElementKind::Function, "rotation"), "t");
  kb.add_link({"c1", "e1", LinkKind::Causes}, "t");
  kb.add_link({"e1", "f1", LinkKind::ResultsIn}, "t");
  Scenario scenario = whole_kb_scenario(kb);
  std::vector<FailureChain> chains = derive_failure_chains(kb, scenario, 3);
  REQUIRE(chains.size() == 1);
  FailureRecord record =
      formalize(kb, chains[0], compute_risk(kb, scenario, chains[0], RiskConfig{}));
  CHECK(record.cause.kind == CategoryKind::Component);
  CHECK(record.failure_type == FailureType::LossOfFunction);
}

TEST_CASE("analyze_scenario assigns stable ids in chain order") {
  KnowledgeBase kb = minimal_triple();
  kb.add_element(make("c9", ElementKind::Component, "gasket"), "t");
  kb.add_link({"c9", "eff1", LinkKind::Causes}, "t");
  Scenario scenario = whole_kb_scenario(kb);
  std::vector<FailureRecord> records =
      analyze_scenario(kb, scenario, 3, RiskConfig{});
  REQUIRE(records.size() == 2);
  CHECK(records[0].id == "pot-s1-0001");
  CHECK(records[1].id == "pot-s1-0002");
  CHECK(records[0].cause.element == "c9");   // chain order: cause id ascending
  CHECK(records[1].cause.element == "env1");
  CHECK(records[0].source == "s1");
}
