#include <gtest/gtest.h>

#include "scout/scout.hpp"
#include "support/expect.hpp"
#include "support/fixture.hpp"

using namespace scout;
namespace ts = testing_support;

namespace {

const std::string kSite = "https://fixtures.example/";

FixtureWebClient fixture_web() { return FixtureWebClient::from_directory(ts::fixture_dir() / "web"); }

SemanticProblem fixture_keywords() {
  SemanticProblem sp;
  sp.keywords = {"reusable", "material", "absorb", "spilled", "oil", "sea"};
  return sp;
}

std::vector<std::string> company_names(const std::vector<MarketEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.company_name);
  return out;
}

class FailingWeb final : public WebClient {
 public:
  std::string name() const override { return "down"; }
  std::vector<WebPage> search(const std::vector<std::string>&, PageKind) const override {
    throw std::runtime_error("connection reset");
  }
};

struct CommercialRun {
  MarketFindings market;
  ProductFindings product;
  CompetitorFindings competitor;
  std::vector<CommercialRecord> kb;
};

CommercialRun run_fixture_agents() {
  const auto web = fixture_web();
  const auto sp = fixture_keywords();
  CommercialRun r;
  r.market = run_market_agent(sp, web);
  r.product = run_product_agent(sp, r.market, web);
  r.competitor = run_competitor_agent(sp, r.market, r.product);
  r.kb = build_commercial_kb(r.market, r.product, r.competitor, StubLlmProvider(), StubEmbeddingProvider(), 2025);
  return r;
}

const CommercialRecord& record(const std::vector<CommercialRecord>& kb, const std::string& id) {
  for (const auto& r : kb) {
    if (r.id == id) return r;
  }
  throw std::runtime_error("no record " + id);
}

}  // namespace

// ---------------------------------------------------------------------------
// Web fixtures and page parsing

TEST(WebClient, LoadsAndSortsFixturePages) {
  const auto web = fixture_web();
  ASSERT_EQ(web.pages().size(), 8u);
  EXPECT_EQ(web.pages().front().url, kSite + "companies/active-aerogel");
  for (std::size_t i = 1; i < web.pages().size(); ++i) EXPECT_LT(web.pages()[i - 1].url, web.pages()[i].url);
}

TEST(WebClient, SearchIsAnyTermCaseInsensitiveByKind) {
  const auto web = fixture_web();
  const auto hits = web.search({"PHOTOVOLTAIC", "nothing-here"}, PageKind::company);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].url, kSite + "companies/sunroof-tiles");
  EXPECT_TRUE(web.search({"photovoltaic"}, PageKind::datasheet).empty());
  EXPECT_TRUE(web.search({}, PageKind::company).empty());
}

TEST(WebClient, DirectoryErrors) {
  EXPECT_SCOUT_ERROR(FixtureWebClient::from_directory("/nonexistent/web"), ErrorCode::agent);
  ts::TempDir tmp;
  EXPECT_TRUE(FixtureWebClient::from_directory(tmp.path()).pages().empty());
  ts::write_file(tmp / "bad.json", "{\"url\": \"x\"}");
  EXPECT_SCOUT_ERROR(FixtureWebClient::from_directory(tmp.path()), ErrorCode::parse);
  ts::write_file(tmp / "bad.json", R"({"url": "x", "kind": "video", "body": ""})");
  EXPECT_SCOUT_ERROR(FixtureWebClient::from_directory(tmp.path()), ErrorCode::parse);
}

TEST(PageParsing, FieldLines) {
  const auto f = parse_field_line("  Water Contact  Angle :  155  degrees ");
  ASSERT_TRUE(f);
  EXPECT_EQ(f->key, "water contact angle");
  EXPECT_EQ(f->value, "155 degrees");
  EXPECT_EQ(parse_field_line("url: http://x.example/a")->value, "http://x.example/a");
  EXPECT_FALSE(parse_field_line("no separator here"));
  EXPECT_FALSE(parse_field_line(": value"));
  EXPECT_FALSE(parse_field_line("key:   "));
}

TEST(PageParsing, SearchResultBlocks) {
  std::vector<std::string> warnings;
  const WebPage page{"u", PageKind::search_result, "t",
                     "company: A\nsnippet: first\n\n\ncompany: B\n\nsnippet: orphan\n\ncompany: C\nbogus line"};
  const auto entries = parse_search_result(page, warnings);
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[0], (MarketEntry{"A", "first", "u"}));
  EXPECT_EQ(entries[1], (MarketEntry{"B", "", "u"}));
  EXPECT_EQ(entries[2].company_name, "C");
  ASSERT_EQ(warnings.size(), 2u);
  EXPECT_EQ(warnings[0], "u: search result entry without company");
  EXPECT_EQ(warnings[1], "u: unrecognized search result line 'bogus line'");
}

TEST(PageParsing, CompanyPage) {
  std::vector<std::string> warnings;
  const auto e = parse_company_page({"u", PageKind::company, "", "Intro text.\ncompany: X Corp\n  More   text. "}, warnings);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->company_name, "X Corp");
  EXPECT_EQ(e->snippet, "Intro text. More text.");
  EXPECT_FALSE(parse_company_page({"v", PageKind::company, "", "just prose"}, warnings));
  EXPECT_EQ(warnings, (std::vector<std::string>{"v: company page without company line"}));
}

TEST(PageParsing, DatasheetSkipsMalformedLines) {
  std::vector<std::string> warnings;
  const auto web = fixture_web();
  const auto pages = web.search({"HM-200"}, PageKind::datasheet);
  ASSERT_EQ(pages.size(), 1u);
  const auto e = parse_datasheet(pages[0], warnings);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->company_name, "Hydromesh Membranes");
  EXPECT_EQ(e->product_name, "HM-200 Separator Mesh");
  EXPECT_EQ(e->summary, "Superhydrophobic stainless steel mesh that separates oil from water by gravity.");
  EXPECT_EQ(e->specs, (SpecList{{"water contact angle", "155 degrees"}, {"flux", "2000 L/m2h"}}));
  EXPECT_EQ(warnings, (std::vector<std::string>{pages[0].url +
                                                ": skipped malformed datasheet line 'this line has no separator'"}));
  EXPECT_FALSE(parse_datasheet({"w", PageKind::datasheet, "", "company: X\nsize: 3"}, warnings));
}

// ---------------------------------------------------------------------------
// Agents

TEST(MarketAgent, CompanyPagesFirstThenSearchResults) {
  const auto market = run_market_agent(fixture_keywords(), fixture_web());
  EXPECT_EQ(company_names(market.entries),
            (std::vector<std::string>{"Active Aerogel", "Hydromesh Membranes", "BioSorb Labs", "Skimtec Marine",
                                      "Pipeguard Sensing"}));
  // The profile page wins over the shorter search snippet.
  EXPECT_EQ(market.entries[0].source_ref, kSite + "companies/active-aerogel");
  EXPECT_NE(market.entries[0].snippet.find("Founded in 2015 in Portugal."), std::string::npos);
  EXPECT_EQ(market.warnings, (std::vector<std::string>{kSite + "search/oil-sorbents: search result entry without company"}));
}

TEST(MarketAgent, NoKeywordsNoQueries) {
  EXPECT_TRUE(run_market_agent(SemanticProblem{}, FailingWeb()).entries.empty());
}

TEST(ProductAgent, DatasheetsPerCompany) {
  const auto web = fixture_web();
  const auto market = run_market_agent(fixture_keywords(), web);
  const auto product = run_product_agent(fixture_keywords(), market, web);
  ASSERT_EQ(product.entries.size(), 3u);
  EXPECT_EQ(product.entries[0].product_name, "AeroSorb Blanket");
  EXPECT_EQ(product.entries[1].product_name, "HM-200 Separator Mesh");
  EXPECT_EQ(product.entries[2].product_name, "Kapok Sorbent Boom");
  for (const auto& e : product.entries) EXPECT_EQ(e.caption, "");
  EXPECT_EQ(product.warnings.size(), 1u);
}

TEST(ProductAgent, KeywordHitsWithoutMarketCompany) {
  const auto web = fixture_web();
  SemanticProblem sp;
  sp.keywords = {"kapok"};
  const auto product = run_product_agent(sp, MarketFindings{}, web);
  ASSERT_EQ(product.entries.size(), 1u);
  EXPECT_EQ(product.entries[0].company_name, "BioSorb Labs");
}

TEST(CompetitorAgent, MergesByCaseFoldedName) {
  MarketFindings market;
  market.entries = {{"Acme  Corp", "snippet one", "m1"}, {"Zeta", "z", "m2"}};
  ProductFindings product;
  product.entries = {{"ACME CORP", "Widget", "", {}, "", "p1"}, {"acme corp", "Widget", "", {}, "", "p2"},
                     {"Beta", "Gadget", "", {}, "", "p3"}};
  const auto c = run_competitor_agent(SemanticProblem{}, market, product);
  ASSERT_EQ(c.entries.size(), 3u);
  EXPECT_EQ(c.entries[0].company_name, "Acme Corp");
  EXPECT_EQ(c.entries[0].related_products, (std::vector<std::string>{"Widget"}));
  EXPECT_EQ(c.entries[0].enrichment.at("sources"), (std::vector<std::string>{"m1", "p1", "p2"}));
  EXPECT_EQ(c.entries[0].enrichment.at("snippets"), (std::vector<std::string>{"snippet one"}));
  EXPECT_EQ(c.entries[1].company_name, "Beta");
  EXPECT_EQ(c.entries[2].company_name, "Zeta");
}

TEST(Agents, WebFailuresBecomeAgentErrors) {
  EXPECT_SCOUT_ERROR(run_market_agent(fixture_keywords(), FailingWeb()), ErrorCode::agent);
  MarketFindings market;
  market.entries = {{"Acme", "", "m"}};
  EXPECT_SCOUT_ERROR(run_product_agent(fixture_keywords(), market, FailingWeb()), ErrorCode::agent);
}

// ---------------------------------------------------------------------------
// Knowledge base

TEST(KnowledgeBase, RecordIds) {
  EXPECT_EQ(commercial_record_id("Active Aerogel", std::string("AeroSorb Blanket")), "CR-active-aerogel--aerosorb-blanket");
  EXPECT_EQ(commercial_record_id("Skimtec Marine", std::nullopt), "CR-skimtec-marine");
  EXPECT_EQ(commercial_record_id("HM & Co.", std::string("HM-200")), "CR-hm-co--hm-200");
}

TEST(KnowledgeBase, FixtureRecords) {
  const auto r = run_fixture_agents();
  std::vector<std::string> ids;
  for (const auto& rec : r.kb) ids.push_back(rec.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"CR-active-aerogel--aerosorb-blanket", "CR-biosorb-labs--kapok-sorbent-boom",
                                           "CR-hydromesh-membranes--hm-200-separator-mesh", "CR-pipeguard-sensing",
                                           "CR-skimtec-marine"}));

  const auto& aero = record(r.kb, "CR-active-aerogel--aerosorb-blanket");
  EXPECT_EQ(aero.company_name, "Active Aerogel");
  EXPECT_EQ(aero.product_name, std::optional<std::string>("AeroSorb Blanket"));
  EXPECT_EQ(aero.founding_year, std::optional<int>(2015));
  EXPECT_EQ(aero.country, std::optional<std::string>("Portugal"));
  EXPECT_EQ(aero.funding_status, std::optional<std::string>("Seed"));
  EXPECT_EQ(aero.launch_year, std::optional<int>(2018));
  EXPECT_EQ(aero.source_agent, AgentKind::product);
  EXPECT_EQ(aero.source_refs,
            (std::vector<std::string>{kSite + "companies/active-aerogel", kSite + "datasheets/aerosorb-blanket"}));
  EXPECT_EQ(aero.specs.front(), (std::pair<std::string, std::string>{"absorption capacity", "40 g/g"}));
  EXPECT_EQ(aero.embedding, stub_embed(aero.description));

  const auto& kapok = record(r.kb, "CR-biosorb-labs--kapok-sorbent-boom");
  EXPECT_EQ(kapok.company_name, "Biosorb Labs");
  EXPECT_EQ(kapok.founding_year, std::optional<int>(2017));
  EXPECT_EQ(kapok.country, std::optional<std::string>("France"));
  EXPECT_EQ(kapok.launch_year, std::optional<int>(2020));

  const auto& pipe = record(r.kb, "CR-pipeguard-sensing");
  EXPECT_FALSE(pipe.product_name);
  EXPECT_EQ(pipe.source_agent, AgentKind::market);
  EXPECT_EQ(pipe.funding_status, std::optional<std::string>("Series B"));
  EXPECT_EQ(pipe.country, std::optional<std::string>("Scotland"));

  const auto& mesh = record(r.kb, "CR-hydromesh-membranes--hm-200-separator-mesh");
  EXPECT_EQ(mesh.founding_year, std::optional<int>(2012));
  EXPECT_EQ(mesh.country, std::optional<std::string>("Norway"));
  EXPECT_FALSE(mesh.launch_year);

  const auto& skim = record(r.kb, "CR-skimtec-marine");
  EXPECT_EQ(skim.founding_year, std::optional<int>(2004));
  EXPECT_EQ(skim.country, std::optional<std::string>("Denmark"));
}

TEST(KnowledgeBase, OffTopicCompanyIsNotCollected) {
  const auto r = run_fixture_agents();
  for (const auto& rec : r.kb) EXPECT_EQ(rec.company_name.find("Sunroof"), std::string::npos);
}

TEST(KnowledgeBase, Deterministic) {
  EXPECT_EQ(run_fixture_agents().kb, run_fixture_agents().kb);
}

TEST(KnowledgeBase, CollapsesEquivalentPairs) {
  MarketFindings market;
  market.entries = {{"A B", "about a b", "m1"}, {"A-B", "about a-b", "m2"}};
  ProductFindings product;
  product.entries = {{"A B", "Widget", "", {}, "", "p1"}, {"a  b", "widget", "", {}, "", "p2"}};
  const auto competitor = run_competitor_agent(SemanticProblem{}, market, product);
  const auto kb = build_commercial_kb(market, product, competitor, StubLlmProvider(), StubEmbeddingProvider(), 2025);
  ASSERT_EQ(kb.size(), 2u);
  EXPECT_EQ(kb[0].id, "CR-a-b");
  EXPECT_EQ(kb[0].company_name, "A-b");
  EXPECT_EQ(kb[1].id, "CR-a-b--widget");
  EXPECT_EQ(kb[1].source_refs, (std::vector<std::string>{"m1", "p1", "p2"}));
}

TEST(KnowledgeBase, SlugCollisionsGetSuffixes) {
  MarketFindings market;
  market.entries = {{"A B", "x", "m1"}, {"A-B", "y", "m2"}};
  const auto kb = build_commercial_kb(market, {}, {}, StubLlmProvider(), StubEmbeddingProvider(), 2025);
  ASSERT_EQ(kb.size(), 2u);
  EXPECT_EQ(kb[0].id, "CR-a-b");
  EXPECT_EQ(kb[0].company_name, "A B");
  EXPECT_EQ(kb[1].id, "CR-a-b-2");
  EXPECT_EQ(kb[1].company_name, "A-b");
}

TEST(KnowledgeBase, EmptyFindingsGiveEmptyKb) {
  EXPECT_TRUE(build_commercial_kb({}, {}, {}, StubLlmProvider(), StubEmbeddingProvider(), 2025).empty());
}
