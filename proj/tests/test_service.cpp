#include <gtest/gtest.h>

#include <future>
#include <thread>

#include "scout/scout.hpp"
#include "support/expect.hpp"
#include "support/fixture.hpp"

using namespace scout;
namespace ts = testing_support;

namespace {

ServiceOptions fixture_options(const std::filesystem::path& data) {
  return ServiceOptions{data, ts::fixture_config(), {}};
}

Json body_of(const ApiResponse& r) { return Json::parse(r.body); }

std::string error_code(const ApiResponse& r) { return body_of(r).at("error").at("code"); }

Json post_json(ScoutService& s, const Json& body) {
  const auto r = s.handle("POST", "/v1/problems", body.dump());
  EXPECT_EQ(r.status, 202) << r.body;
  return body_of(r);
}

/// A service with one completed fixture run, shared by the read-only route tests.
class CompletedRun : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    tmp_ = new ts::TempDir();
    service_ = new ScoutService(fixture_options(tmp_->path()));
    run_id_ = post_json(*service_, Json{{"text", ts::problem_text()}}).at("run_id");
    service_->wait_all();
  }
  static void TearDownTestSuite() {
    delete service_;
    delete tmp_;
  }
  static ApiResponse get(const std::string& path) { return service_->handle("GET", path, ""); }

  static inline ts::TempDir* tmp_ = nullptr;
  static inline ScoutService* service_ = nullptr;
  static inline std::string run_id_;
};

}  // namespace

TEST(Api, RunIdFormat) {
  EXPECT_EQ(format_run_id(1), "run-000001");
  EXPECT_EQ(format_run_id(1234567), "run-1234567");
}

TEST(Api, ErrorPayloadShape) {
  const auto r = api_error(404, "run_not_found", "no run x", Json{{"k", 1}});
  EXPECT_EQ(r.status, 404);
  EXPECT_EQ(body_of(r), (Json{{"schema_version", "scout.v1"},
                              {"error", {{"code", "run_not_found"}, {"message", "no run x"}, {"detail", {{"k", 1}}}}}}));
  EXPECT_EQ(r.content_type, "application/json; charset=utf-8");
}

TEST(Api, BadRequests) {
  ts::TempDir tmp;
  ScoutService s(fixture_options(tmp.path()));
  auto r = s.handle("POST", "/v1/problems", "{oops");
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(error_code(r), "malformed_body");
  r = s.handle("POST", "/v1/problems", R"({"problem": "x"})");
  EXPECT_EQ(error_code(r), "malformed_body");
  r = s.handle("POST", "/v1/problems", R"({"text": "x", "seed": -3})");
  EXPECT_EQ(error_code(r), "malformed_body");
  r = s.handle("POST", "/v1/problems", R"({"text": "   "})");
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(error_code(r), "invalid_problem");

  r = s.handle("GET", "/v1/runs/run-000099", "");
  EXPECT_EQ(r.status, 404);
  EXPECT_EQ(error_code(r), "run_not_found");
  r = s.handle("GET", "/v1/runs/run-000099/output", "");
  EXPECT_EQ(error_code(r), "run_not_found");
  r = s.handle("GET", "/v1/nowhere", "");
  EXPECT_EQ(r.status, 404);
  EXPECT_EQ(error_code(r), "route_not_found");
  r = s.handle("DELETE", "/v1/runs/run-000001", "");
  EXPECT_EQ(error_code(r), "route_not_found");
  r = s.handle("GET", "/v1/entities/CR-nobody", "");
  EXPECT_EQ(r.status, 404);
  EXPECT_EQ(error_code(r), "entity_not_found");
}

TEST_F(CompletedRun, Lifecycle) {
  EXPECT_EQ(run_id_, "run-000001");
  const auto r = get("/v1/runs/" + run_id_);
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(body_of(r).at("phase"), "complete");
  EXPECT_TRUE(body_of(r).at("error").is_null());
}

TEST_F(CompletedRun, OutputMatchesArtifactBytes) {
  const auto r = get("/v1/runs/" + run_id_ + "/output");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body, RunDirectory::open(tmp_->path() / run_id_).read_bytes("structured_output"));
  EXPECT_EQ(body_of(r).at("run_metadata").at("seed"), 7);
}

TEST_F(CompletedRun, TaxonomyAndChart) {
  auto r = get("/v1/runs/" + run_id_ + "/taxonomy");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(body_of(r).at("taxonomy").at("count"), 33);
  EXPECT_EQ(body_of(r).at("run_id"), run_id_);
  r = get("/v1/runs/" + run_id_ + "/chart");
  ASSERT_EQ(r.status, 200);
  EXPECT_FALSE(body_of(r).at("rows").empty());
}

TEST_F(CompletedRun, SolutionCard) {
  const Json retained = RunDirectory::open(tmp_->path() / run_id_).read("fragments").at("retained");
  std::string linked_id;
  for (const auto& f : retained) {
    for (const auto& v : f.at("validation")) {
      if (v.at("record_id") == "CR-active-aerogel--aerosorb-blanket" && linked_id.empty()) linked_id = f.at("id");
    }
  }
  ASSERT_FALSE(linked_id.empty());
  const auto r = get("/v1/runs/" + run_id_ + "/solutions/" + linked_id);
  ASSERT_EQ(r.status, 200) << r.body;
  const Json card = body_of(r);
  EXPECT_EQ(card.at("fragment_id"), linked_id);
  EXPECT_EQ(card.at("commercial_validation").at("label"), "Commercial");
  EXPECT_TRUE(card.at("commercial_validation").at("validated"));
  bool found = false;
  for (const auto& p : card.at("major_players")) {
    found = found || p.at("record_id") == "CR-active-aerogel--aerosorb-blanket";
  }
  EXPECT_TRUE(found);
  const bool backed = card.at("patent_validation").at("patent_backed");
  EXPECT_EQ(card.at("patent_validation").at("label"), backed ? "Patent-Backed" : "No Patent");
  EXPECT_EQ(backed, !card.at("patent_validation").at("patents").empty());

  const auto missing = get("/v1/runs/" + run_id_ + "/solutions/F-nope");
  EXPECT_EQ(missing.status, 404);
  EXPECT_EQ(error_code(missing), "fragment_not_found");
}

TEST_F(CompletedRun, UnvalidatedCardIsNonCommercial) {
  const Json retained = RunDirectory::open(tmp_->path() / run_id_).read("fragments").at("retained");
  for (const auto& f : retained) {
    if (!f.at("validation").empty()) continue;
    const Json card = body_of(get("/v1/runs/" + run_id_ + "/solutions/" + f.at("id").get<std::string>()));
    EXPECT_EQ(card.at("commercial_validation").at("label"), "Non-Commercial");
    EXPECT_TRUE(card.at("major_players").empty());
    return;
  }
  GTEST_SKIP() << "every fragment is validated";
}

TEST_F(CompletedRun, EntityProfile) {
  const auto r = get("/v1/entities/CR-active-aerogel--aerosorb-blanket");
  ASSERT_EQ(r.status, 200) << r.body;
  const Json e = body_of(r);
  EXPECT_EQ(e.at("run_id"), run_id_);
  EXPECT_EQ(e.at("overview").at("name"), "Active Aerogel");
  EXPECT_FALSE(e.at("solution_relevance").at("linked_fragments").empty());
  EXPECT_FALSE(e.at("source_refs").empty());
}

TEST(Api, InProgressThenComplete) {
  ts::TempDir tmp;
  std::promise<void> gate;
  std::shared_future<void> open = gate.get_future().share();
  auto options = fixture_options(tmp.path());
  options.resources_factory = [open] {
    open.wait();
    return ts::fixture_resources();
  };
  ScoutService s(options);
  const std::string id = post_json(s, Json{{"text", ts::problem_text()}, {"seed", 11}}).at("run_id");

  // The factory runs during intake; wait until the run reaches it.
  for (int i = 0; i < 500 && s.state(id)->phase() != Phase::intake; ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
  auto r = s.handle("GET", "/v1/runs/" + id + "/output", "");
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(error_code(r), "run_in_progress");
  EXPECT_EQ(body_of(r).at("error").at("detail").at("phase"), "intake");
  r = s.handle("GET", "/v1/runs/" + id + "/solutions/F-1", "");
  EXPECT_EQ(error_code(r), "run_in_progress");

  gate.set_value();
  s.wait_all();
  r = s.handle("GET", "/v1/runs/" + id + "/output", "");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(body_of(r).at("run_metadata").at("seed"), 11);
}

TEST(Api, FailedRun) {
  ts::TempDir tmp;
  auto options = fixture_options(tmp.path());
  options.resources_factory = [] {
    auto res = ts::fixture_resources();
    res.connector = std::make_shared<FixtureConnector>(std::vector<PatentDocument>{});
    return res;
  };
  ScoutService s(options);
  const std::string id = post_json(s, Json{{"text", ts::problem_text()}}).at("run_id");
  s.wait_all();
  auto r = s.handle("GET", "/v1/runs/" + id, "");
  EXPECT_EQ(body_of(r).at("phase"), "failed");
  r = s.handle("GET", "/v1/runs/" + id + "/taxonomy", "");
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(error_code(r), "run_failed");
  EXPECT_EQ(body_of(r).at("error").at("detail").at("stage"), "curation");
}

TEST(Api, RestartReloadsRunsAndMarksInterrupted) {
  ts::TempDir tmp;
  {
    ScoutService s(fixture_options(tmp.path()));
    post_json(s, Json{{"text", ts::problem_text()}});
    s.wait_all();
  }
  // A run that was mid-flight when the previous process stopped.
  const auto dir = RunDirectory::create(tmp.path(), "run-000002");
  RunState half("run-000002");
  half.advance(Phase::intake);
  half.advance(Phase::patent);
  dir.write("run_state", half.to_json());

  ScoutService s(fixture_options(tmp.path()));
  EXPECT_EQ(s.state("run-000001")->phase(), Phase::complete);
  const auto interrupted = *s.state("run-000002");
  EXPECT_EQ(interrupted.phase(), Phase::failed);
  EXPECT_EQ(interrupted.error()->code, "Interrupted");
  EXPECT_EQ(interrupted.error()->stage, "patent");
  EXPECT_EQ(s.handle("GET", "/v1/runs/run-000001/chart", "").status, 200);
  EXPECT_EQ(post_json(s, Json{{"text", "second problem about oil booms"}}).at("run_id"), "run-000003");
  s.wait_all();
}

TEST(Api, ConcurrentSubmissionsOverHttp) {
  ts::TempDir tmp;
  ScoutService service(fixture_options(tmp.path()));
  httplib::Server server;
  service.bind(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread listener([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  auto submit = [&](std::uint64_t seed) {
    httplib::Client client("127.0.0.1", port);
    const auto res = client.Post("/v1/problems", Json{{"text", ts::problem_text()}, {"seed", seed}}.dump(),
                                 "application/json");
    EXPECT_TRUE(res);
    EXPECT_EQ(res->status, 202);
    return Json::parse(res->body).at("run_id").get<std::string>();
  };
  auto a = std::async(std::launch::async, submit, 7);
  auto b = std::async(std::launch::async, submit, 11);
  const std::string id_a = a.get(), id_b = b.get();
  EXPECT_NE(id_a, id_b);
  service.wait_all();

  httplib::Client client("127.0.0.1", port);
  for (const auto& [id, seed] : {std::pair{id_a, 7}, std::pair{id_b, 11}}) {
    const auto res = client.Get("/v1/runs/" + id + "/output");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(res->get_header_value("Content-Type"), "application/json; charset=utf-8");
    EXPECT_EQ(Json::parse(res->body).at("run_metadata").at("seed"), seed);
  }
  const auto missing = client.Get("/v1/runs/run-999999");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  server.stop();
  listener.join();
}
