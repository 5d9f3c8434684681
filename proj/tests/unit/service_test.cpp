#include "resonance/service.hpp"

#include <gtest/gtest.h>
#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <thread>

#include "fixtures.hpp"
#include "service_cases.hpp"

namespace resonance {
namespace {

using nlohmann::json;

const ContextService& Service() { return testing::SyntheticService(); }

class ServiceGoldenTest : public ::testing::TestWithParam<testing::ServiceCase> {};

TEST_P(ServiceGoldenTest, MatchesGolden) {
  const testing::ServiceCase& c = GetParam();
  const HttpResponse r = Service().Handle(c.path, c.params);
  EXPECT_EQ(r.status, c.status);
  EXPECT_TRUE(json::accept(r.body));
  const std::string diff = testing::CheckGolden("service/" + c.name + ".txt", testing::RenderResponse(r));
  EXPECT_TRUE(diff.empty()) << diff;
}

INSTANTIATE_TEST_SUITE_P(Endpoints, ServiceGoldenTest, ::testing::ValuesIn(testing::ServiceCases()),
                         [](const auto& info) { return info.param.name; });

TEST(ServiceTest, RelateNodesHonourContract) {
  const HttpResponse r = Service().Relate({{"input", "magnetic flux"}, {"show", "12"}});
  const json body = json::parse(r.body);
  ASSERT_EQ(body["nodes"].size(), 12u);
  EXPECT_TRUE(body["truncated"].get<bool>());
  EXPECT_TRUE(body["reason"].is_null());
  double last = 2.0;
  for (const auto& n : body["nodes"]) {
    for (const char* field : {"kind", "key", "display_label", "score", "count", "x", "y"}) {
      EXPECT_TRUE(n.contains(field)) << field;
    }
    EXPECT_LE(n["score"].get<double>(), last);
    last = n["score"].get<double>();
    EXPECT_GE(n["x"].get<double>(), 0.0);
    EXPECT_LE(n["y"].get<double>(), 1.0);
    EXPECT_FALSE(n["key"] == "magnetic flux" && n["kind"] == "term");
  }
}

TEST(ServiceTest, JournalNodesUseJournalTitle) {
  const HttpResponse r = Service().Relate({{"input", "cosmology"}, {"type", "journal"}});
  const json body = json::parse(r.body);
  ASSERT_FALSE(body["nodes"].empty());
  for (const auto& n : body["nodes"]) {
    EXPECT_EQ(n["display_label"].get<std::string>().rfind("Journal of ", 0), 0u);
  }
}

TEST(ServiceTest, NoIndexIsUnavailable) {
  const ContextService empty(nullptr);
  EXPECT_EQ(empty.Handle("/relate", {{"input", "x"}}).status, 503);
  EXPECT_EQ(empty.Handle("/solutions", {}).status, 503);
}

TEST(ServiceTest, ConcurrentQueriesAgree) {
  const HttpResponse expected = Service().Relate({{"input", "accretion"}, {"show", "20"}});
  std::vector<std::thread> threads;
  std::vector<std::string> bodies(8);
  for (std::size_t t = 0; t < bodies.size(); ++t) {
    threads.emplace_back([&, t] {
      bodies[t] = Service().Relate({{"input", "accretion"}, {"show", "20"}}).body;
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& b : bodies) EXPECT_EQ(b, expected.body);
}

TEST(HttpServerTest, ServesEndpointsOverSocket) {
  const std::filesystem::path ui = std::filesystem::temp_directory_path() / "resonance_ui_test";
  std::filesystem::create_directories(ui);
  std::ofstream(ui / "index.html") << "<html>ui</html>";

  ServerOptions options;
  options.port = 0;
  options.ui_dir = ui;
  HttpServer server(Service(), options);
  ASSERT_TRUE(server.Bind());
  std::thread listener([&server] { server.Listen(); });

  httplib::Client client("127.0.0.1", server.port());
  auto relate = client.Get("/relate?input=magnetic+flux&show=10");
  ASSERT_TRUE(relate);
  EXPECT_EQ(relate->status, 200);
  EXPECT_EQ(relate->body, Service().Relate({{"input", "magnetic flux"}, {"show", "10"}}).body);
  EXPECT_EQ(relate->get_header_value("Access-Control-Allow-Origin"), "*");

  auto bad = client.Get("/relate?input=&show=25");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);

  auto missing = client.Get("/entity?kind=author&key=austen+j");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  EXPECT_EQ(json::parse(missing->body)["error"], "unknown_entity");

  auto nowhere = client.Get("/nowhere");
  ASSERT_TRUE(nowhere);
  EXPECT_EQ(nowhere->status, 404);
  EXPECT_EQ(json::parse(nowhere->body)["error"], "not_found");

  auto page = client.Get("/ui/index.html");
  ASSERT_TRUE(page);
  EXPECT_EQ(page->status, 200);
  EXPECT_EQ(page->body, "<html>ui</html>");

  server.Stop();
  listener.join();
  std::filesystem::remove_all(ui);
}

}  // namespace
}  // namespace resonance
