#include "sarcgen/stub_server.hpp"

#include <httplib.h>

#include <thread>

#include <json.hpp>

#include "sarcgen/commonsense.hpp"
#include "sarcgen/errors.hpp"
#include "sarcgen/grammar.hpp"
#include "sarcgen/ranking.hpp"

namespace sarcgen {

namespace {

using nlohmann::json;

void reply_error(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(json{{"error", message}}.dump(), "application/json");
}

}  // namespace

struct StubBackendServer::Impl {
  Options options;
  httplib::Server server;
  std::thread thread;
  int port = -1;

  std::unique_ptr<FixtureCausesClient> causes;
  std::unique_ptr<FixtureNliClient> nli;
  std::unique_ptr<FixtureGecClient> gec;
};

StubBackendServer::StubBackendServer(Options options) : impl_(new Impl) {
  impl_->options = std::move(options);
  if (impl_->options.causes_fixture) {
    impl_->causes = std::make_unique<FixtureCausesClient>(*impl_->options.causes_fixture);
  }
  if (impl_->options.nli_fixture) {
    impl_->nli = std::make_unique<FixtureNliClient>(*impl_->options.nli_fixture);
  }
  if (impl_->options.gec_fixture) {
    impl_->gec = std::make_unique<FixtureGecClient>(*impl_->options.gec_fixture);
  }

  impl_->server.Post("/v1/causes", [this](const httplib::Request& req,
                                          httplib::Response& res) {
    if (!impl_->causes) {
      reply_error(res, 500, "no causes fixture configured");
      return;
    }
    json doc = json::parse(req.body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("terms") ||
        !doc["terms"].is_array()) {
      reply_error(res, 400, "expected {\"terms\": [...], \"k\": n}");
      return;
    }
    std::vector<std::string> terms;
    for (const auto& t : doc["terms"]) {
      if (!t.is_string()) {
        reply_error(res, 400, "terms must be strings");
        return;
      }
      terms.push_back(t.get<std::string>());
    }
    const int k = doc.contains("k") && doc["k"].is_number_integer()
                      ? doc["k"].get<int>()
                      : 5;
    json candidates = json::array();
    for (const auto& c : impl_->causes->causes(terms, k)) {
      candidates.push_back(json{{"phrase", c.phrase}, {"score", c.score}});
    }
    res.set_content(json{{"candidates", candidates}}.dump(), "application/json");
  });

  impl_->server.Post("/v1/nli", [this](const httplib::Request& req,
                                       httplib::Response& res) {
    if (!impl_->nli) {
      reply_error(res, 500, "no nli fixture configured");
      return;
    }
    json doc = json::parse(req.body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("premise") ||
        !doc.contains("hypothesis") || !doc["premise"].is_string() ||
        !doc["hypothesis"].is_string()) {
      reply_error(res, 400, "expected {\"premise\": str, \"hypothesis\": str}");
      return;
    }
    try {
      const auto scores = impl_->nli->score(doc["premise"].get<std::string>(),
                                            doc["hypothesis"].get<std::string>());
      res.set_content(json{{"entailment", scores.entailment},
                           {"neutral", scores.neutral},
                           {"contradiction", scores.contradiction}}
                          .dump(),
                      "application/json");
    } catch (const Error& e) {
      reply_error(res, 500, e.what());
    }
  });

  impl_->server.Post("/v1/gec", [this](const httplib::Request& req,
                                       httplib::Response& res) {
    if (!impl_->gec) {
      reply_error(res, 500, "no gec fixture configured");
      return;
    }
    json doc = json::parse(req.body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("sentence") ||
        !doc["sentence"].is_string()) {
      reply_error(res, 400, "expected {\"sentence\": str}");
      return;
    }
    res.set_content(
        json{{"corrected", impl_->gec->correct(doc["sentence"].get<std::string>())}}
            .dump(),
        "application/json");
  });
}

StubBackendServer::~StubBackendServer() { stop(); }

int StubBackendServer::start() {
  impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
  if (impl_->port <= 0) {
    throw ConfigError("stub server: failed to bind a local port");
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return impl_->port;
}

void StubBackendServer::stop() {
  if (impl_->thread.joinable()) {
    impl_->server.stop();
    impl_->thread.join();
  }
}

int StubBackendServer::port() const { return impl_->port; }

std::string StubBackendServer::base_url() const {
  return "http://127.0.0.1:" + std::to_string(impl_->port);
}

}  // namespace sarcgen
