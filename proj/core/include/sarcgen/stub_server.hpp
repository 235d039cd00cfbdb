#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace sarcgen {

// In-process HTTP stub serving /v1/causes, /v1/nli and /v1/gec from the
// offline fixture files, for wire-protocol tests and demos without network
// access. Endpoints without a fixture answer 500.
class StubBackendServer {
public:
  struct Options {
    std::optional<std::filesystem::path> causes_fixture;
    std::optional<std::filesystem::path> nli_fixture;
    std::optional<std::filesystem::path> gec_fixture;
  };

  explicit StubBackendServer(Options options);
  ~StubBackendServer();

  StubBackendServer(const StubBackendServer&) = delete;
  StubBackendServer& operator=(const StubBackendServer&) = delete;

  // Binds 127.0.0.1 on an ephemeral port and serves on a background
  // thread; returns the port.
  int start();
  void stop();

  int port() const;
  std::string base_url() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sarcgen
