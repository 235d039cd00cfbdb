#pragma once

#include <string>

namespace sarcgen {

struct HttpResult {
  int status = 0;
  std::string body;
};

// POSTs a JSON body to base_url + path (e.g. "http://127.0.0.1:8080" +
// "/v1/nli"). Throws BackendUnavailable on connection/transport failure;
// non-200 statuses are returned, not thrown.
HttpResult http_post_json(const std::string& base_url, const std::string& path,
                          const std::string& json_body);

}  // namespace sarcgen
