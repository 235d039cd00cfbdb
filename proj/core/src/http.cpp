#include "sarcgen/http.hpp"

#include <httplib.h>

#include "sarcgen/errors.hpp"

namespace sarcgen {

HttpResult http_post_json(const std::string& base_url, const std::string& path,
                          const std::string& json_body) {
  httplib::Client client(base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Post(path, json_body, "application/json");
  if (!res) {
    throw BackendUnavailable("POST " + base_url + path + " failed: " +
                             httplib::to_string(res.error()));
  }
  return HttpResult{res->status, res->body};
}

}  // namespace sarcgen
