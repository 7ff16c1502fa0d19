#pragma once

#include "surfplot/catalog.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace surfplot {

/// Largest M * N a single request may ask for.
inline constexpr std::size_t kMaxRequestPoints = 1'000'000;

struct HttpReply {
  int status = 200;
  std::string body;
};

/// Thrown for request bodies that do not describe a render (HTTP 400).
class RequestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes a POST /render body. Throws RequestError.
RenderJob parse_render_request(const nlohmann::json& body);

/// POST /render: 200 with the render response, 400 for malformed or invalid
/// requests, 422 when the render itself fails or the point cap is exceeded.
HttpReply handle_render(std::string_view body);

/// GET /surfaces: builtin names with their parameter schemas.
HttpReply handle_surfaces();

/// Registers /render, /surfaces and /healthz on `server`.
void install_routes(httplib::Server& server);

}  // namespace surfplot
