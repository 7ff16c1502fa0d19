#include "surfplot/service.hpp"

#include "surfplot/error.hpp"
#include "surfplot/grid_file.hpp"
#include "surfplot/output.hpp"

#include <httplib.h>

#include <sstream>

namespace surfplot {

namespace {

using nlohmann::json;

HttpReply error_reply(int status, std::string_view stage, std::string_view message) {
  return {status, json{{"error", {{"stage", stage}, {"message", message}}}}.dump()};
}

double number_field(const json& value, const char* what) {
  if (!value.is_number()) throw RequestError(std::string(what) + " must be a number");
  return value.get<double>();
}

std::size_t count_field(const json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw RequestError(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::pair<std::size_t, std::size_t> dimensions_field(const json& value, const char* what) {
  if (value.is_string()) {
    try {
      return parse_dimensions(value.get<std::string>());
    } catch (const Error& e) {
      throw RequestError(std::string(what) + ": " + e.what());
    }
  }
  if (value.is_array() && value.size() == 2) {
    return {count_field(value[0], what), count_field(value[1], what)};
  }
  throw RequestError(std::string(what) + " must be \"MxN\" or [M, N]");
}

void read_surface(const json& value, RenderJob& job) {
  if (value.is_string()) {
    job.surface.kind = value.get<std::string>();
    return;
  }
  if (!value.is_object()) throw RequestError("surface must be a name or an object");
  if (!value.contains("kind") || !value["kind"].is_string()) {
    throw RequestError("surface.kind must be a string");
  }
  job.surface.kind = value["kind"].get<std::string>();
  if (value.contains("params")) {
    if (!value["params"].is_object()) throw RequestError("surface.params must be an object");
    for (const auto& [name, v] : value["params"].items()) {
      job.surface.parameters[name] = number_field(v, "surface parameter");
    }
  }
  if (job.surface.kind == "grid") {
    if (!value.contains("text") || !value["text"].is_string()) {
      throw RequestError("grid surfaces need surface.text in the grid file format");
    }
    std::istringstream text(value["text"].get<std::string>());
    try {
      job.surface.grid = read_grid(text);
    } catch (const Error& e) {
      throw RequestError(std::string("surface.text: ") + e.what());
    }
    job.m = job.surface.grid->columns();
    job.n = job.surface.grid->rows();
  }
}

}  // namespace

RenderJob parse_render_request(const json& body) {
  if (!body.is_object()) throw RequestError("request body must be a JSON object");
  RenderJob job;
  if (!body.contains("surface")) throw RequestError("missing field: surface");
  if (!body.contains("view")) throw RequestError("missing field: view");
  read_surface(body["surface"], job);
  if (body.contains("grid") && job.surface.kind != "grid") {
    std::tie(job.m, job.n) = dimensions_field(body["grid"], "grid");
  }
  const json& view = body["view"];
  if (!view.is_array() || view.size() != 3) throw RequestError("view must be [v1, v2, v3]");
  job.view = Viewpoint(number_field(view[0], "view"), number_field(view[1], "view"),
                       number_field(view[2], "view"));
  if (body.contains("device")) {
    std::tie(job.config.kx, job.config.ky) = dimensions_field(body["device"], "device");
  }
  if (body.contains("ordering")) {
    if (!body["ordering"].is_string()) throw RequestError("ordering must be \"row\" or \"cantor\"");
    try {
      job.config.ordering = parse_ordering(body["ordering"].get<std::string>());
    } catch (const Error& e) {
      throw RequestError(e.what());
    }
  }
  if (body.contains("margin")) job.config.margin = number_field(body["margin"], "margin");
  try {
    validate_job(job);
  } catch (const Error& e) {
    throw RequestError(e.what());
  }
  return job;
}

HttpReply handle_render(std::string_view body) {
  RenderJob job;
  try {
    job = parse_render_request(json::parse(body));
  } catch (const json::exception& e) {
    return error_reply(400, "request", std::string("malformed JSON: ") + e.what());
  } catch (const RequestError& e) {
    return error_reply(400, "request", e.what());
  }
  if (job.m * job.n > kMaxRequestPoints) {
    return error_reply(422, "request", "grid exceeds the limit of 1000000 points");
  }
  try {
    const RenderResult result = run_job(job);
    return {200, render_response(result, job.config).dump()};
  } catch (const Error& e) {
    return error_reply(422, e.stage(), e.what());
  }
}

HttpReply handle_surfaces() {
  json surfaces = json::array();
  for (const auto& kind : builtin_catalog()) {
    json params = json::array();
    for (const auto& p : kind.parameters) {
      params.push_back({{"name", p.name}, {"default", p.default_value}, {"description", p.description}});
    }
    surfaces.push_back({{"name", kind.name}, {"description", kind.description}, {"parameters", params}});
  }
  return {200, json{{"surfaces", surfaces}}.dump()};
}

void install_routes(httplib::Server& server) {
  server.Post("/render", [](const httplib::Request& req, httplib::Response& res) {
    const HttpReply reply = handle_render(req.body);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
  server.Get("/surfaces", [](const httplib::Request&, httplib::Response& res) {
    const HttpReply reply = handle_surfaces();
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
  server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.status = 200;
    res.set_content("{\"status\":\"ok\"}", "application/json");
  });
}

}  // namespace surfplot
