#include "surfplot/service.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"surfplot-serve: HTTP front end for the surfplot renderer"};
  std::string bind = "127.0.0.1";
  int port = 7878;
  app.add_option("--bind", bind, "Address to listen on")->capture_default_str();
  app.add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535))->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  httplib::Server server;
  surfplot::install_routes(server);
  std::cerr << "surfplot-serve listening on " << bind << ':' << port << '\n';
  if (!server.listen(bind, port)) {
    std::cerr << "surfplot-serve: cannot listen on " << bind << ':' << port << '\n';
    return 1;
  }
  return 0;
}
