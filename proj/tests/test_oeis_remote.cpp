// Exercises the live-lookup client against a local server; no traffic leaves
// the machine.

#include "fibform/oeis_remote.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstdlib>
#include <thread>

using namespace fibform;
using namespace fibform::oeis;
using namespace std::chrono_literals;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

const std::vector<Int> fib_prefix = ints({0, 1, 1, 2, 3, 5, 8, 13});

class LocalServer {
 public:
  LocalServer() {
    server_.Get("/search", [this](const httplib::Request& req, httplib::Response& res) {
      last_query_ = req.get_param_value("q");
      last_fmt_ = req.get_param_value("fmt");
      const std::string mode = mode_;
      if (mode == "slow") std::this_thread::sleep_for(1500ms);
      if (mode == "error") {
        res.status = 500;
        res.set_content("boom", "text/plain");
      } else if (mode == "garbage") {
        res.set_content("<html>not json</html>", "text/html");
      } else if (mode == "none") {
        res.set_content("null", "application/json");
      } else {
        res.set_content(R"([{"number": 45, "data": "0,1,1,2,3,5,8,13,21,34", "name": "Fibonacci"},
                            {"number": 1595, "data": "1,1,3,5,9,15,25"},
                            {"number": 999, "data": "7,0,1,1,2,3,5,8,13"}])",
                        "application/json");
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }

  RemoteOptions options(std::chrono::milliseconds timeout = 3000ms) const {
    return {true, "http://127.0.0.1:" + std::to_string(port_), timeout};
  }

  std::string mode_ = "ok";
  std::string last_query_;
  std::string last_fmt_;

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

// A port that was free a moment ago and has no listener: bind, read it back, close.
int unused_port() {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  ::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr));
  socklen_t len = sizeof(addr);
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  ::close(fd);
  return ntohs(addr.sin_port);
}

struct NetworkEnv {
  NetworkEnv() { ::setenv(network_env_var, "1", 1); }
  ~NetworkEnv() { ::unsetenv(network_env_var); }
};

}  // namespace

TEST_CASE("response parsing accepts the known layouts") {
  const auto arr = parse_search_response(R"([{"number": 45, "data": "0,1,1,2"}])");
  REQUIRE(arr.size() == 1);
  CHECK(arr[0].a_number == "A000045");
  CHECK(arr[0].terms == ints({0, 1, 1, 2}));
  const auto obj = parse_search_response(R"({"count": 1, "results": [{"number": 1595, "data": "1, 1, 3, 5"}]})");
  REQUIRE(obj.size() == 1);
  CHECK(obj[0].a_number == "A001595");
  CHECK(obj[0].terms == ints({1, 1, 3, 5}));
  CHECK(parse_search_response(R"({"count": 0, "results": null})").empty());
  CHECK(parse_search_response("null").empty());
  CHECK(parse_search_response("[]").empty());
}

TEST_CASE("response parsing rejects malformed bodies") {
  CHECK_THROWS_AS(parse_search_response("not json"), MalformedResponse);
  CHECK_THROWS_AS(parse_search_response(R"({"greeting": "hi"})"), MalformedResponse);
  CHECK_THROWS_AS(parse_search_response(R"({"results": 3})"), MalformedResponse);
  CHECK_THROWS_AS(parse_search_response(R"([{"number": "45", "data": "0,1"}])"), MalformedResponse);
  CHECK_THROWS_AS(parse_search_response(R"([{"number": 45}])"), MalformedResponse);
  CHECK_THROWS_AS(parse_search_response(R"([{"number": 45, "data": "0,x"}])"), MalformedResponse);
  CHECK_THROWS_AS(parse_search_response(R"([{"number": 1234567, "data": "0"}])"), MalformedResponse);
}

TEST_CASE("remote lookup is off unless both switches allow it") {
  ::unsetenv(network_env_var);
  LocalServer server;
  CHECK_THROWS_AS(search_remote(fib_prefix, server.options()), NetworkDisabled);
  RemoteOptions no_flag = server.options();
  no_flag.allow_network = false;
  {
    NetworkEnv env;
    CHECK_THROWS_AS(search_remote(fib_prefix, no_flag), NetworkDisabled);
  }
  ::setenv(network_env_var, "yes", 1);
  CHECK_THROWS_AS(search_remote(fib_prefix, server.options()), NetworkDisabled);
  ::unsetenv(network_env_var);
  CHECK(server.last_query_.empty());
}

TEST_CASE("remote lookup against a local server") {
  NetworkEnv env;
  LocalServer server;

  const auto hits = search_remote(fib_prefix, server.options());
  CHECK(server.last_query_ == "0,1,1,2,3,5,8,13");
  CHECK(server.last_fmt_ == "json");
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].entry.a_number == "A000045");
  CHECK(hits[0].match_start == 0);
  CHECK(hits[1].entry.a_number == "A000999");
  CHECK(hits[1].match_start == 1);

  CHECK_THROWS_AS(search_remote(ints({1, 2}), server.options()), UsageError);

  server.mode_ = "none";
  CHECK(search_remote(fib_prefix, server.options()).empty());

  server.mode_ = "garbage";
  CHECK_THROWS_AS(search_remote(fib_prefix, server.options()), MalformedResponse);

  server.mode_ = "error";
  CHECK_THROWS_AS(search_remote(fib_prefix, server.options()), TransportError);

  server.mode_ = "slow";
  const auto t0 = std::chrono::steady_clock::now();
  CHECK_THROWS_AS(search_remote(fib_prefix, server.options(300ms)), TimeoutError);
  CHECK(std::chrono::steady_clock::now() - t0 < 1400ms);
}

TEST_CASE("unreachable server is a transport error") {
  NetworkEnv env;
  const int port = unused_port();
  const RemoteOptions opts{true, "http://127.0.0.1:" + std::to_string(port), 2000ms};
  CHECK_THROWS_AS(search_remote(fib_prefix, opts), TransportError);
}
