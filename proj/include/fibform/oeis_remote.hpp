#pragma once

// Live OEIS lookup. Strictly opt-in: the caller must pass allow_network and
// the environment must set FIBFORM_ALLOW_NETWORK=1. Every failure is an
// exception; an empty result always means the server found nothing.
//
// Define CPPHTTPLIB_OPENSSL_SUPPORT (and link OpenSSL) to reach https URLs.

#include "fibform/oeis.hpp"

#include <httplib.h>
#include <json.hpp>

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibform::oeis {

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NetworkDisabled : public NetworkError {
 public:
  using NetworkError::NetworkError;
};
class TimeoutError : public NetworkError {
 public:
  using NetworkError::NetworkError;
};
class TransportError : public NetworkError {
 public:
  using NetworkError::NetworkError;
};
class MalformedResponse : public NetworkError {
 public:
  using NetworkError::NetworkError;
};

inline constexpr const char* network_env_var = "FIBFORM_ALLOW_NETWORK";

struct RemoteOptions {
  bool allow_network = false;
  std::string base_url = "https://oeis.org";
  std::chrono::milliseconds timeout{10000};
};

inline bool network_permitted_by_env() {
  const char* v = std::getenv(network_env_var);
  return v != nullptr && std::string_view(v) == "1";
}

inline std::string join_terms(const std::vector<Int>& terms) {
  std::string q;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) q += ",";
    q += terms[i].str();
  }
  return q;
}

// Accepts both the bare array layout and the older {"results": [...]} object.
// Only "number" and "data" are read.
inline std::vector<OeisEntry> parse_search_response(const std::string& body) {
  const nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded()) throw MalformedResponse("response is not JSON");
  const nlohmann::json* results = &doc;
  if (doc.is_object()) {
    if (!doc.contains("results")) throw MalformedResponse("JSON object without \"results\"");
    results = &doc["results"];
  }
  std::vector<OeisEntry> out;
  if (results->is_null()) return out;
  if (!results->is_array()) throw MalformedResponse("\"results\" is not an array");
  for (const nlohmann::json& r : *results) {
    if (!r.is_object() || !r.contains("number") || !r["number"].is_number_integer() || !r.contains("data") ||
        !r["data"].is_string())
      throw MalformedResponse("result lacks integer \"number\" or string \"data\"");
    const auto number = r["number"].get<long long>();
    if (number < 0 || number > 999999) throw MalformedResponse("A-number out of range");
    std::string a = std::to_string(number);
    OeisEntry e{"A" + std::string(6 - a.size(), '0') + a, 0, {}};
    const std::string data = r["data"].get<std::string>();
    std::size_t start = 0;
    while (start <= data.size()) {
      const std::size_t comma = std::min(data.find(',', start), data.size());
      std::string_view tok = std::string_view(data).substr(start, comma - start);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
      const auto v = detail::parse_int(tok);
      if (!v) throw MalformedResponse(e.a_number + ": non-integer term in \"data\"");
      e.terms.push_back(*v);
      start = comma + 1;
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<OeisHit> search_remote(const std::vector<Int>& prefix, const RemoteOptions& opts) {
  check_prefix(prefix);
  if (!opts.allow_network || !network_permitted_by_env())
    throw NetworkDisabled(std::string("remote lookup needs the explicit flag and ") + network_env_var + "=1");
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (opts.base_url.rfind("https://", 0) == 0) throw TransportError("built without TLS support");
#endif
  httplib::Client client(opts.base_url);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(opts.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(opts.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  const std::string path = "/search?q=" + join_terms(prefix) + "&fmt=json";
  const auto started = std::chrono::steady_clock::now();
  const httplib::Result res = client.Get(path);
  if (!res) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    const httplib::Error err = res.error();
    if (err == httplib::Error::ConnectionTimeout || (err == httplib::Error::Read && elapsed >= opts.timeout))
      throw TimeoutError("OEIS request timed out after " + std::to_string(opts.timeout.count()) + " ms");
    throw TransportError("OEIS request failed: " + httplib::to_string(err));
  }
  if (res->status != 200) throw TransportError("OEIS answered HTTP " + std::to_string(res->status));

  std::vector<OeisHit> hits;
  for (OeisEntry& e : parse_search_response(res->body))
    if (const auto at = find_run(e.terms, prefix)) hits.push_back({std::move(e), *at});
  return hits;
}

}  // namespace fibform::oeis
