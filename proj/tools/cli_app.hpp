#pragma once

// The fibform command-line front end, callable in-process for tests.
//
// Exit codes: 0 ok, 1 internal error, 2 parse/usage error, 3 NON-INTEGER
// verdict from `check`, 4 network failure.

#include "fibform/fibform.hpp"
#include "fibform/oeis_remote.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef FIBFORM_FIXTURE_DIR
#define FIBFORM_FIXTURE_DIR "data/oeis"
#endif

namespace fibform::cli {

using nlohmann::json;

enum ExitCode : int { ok = 0, internal_error = 1, usage_error = 2, non_integer = 3, network_failure = 4 };

inline std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string tok = text.substr(start, comma - start);
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    const auto v = oeis::detail::parse_int(tok);
    if (!v) throw UsageError("not an integer list: '" + text + "'");
    out.push_back(*v);
    start = comma + 1;
  }
  return out;
}

inline json rational_list(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const Rational& r : v) arr.push_back(to_string(r));
  return arr;
}

inline json int_list(const std::vector<Int>& v) {
  json arr = json::array();
  for (const Int& i : v) arr.push_back(i.str());
  return arr;
}

inline std::string join(const json& arr) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? ", " : "") + arr[i].get<std::string>();
  return s;
}

inline std::string recurrence_text(const Recurrence& r) {
  if (r.order == 0) return "w(n) = 0";
  std::string s = "w(n) =";
  bool first = true;
  for (std::size_t i = 0; i < r.order; ++i) {
    const Int& c = r.coeffs[i];
    if (c == 0) continue;
    const std::string term = (abs(c) == 1 ? "" : Int(abs(c)).str() + "*") + "w(n-" + std::to_string(i + 1) + ")";
    if (first)
      s += (c < 0 ? " -" : " ") + term;
    else
      s += (c < 0 ? " - " : " + ") + term;
    first = false;
  }
  return s;
}

struct Emitter {
  bool as_json;
  std::ostream& out;
  void emit(const json& doc, const std::string& text) const {
    if (as_json)
      out << doc.dump(2) << "\n";
    else
      out << text;
  }
};

inline json canon_json(const CanonForm& c) {
  return {{"p0", poly_to_string(c.p0, "n")},
          {"p1", poly_to_string(c.p1, "n")},
          {"e", to_string(c.const_e)},
          {"f", to_string(c.alt_f)}};
}

inline json recurrence_json(const Recurrence& r) {
  return {{"order", r.order},
          {"char_poly", poly_to_string(r.char_poly)},
          {"coeffs", int_list(r.coeffs)},
          {"initial", rational_list(r.initial)}};
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fibform: rational-polynomial combinations of Fibonacci numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string expr_text;
  std::int64_t from = 0;
  std::int64_t to = 10;

  auto* eval = app.add_subcommand("eval", "Print n and w_n over a range");
  eval->add_option("expr", expr_text, "Expression")->required();
  eval->add_option("--from", from, "First index");
  eval->add_option("--to", to, "Last index");

  auto* canon = app.add_subcommand("canon", "Canonical form P0(n)F(n) + P1(n)F(n-1) + e + f(-1)^n");
  canon->add_option("expr", expr_text, "Expression")->required();

  auto* rec = app.add_subcommand("rec", "Characteristic polynomial and recurrence");
  rec->add_option("expr", expr_text, "Expression")->required();

  auto* check = app.add_subcommand("check", "Decide whether w_n is an integer for every n in Z");
  check->add_option("expr", expr_text, "Expression")->required();

  std::optional<int> p0_deg, p1_deg;
  bool has_const = false, has_alt = false;
  std::string values_text;
  auto* synth = app.add_subcommand("synth", "Recover coefficients from initial values w_0..w_{k-1}");
  synth->add_option("--p0", p0_deg, "Degree of P0 (omit for none)");
  synth->add_option("--p1", p1_deg, "Degree of P1 (omit for none)");
  synth->add_flag("--const", has_const, "Include a constant term e");
  synth->add_flag("--alt", has_alt, "Include an alternating term f(-1)^n");
  synth->add_option("--values", values_text, "Comma-separated integers")->required();

  int which = 0;
  std::optional<std::string> lead_d, lead_f, lead_e;
  std::string z_text, w_text;
  auto* theorem = app.add_subcommand("theorem", "Build a member of one of the closed-form families 1-4");
  theorem->add_option("which", which, "Family 1, 2, 3 or 4")->required();
  theorem->add_option("--d", lead_d, "Family 1: integer d");
  theorem->add_option("--f", lead_f, "Family 2: integer f");
  theorem->add_option("--e", lead_e, "Family 3: integer e");
  theorem->add_option("--z", z_text, "Families 1-3: comma-separated z_1..z_k");
  theorem->add_option("--w", w_text, "Family 4: comma-separated w_0..w_5");

  std::string prefix_text;
  std::string fixture_dir = FIBFORM_FIXTURE_DIR;
  bool remote = false;
  long timeout_ms = 10000;
  std::string base_url = "https://oeis.org";
  auto* oeis_cmd = app.add_subcommand("oeis", "Look a prefix up in the bundled fixtures (or live with --remote)");
  oeis_cmd->add_option("--prefix", prefix_text, "Comma-separated terms (at least 4)")->required();
  oeis_cmd->add_option("--fixtures", fixture_dir, "Fixture directory");
  bool offline = false;
  auto* remote_flag = oeis_cmd->add_flag("--remote", remote, "Query oeis.org; also needs FIBFORM_ALLOW_NETWORK=1");
  oeis_cmd->add_flag("--offline", offline, "Fixtures only (the default)")->excludes(remote_flag);
  oeis_cmd->add_option("--timeout-ms", timeout_ms, "Remote timeout");
  oeis_cmd->add_option("--url", base_url, "Remote base URL");

  std::string oracle_name;
  std::int64_t oracle_from = 0, oracle_to = 10;
  auto* oracle = app.add_subcommand("oracle", "Brute-force counts: compositions, inversions, leonardo");
  oracle->add_option("name", oracle_name, "compositions | inversions | leonardo")
      ->required()
      ->check(CLI::IsMember({"compositions", "inversions", "leonardo"}));
  oracle->add_option("--from", oracle_from, "First n");
  oracle->add_option("--to", oracle_to, "Last n");

  std::string a_number;
  auto* bfile = app.add_subcommand("bfile", "Write w_from..w_to as an OEIS b-file");
  bfile->add_option("expr", expr_text, "Expression")->required();
  bfile->add_option("--a-number", a_number, "A-number for the header")->required();
  bfile->add_option("--from", from, "First index");
  bfile->add_option("--to", to, "Last index");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  const Emitter em{as_json, out};
  try {
    if (*eval) {
      if (from > to) throw UsageError("--from must not exceed --to");
      const FibExpr e = parse(expr_text);
      json values = json::array();
      std::ostringstream text;
      for (std::int64_t n = from; n <= to; ++n) {
        const std::string v = to_string(evaluate(e, Int(n)));
        values.push_back({{"n", n}, {"value", v}});
        text << n << " " << v << "\n";
      }
      em.emit({{"command", "eval"}, {"expression", print(e)}, {"values", values}}, text.str());
    } else if (*canon) {
      const FibExpr e = parse(expr_text);
      const json c = canon_json(canonicalize(e));
      std::ostringstream text;
      text << "P0: " << c["p0"].get<std::string>() << "\nP1: " << c["p1"].get<std::string>()
           << "\ne: " << c["e"].get<std::string>() << "\nf: " << c["f"].get<std::string>() << "\n";
      em.emit({{"command", "canon"}, {"expression", print(e)}, {"canonical", c}}, text.str());
    } else if (*rec) {
      const FibExpr e = parse(expr_text);
      const Recurrence r = to_recurrence(e);
      const json rj = recurrence_json(r);
      std::ostringstream text;
      text << "order: " << r.order << "\nchar_poly: " << rj["char_poly"].get<std::string>()
           << "\nrecurrence: " << recurrence_text(r) << "\ncoeffs: " << join(rj["coeffs"])
           << "\ninitial: " << join(rj["initial"]) << "\n";
      em.emit({{"command", "rec"}, {"expression", print(e)}, {"recurrence", rj}}, text.str());
    } else if (*check) {
      const FibExpr e = parse(expr_text);
      const IntegralityVerdict v = is_integer_sequence(e);
      json doc{{"command", "check"}, {"expression", print(e)}};
      std::ostringstream text;
      if (const auto* ok_v = std::get_if<Integral>(&v)) {
        doc["verdict"] = "INTEGER";
        doc["certificate"] = int_list(ok_v->certificate);
        text << "INTEGER\ncertificate: " << join(doc["certificate"]) << "\n";
        em.emit(doc, text.str());
        return ok;
      }
      const auto& bad = std::get<NonIntegral>(v);
      doc["verdict"] = "NON-INTEGER";
      doc["witness"] = {{"n", bad.witness_n.str()}, {"value", to_string(bad.value)}};
      text << "NON-INTEGER\nwitness: n=" << bad.witness_n.str() << " value=" << to_string(bad.value) << "\n";
      em.emit(doc, text.str());
      return non_integer;
    } else if (*synth) {
      auto degree = [](const std::optional<int>& d) -> Degree {
        if (!d) return std::nullopt;
        if (*d < 0) throw UsageError("degrees must be non-negative");
        return static_cast<std::size_t>(*d);
      };
      const Template t{degree(p0_deg), degree(p1_deg), has_const, has_alt};
      const std::vector<Int> ints = parse_int_list(values_text);
      const std::vector<Rational> vals(ints.begin(), ints.end());
      const SynthSolution s = solve_template(t, vals);
      json coeffs = json::object();
      std::ostringstream text;
      text << print(s.expr) << "\n";
      for (const auto& [name, value] : s.coefficients) {
        coeffs[name] = to_string(value);
        text << name << " = " << to_string(value) << "\n";
      }
      em.emit({{"command", "synth"}, {"expression", print(s.expr)}, {"coefficients", coeffs}}, text.str());
    } else if (*theorem) {
      const Theorem th = theorem_from_int(which);
      std::vector<Int> params;
      if (th == Theorem::linear_const_alt) {
        if (w_text.empty()) throw UsageError("family 4 needs --w w0,...,w5");
        params = parse_int_list(w_text);
      } else {
        const std::optional<std::string>& lead =
            th == Theorem::linear_linear ? lead_d : (th == Theorem::quadratic_quadratic ? lead_f : lead_e);
        const char* lead_name = th == Theorem::linear_linear ? "--d" : (th == Theorem::quadratic_quadratic ? "--f" : "--e");
        if (!lead) throw UsageError(std::string("family ") + std::to_string(which) + " needs " + lead_name);
        if (z_text.empty()) throw UsageError("families 1-3 need --z");
        params = parse_int_list(*lead);
        if (params.size() != 1) throw UsageError(std::string(lead_name) + " takes a single integer");
        const std::vector<Int> z = parse_int_list(z_text);
        params.insert(params.end(), z.begin(), z.end());
      }
      const FibExpr e = theorem_construct(th, params);
      em.emit({{"command", "theorem"}, {"which", which}, {"expression", print(e)}}, print(e) + "\n");
    } else if (*oeis_cmd) {
      const std::vector<Int> prefix = parse_int_list(prefix_text);
      std::vector<oeis::OeisHit> hits;
      if (remote) {
        hits = oeis::search_remote(prefix, {true, base_url, std::chrono::milliseconds(timeout_ms)});
      } else {
        hits = oeis::search_local(prefix, oeis::load_fixtures(fixture_dir));
      }
      json arr = json::array();
      std::ostringstream text;
      for (const oeis::OeisHit& h : hits) {
        arr.push_back({{"a_number", h.entry.a_number}, {"offset", h.entry.offset}, {"match_start", h.match_start}});
        text << h.entry.a_number << " offset " << h.entry.offset << " match_start " << h.match_start << "\n";
      }
      if (hits.empty()) text << "no match\n";
      em.emit({{"command", "oeis"}, {"source", remote ? "remote" : "local"}, {"hits", arr}}, text.str());
    } else if (*oracle) {
      if (oracle_from < 0 || oracle_from > oracle_to) throw UsageError("need 0 <= --from <= --to");
      if (oracle_to > 100000) throw UsageError("--to is limited to 100000");
      json values = json::array();
      std::ostringstream text;
      for (std::int64_t n = oracle_from; n <= oracle_to; ++n) {
        const auto un = static_cast<unsigned>(n);
        Int v;
        if (oracle_name == "compositions")
          v = oracles::compositions_parts_count(un);
        else if (oracle_name == "inversions")
          v = oracles::fibonacci_word_inversions(un);
        else
          v = oracles::leonardo(un);
        values.push_back({{"n", n}, {"count", v.str()}});
        text << n << " " << v.str() << "\n";
      }
      em.emit({{"command", "oracle"}, {"name", oracle_name}, {"values", values}}, text.str());
    } else if (*bfile) {
      if (from > to) throw UsageError("--from must not exceed --to");
      if (!oeis::is_a_number(a_number)) throw UsageError("--a-number must look like A000045");
      const FibExpr e = parse(expr_text);
      oeis::OeisEntry entry{a_number, from, {}};
      for (std::int64_t n = from; n <= to; ++n) {
        const Rational v = evaluate(e, Int(n));
        if (!is_integer(v)) throw UsageError("w_" + std::to_string(n) + " = " + to_string(v) + " is not an integer");
        entry.terms.push_back(numerator_of(v));
      }
      oeis::validate(entry);
      out << oeis::serialize_bfile(entry, {a_number, "generated by fibform bfile from: " + print(e)});
    }
    return ok;
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    if (!expr_text.empty()) err << "  " << expr_text << "\n  " << std::string(e.offset(), ' ') << "^\n";
    return usage_error;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const DegenerateTemplate& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const oeis::NetworkError& e) {
    err << "network error: " << e.what() << "\n";
    return network_failure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}

}  // namespace fibform::cli
