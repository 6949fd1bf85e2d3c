#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zq/zq.hpp"

namespace zq::cli {

using ordered_json = nlohmann::ordered_json;

inline std::uint64_t parse_limit(const std::string& text) {
  if (text.rfind("2^", 0) == 0) {
    const int e = std::stoi(text.substr(2));
    if (e < 0 || e > 63) throw std::domain_error("limit exponent out of range: " + text);
    return std::uint64_t{1} << e;
  }
  return std::stoull(text);
}

inline std::string rational_str(const Rational& r) {
  return r.is_integer() ? std::to_string(r.num()) : r.str();
}

inline ordered_json summary_json(const CodeSummary& s) {
  ordered_json j;
  j["q"] = s.q;
  j["n"] = s.n;
  j["k"] = s.k;
  j["cardinality"] = s.cardinality;
  if (s.min_distance)
    j["min_distance"] = *s.min_distance;
  else
    j["min_distance"] = nullptr;
  ordered_json wd;
  for (const auto& [w, count] : s.weight_distribution) wd[std::to_string(w)] = count;
  j["weight_distribution"] = std::move(wd);
  return j;
}

inline ordered_json radius_json(const RadiusResult& r) {
  ordered_json j;
  j["value"] = r.value;
  j["method"] = to_string(r.method);
  j["exact"] = r.exact;
  j["states_visited"] = r.states_visited;
  return j;
}

inline ordered_json report_json(const BoundReport& r) {
  ordered_json j;
  j["theorem_id"] = r.theorem_id;
  ordered_json in;
  for (const auto& [key, value] : r.inputs) in[key] = value;
  j["inputs"] = std::move(in);
  j["formula_value"] = r.formula_value.str();
  if (r.computed_value.exact)
    j["computed_value"] = *r.computed_value.exact;
  else if (r.computed_value.interval)
    j["computed_value"] = {r.computed_value.interval->first, r.computed_value.interval->second};
  else
    j["computed_value"] = nullptr;
  j["verdict"] = to_string(r.verdict);
  j["notes"] = r.notes;
  return j;
}

inline void emit_document(std::ostream& out, const std::string& command, ordered_json records,
                          bool overall_pass) {
  ordered_json doc;
  doc["tool_version"] = kVersion;
  doc["command"] = command;
  doc["records"] = std::move(records);
  doc["overall_pass"] = overall_pass;
  out << doc.dump(2) << '\n';
}

inline std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

/// Run one command. Exit codes: 0 success/pass, 1 verification failure,
/// 2 usage or input error, 3 resource budget exceeded.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z_q-linear code toolkit: code family constructions, exact parameters, covering "
               "radii, and formula verification"};
  app.name("zqcodes");

  // construct
  auto* construct = app.add_subcommand("construct", "build a generator matrix and write it");
  std::string family;
  construct->add_option("family", family, "simplex|macdonald|repetition|full-repetition|extend")
      ->required();
  int c_q = 0, c_k = 0, c_u = 0, c_v = 0;
  std::uint64_t c_n = 0;
  std::string c_in, c_out;
  auto* c_q_opt = construct->add_option("--q", c_q, "modulus");
  auto* c_k_opt = construct->add_option("--k", c_k, "row count");
  auto* c_u_opt = construct->add_option("--u", c_u, "macdonald deletion parameter");
  auto* c_n_opt = construct->add_option("--n", c_n, "block length");
  auto* c_v_opt = construct->add_option("--v", c_v, "repetition symbol");
  construct->add_option("--in", c_in, "input matrix file (extend)");
  construct->add_option("--out", c_out, "output matrix file")->required();

  // params
  auto* params = app.add_subcommand("params", "enumerate a code and print its exact parameters");
  std::string p_file, p_limit;
  bool p_json = false;
  params->add_option("file", p_file, "generator matrix file")->required();
  params->add_option("--limit", p_limit, "enumeration budget (integer or 2^E)");
  params->add_flag("--json", p_json, "emit a JSON report");

  // radius
  auto* radius = app.add_subcommand("radius", "compute the covering radius of a code");
  std::string r_file, r_method, r_limit;
  std::uint64_t r_samples = 10000, r_seed = 1;
  bool r_json = false;
  radius->add_option("file", r_file, "generator matrix file")->required();
  radius->add_option("--method", r_method, "exhaustive|bfs|sample")->required();
  radius->add_option("--limit", r_limit, "state budget (integer or 2^E)");
  radius->add_option("--samples", r_samples, "sample count for --method sample");
  radius->add_option("--seed", r_seed, "sampler seed");
  radius->add_flag("--json", r_json, "emit a JSON report");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check one claim family against ground truth");
  std::string v_theorem;
  VerifyOptions vopt;
  int v_kmax = -1, v_nmax = -1;
  bool v_json = false;
  verify_cmd->add_option("theorem-id", v_theorem, "claim family to check")->required();
  auto* v_q_opt = verify_cmd->add_option("--q", vopt.q, "modulus");
  verify_cmd->add_option("--kmax", v_kmax, "largest row count to check");
  verify_cmd->add_option("--nmax", v_nmax, "largest block length to check");
  verify_cmd->add_option("--samples", vopt.samples, "sample count for out-of-budget radii");
  verify_cmd->add_option("--seed", vopt.seed, "seed for randomized suites and sampling");
  verify_cmd->add_flag("--json", v_json, "emit a JSON report");

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("zqcodes");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string command = join_args(args);
  std::string current_file;
  auto load = [&current_file](const std::string& path) {
    current_file = path;
    return read_matrix_file(path);
  };
  try {
    if (*construct) {
      if (!*c_q_opt) throw std::invalid_argument("construct requires --q");
      auto need = [&](const CLI::Option* o, const char* name) {
        if (!*o)
          throw std::invalid_argument(std::string("construct ") + family + " requires " + name);
      };
      std::optional<GeneratorMatrix> G;
      if (family == "simplex") {
        need(c_k_opt, "--k");
        if (!is_even(c_q)) err << "note: q=" << c_q << " is odd; distance formulas assume even q\n";
        G = simplex_generator(c_q, c_k);
      } else if (family == "macdonald") {
        need(c_k_opt, "--k");
        need(c_u_opt, "--u");
        if (!is_even(c_q)) err << "note: q=" << c_q << " is odd; distance formulas assume even q\n";
        G = macdonald_generator(c_q, c_k, c_u);
      } else if (family == "repetition") {
        need(c_n_opt, "--n");
        need(c_v_opt, "--v");
        G = repetition_generator(c_q, static_cast<std::size_t>(c_n), c_v);
      } else if (family == "full-repetition") {
        need(c_n_opt, "--n");
        if (!is_even(c_q)) err << "note: q=" << c_q << " is odd; distance formulas assume even q\n";
        G = full_repetition_generator(c_q, static_cast<std::size_t>(c_n));
      } else if (family == "extend") {
        if (c_in.empty()) throw std::invalid_argument("construct extend requires --in");
        const GeneratorMatrix base = load(c_in);
        if (base.modulus() != c_q)
          throw std::invalid_argument("--q " + std::to_string(c_q) +
                                      " does not match input file modulus " +
                                      std::to_string(base.modulus()));
        G = extension_generator(enumerate_codewords(base));
      } else {
        throw std::invalid_argument("unknown construction: " + family);
      }
      write_matrix_file(c_out, *G);
      out << "wrote " << c_out << " (" << G->row_count() << " x " << G->length()
          << ", q=" << G->modulus() << ")\n";
      return 0;
    }

    if (*params) {
      const std::uint64_t limit = p_limit.empty() ? kDefaultEnumerationBudget : parse_limit(p_limit);
      const GeneratorMatrix G = load(p_file);
      const LinearCode C = enumerate_codewords(G, limit);
      const CodeSummary& s = C.summary();
      if (p_json) {
        emit_document(out, command, ordered_json::array({summary_json(s)}), true);
      } else {
        out << "[" << s.n << ", " << s.k << "] M=" << s.cardinality << " d=";
        if (s.min_distance)
          out << *s.min_distance;
        else
          out << "undefined";
        out << '\n' << "weights:";
        for (const auto& [w, count] : s.weight_distribution) out << ' ' << w << ':' << count;
        out << '\n';
      }
      return 0;
    }

    if (*radius) {
      const GeneratorMatrix G = load(r_file);
      const LinearCode C = enumerate_codewords(G);
      RadiusResult result;
      if (r_method == "exhaustive") {
        result = covering_radius_exhaustive(
            C, r_limit.empty() ? kDefaultExhaustiveBudget : parse_limit(r_limit));
      } else if (r_method == "bfs") {
        result =
            covering_radius_bfs(C, r_limit.empty() ? kDefaultBfsBudget : parse_limit(r_limit));
      } else if (r_method == "sample") {
        result = sampled_radius_lower_bound(C, r_samples, r_seed);
      } else {
        throw std::invalid_argument("unknown radius method: " + r_method);
      }
      if (r_json) {
        emit_document(out, command, ordered_json::array({radius_json(result)}), true);
      } else {
        out << "R " << (result.exact ? "= " : ">= ") << result.value << " ("
            << (result.exact ? "exact" : to_string(result.method)) << ")\n";
        out << "method: " << to_string(result.method)
            << ", states visited: " << result.states_visited << '\n';
      }
      return 0;
    }

    if (*verify_cmd) {
      if (!*v_q_opt) throw std::invalid_argument("verify requires --q");
      if (v_kmax >= 0) vopt.kmax = v_kmax;
      if (v_nmax >= 0) vopt.nmax = v_nmax;
      const auto id = parse_theorem_id(v_theorem);
      if (!id) {
        std::string known;
        for (const auto& [key, value] : theorem_id_table())
          known += (known.empty() ? "" : ", ") + std::string(key);
        throw std::invalid_argument("unknown theorem id '" + v_theorem + "'; known: " + known);
      }
      const std::vector<BoundReport> reports = verify(*id, vopt);
      bool any_fail = false;
      for (const auto& r : reports) any_fail |= (r.verdict == Verdict::Fail);
      const bool all_pass = !any_fail;
      if (v_json) {
        ordered_json records = ordered_json::array();
        for (const auto& r : reports) records.push_back(report_json(r));
        emit_document(out, command, std::move(records), all_pass);
      } else {
        for (const auto& r : reports) {
          out << '[' << to_string(r.verdict) << "] " << r.theorem_id << " {";
          for (std::size_t i = 0; i < r.inputs.size(); ++i)
            out << (i ? ", " : "") << r.inputs[i].first << '=' << r.inputs[i].second;
          out << "} formula=" << rational_str(r.formula_value);
          if (!r.formula_value.is_integer()) out << " (floor " << r.formula_value.floor() << ")";
          if (r.computed_value.exact)
            out << " computed=" << *r.computed_value.exact;
          else if (r.computed_value.interval)
            out << " computed=[" << r.computed_value.interval->first << ", "
                << r.computed_value.interval->second << "]";
          out << " -- " << r.notes << '\n';
        }
        out << "overall: " << (all_pass ? "PASS" : "FAIL") << '\n';
      }
      return any_fail ? 1 : 0;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << current_file << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace zq::cli
