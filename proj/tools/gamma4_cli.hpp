// Copyright 2026 The gamma4 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  `run` is the whole program minus process setup so
// tests can drive it in-process.
//
// Exit codes: 0 ok, 1 failed verification or internal error, 2 usage or
// parse error, 3 unsupported input.

#pragma once

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gamma4/gamma4.hpp"

#ifndef GAMMA4_VERSION
#define GAMMA4_VERSION "0.0.0"
#endif

namespace gamma4::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kUnsupported = 3 };

/// JSON file of "<canonical expr>|<invariant>" -> value, rewritten through
/// a temporary file and rename.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(*path_);
    if (!in) return;
    try {
      in >> data_;
    } catch (const json::exception& e) {
      throw InvalidArgument("cache file " + path_->string() + " is not valid JSON: " + e.what());
    }
    if (!data_.is_object()) throw InvalidArgument("cache file " + path_->string() + " does not hold a JSON object");
  }

  bool enabled() const noexcept { return path_.has_value(); }

  const json* find(const std::string& key) const {
    if (!enabled()) return nullptr;
    const auto it = data_.find(key);
    return it == data_.end() ? nullptr : &*it;
  }

  void put(const std::string& key, json value) {
    if (!enabled()) return;
    data_[key] = std::move(value);
    dirty_ = true;
  }

  void save() {
    if (!enabled() || !dirty_) return;
    const auto tmp = std::filesystem::path(path_->string() + ".tmp");
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw InvalidArgument("cannot write cache file " + tmp.string());
      out << data_.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, *path_);
    dirty_ = false;
  }

 private:
  std::optional<std::filesystem::path> path_;
  json data_ = json::object();
  bool dirty_ = false;
};

/// Invariant evaluation shared by all commands, memoized through the cache.
class Session {
 public:
  Session(RouterConfig cfg, ResultCache& cache) : cfg_(cfg), cache_(cache) {}

  const RouterConfig& config() const noexcept { return cfg_; }

  ViSequence vi(const KnotExpression& e) {
    const std::string key = render(e) + "|V";
    if (const json* hit = cache_.find(key)) return ViSequence::from_values(hit->get<std::vector<std::int64_t>>());
    ViSequence v = vi_expr(e, cfg_);
    cache_.put(key, std::vector<std::int64_t>(v.values().begin(), v.values().end()));
    return v;
  }

  std::int64_t t(const KnotExpression& e) {
    const std::string key = render(e) + "|t";
    if (const json* hit = cache_.find(key)) return hit->get<std::int64_t>();
    const std::int64_t value = t_from_vi(vi(mirror(e)));
    cache_.put(key, value);
    return value;
  }

 private:
  RouterConfig cfg_;
  ResultCache& cache_;
};

struct Options {
  bool json = false;
  bool decimal = false;
  std::string cache;
  std::int64_t genus_cap = 60;
};

inline json to_json(const Rational& r) { return json{{"num", r.numerator()}, {"den", r.denominator()}}; }

inline json to_json(const ViSequence& v) { return std::vector<std::int64_t>(v.values().begin(), v.values().end()); }

inline std::string show(const Rational& r, const Options& o) {
  return o.decimal ? to_decimal(r) + " (inexact)" : to_string(r);
}

inline void emit(std::ostream& out, const json& input, json results) {
  json doc{{"input", input}, {"version", GAMMA4_VERSION}, {"results", std::move(results)}};
  out << doc.dump(2) << '\n';
}

/// Two-column text block.
class Table {
 public:
  Table& row(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, _] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

inline std::string quoted(const KnotExpression& e) { return e.is_unknot() ? "unknot" : render(e); }

// --- commands ---------------------------------------------------------------

inline int cmd_invariants(const std::string& text, Session& s, const Options& o, std::ostream& out) {
  const KnotExpression e = parse(text);
  const auto [p, n] = split_parts(e);
  const ViSequence v = s.vi(e);
  const ViSequence mv = s.vi(mirror(e));
  const std::int64_t sigma = signature_expr(e);
  const std::int64_t t = t_from_vi(mv), t_mirror = t_from_vi(v);
  if (o.json) {
    json alex = json::object();
    for (const auto& term : e.terms()) {
      const TorusKnot& k = term.knot;
      json coeffs = json::object();
      for (const auto& [exp, c] : alexander(k).terms()) coeffs[std::to_string(exp)] = c;
      alex["T(" + std::to_string(k.p()) + "," + std::to_string(k.q()) + ")"] = coeffs;
    }
    emit(out, text,
         {{"expression", render(e)},
          {"signature", sigma},
          {"genus_positive", p.total_genus()},
          {"genus_negative", n.total_genus()},
          {"alexander", alex},
          {"V", to_json(v)},
          {"V_mirror", to_json(mv)},
          {"nu_plus", v.first_zero()},
          {"nu_plus_mirror", mv.first_zero()},
          {"t", t},
          {"t_mirror", t_mirror},
          {"upsilon", upsilon(e)}});
    return kOk;
  }
  Table tab;
  tab.row("expression", quoted(e))
      .row("signature", std::to_string(sigma))
      .row("genus (positive part)", std::to_string(p.total_genus()))
      .row("genus (negative part)", std::to_string(n.total_genus()));
  for (const auto& term : e.terms())
    tab.row("alexander T(" + std::to_string(term.knot.p()) + "," + std::to_string(term.knot.q()) + ")",
            to_string(alexander(term.knot)));
  tab.row("V", to_string(v))
      .row("V (mirror)", to_string(mv))
      .row("nu+", std::to_string(v.first_zero()))
      .row("nu+ (mirror)", std::to_string(mv.first_zero()))
      .row("t", std::to_string(t))
      .row("t (mirror)", std::to_string(t_mirror))
      .row("upsilon", std::to_string(upsilon(e)));
  tab.print(out);
  return kOk;
}

inline int cmd_bound(const std::string& text, std::optional<std::int64_t> horizon, Session& s, const Options& o,
                     std::ostream& out) {
  const KnotExpression e = parse(text);
  BoundReport r;
  r.sigma = signature_expr(e);
  r.mirror_v = s.vi(mirror(e));
  const MainBound mb = main_bound_from(r.sigma, r.mirror_v);
  r.table = mb.table;
  r.argmax = mb.argmax;
  r.main = mb.value;
  r.t = r.sigma / 2 - r.main;
  r.batson = r.table.front();
  r.nu_plus = r.sigma / 2 - r.mirror_v.first_zero();
  r.upsilon = upsilon_bound(e);
  if (horizon) {
    if (*horizon < 1) throw InvalidArgument("--stable needs a positive horizon");
    Rational best(s.t(e), 1);
    std::int64_t witness = 1;
    for (std::int64_t n = 2; n <= *horizon; ++n) {
      const Rational ratio(s.t(multiply(e, n)), n);
      if (ratio < best) {
        best = ratio;
        witness = n;
      }
    }
    r.stable = Rational(r.sigma, 2) - best;
    r.stable_witness = witness;
  }
  r.final_gamma4_lower = final_lower(r.main, r.stable);

  if (o.json) {
    json res{{"expression", render(e)}, {"signature", r.sigma}, {"t", r.t},          {"table", r.table},
             {"argmax", r.argmax},      {"main", r.main},       {"batson", r.batson}, {"nu_plus", r.nu_plus},
             {"upsilon", *r.upsilon},   {"final_gamma4_lower", r.final_gamma4_lower}};
    if (r.stable) {
      res["stable"] = to_json(*r.stable);
      res["stable_horizon"] = *horizon;
      res["stable_witness"] = *r.stable_witness;
      if (o.decimal) res["stable_decimal"] = to_decimal(*r.stable);
    }
    emit(out, text, std::move(res));
    return kOk;
  }
  Table tab;
  tab.row("expression", quoted(e)).row("signature", std::to_string(r.sigma)).row("t", std::to_string(r.t));
  for (std::size_t m = 0; m < r.table.size(); ++m)
    tab.row("  m = " + std::to_string(m), std::to_string(r.table[m]) + (static_cast<std::int64_t>(m) == r.argmax ? "  *" : ""));
  tab.row("main", std::to_string(r.main))
      .row("batson", std::to_string(r.batson))
      .row("nu+ bound", std::to_string(r.nu_plus))
      .row("upsilon", std::to_string(*r.upsilon));
  if (r.stable)
    tab.row("stable (N = " + std::to_string(*horizon) + ")",
            show(*r.stable, o) + "  [witness n = " + std::to_string(*r.stable_witness) + "]");
  tab.row("final gamma4 lower bound", std::to_string(r.final_gamma4_lower));
  tab.print(out);
  return kOk;
}

inline int cmd_d_invariant(const std::string& text, std::int64_t n, Session& s, const Options& o, std::ostream& out) {
  const KnotExpression e = parse(text);
  if (n == 0) throw InvalidArgument("surgery framing must be nonzero");
  const std::int64_t m = n < 0 ? -n : n;
  const ViSequence v = s.vi(n > 0 ? e : mirror(e));
  std::vector<Rational> row;
  for (std::int64_t k = 0; k < m; ++k) row.push_back(n > 0 ? d_from_vi(v, m, k) : -d_from_vi(v, m, k));
  if (o.json) {
    json arr = json::array();
    for (std::int64_t k = 0; k < m; ++k) arr.push_back({{"k", k}, {"d", to_json(row[static_cast<std::size_t>(k)])}});
    emit(out, {{"expression", text}, {"n", n}}, {{"expression", render(e)}, {"n", n}, {"d", arr}});
    return kOk;
  }
  Table tab;
  for (std::int64_t k = 0; k < m; ++k) tab.row("k = " + std::to_string(k), show(row[static_cast<std::size_t>(k)], o));
  out << "d(S^3_" << n << "(" << quoted(e) << "), t_k)\n";
  tab.print(out);
  return kOk;
}

inline int cmd_omega(const std::string& text, std::int64_t horizon, Session& s, const Options& o, std::ostream& out) {
  const KnotExpression e = parse(text);
  if (horizon < 1) throw InvalidArgument("--max-n must be positive");
  std::vector<OmegaRow> rows;
  Rational best(0);
  std::int64_t witness = 1;
  bool decreasing = horizon > 1;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const std::int64_t t = s.t(multiply(e, n));
    const Rational ratio(t, n);
    if (n == 1 || ratio < best) {
      best = ratio;
      witness = n;
    }
    if (n > 1 && !(ratio < rows.back().ratio)) decreasing = false;
    rows.push_back({n, t, ratio, best});
  }
  if (o.json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n}, {"t", r.t}, {"ratio", to_json(r.ratio)}, {"running_min", to_json(r.running_min)}});
    emit(out, {{"expression", text}, {"max_n", horizon}},
         {{"expression", render(e)},
          {"rows", arr},
          {"omega_upper", to_json(best)},
          {"witness", witness},
          {"strictly_decreasing", decreasing}});
    return kOk;
  }
  out << "n\tt(nE)\tt(nE)/n\trunning min\n";
  for (const auto& r : rows)
    out << r.n << '\t' << r.t << '\t' << show(r.ratio, o) << '\t' << show(r.running_min, o) << '\n';
  out << "omega upper bound " << show(best, o) << " at n = " << witness << '\n';
  if (decreasing) out << "t(nE)/n is strictly decreasing over the horizon\n";
  return kOk;
}

inline int cmd_thin(std::int64_t tau, std::int64_t sigma, const Options& o, std::ostream& out) {
  const BoundReport r = thin_bounds(tau, sigma);
  if (o.json) {
    emit(out, {{"tau", tau}, {"sigma", sigma}},
         {{"signature_mirror", r.sigma},
          {"t_mirror", r.t},
          {"table", r.table},
          {"main", r.main},
          {"batson", r.batson},
          {"nu_plus", r.nu_plus},
          {"upsilon", *r.upsilon},
          {"final_gamma4_lower", r.final_gamma4_lower}});
    return kOk;
  }
  out << "bounds for the mirror of a Floer-thin knot with tau = " << tau << ", sigma = " << sigma << '\n';
  Table tab;
  tab.row("signature (mirror)", std::to_string(r.sigma))
      .row("t (mirror)", std::to_string(r.t))
      .row("main", std::to_string(r.main))
      .row("batson", std::to_string(r.batson))
      .row("nu+ bound", std::to_string(r.nu_plus))
      .row("upsilon", std::to_string(*r.upsilon))
      .row("final gamma4 lower bound", std::to_string(r.final_gamma4_lower));
  tab.print(out);
  return kOk;
}

inline int cmd_verify(const std::string& subset, const RouterConfig& cfg, const Options& o, std::ostream& out) {
  const VerifyReport r = run_verify(subset, cfg);
  if (o.json) {
    json arr = json::array();
    for (const auto& c : r.checks)
      arr.push_back({{"id", c.id},
                     {"description", c.description},
                     {"expected", c.expected},
                     {"computed", c.computed},
                     {"pass", c.pass}});
    emit(out, {{"subset", subset}}, {{"checks", arr}, {"pass", r.pass()}});
  } else {
    for (const auto& c : r.checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.description << "  [expected " << c.expected
          << ", computed " << c.computed << "]\n";
    out << (r.pass() ? "all checks passed" : "verification FAILED") << '\n';
  }
  return r.pass() ? kOk : kVerifyFailed;
}

inline int cmd_cfk_dump(const std::string& text, const RouterConfig& cfg, const Options& o, std::ostream& out) {
  const KnotExpression e = parse(text);
  const BifilteredComplex c = knot_complex(e, cfg.complex_generator_cap);
  if (o.json) {
    json gens = json::array(), arrows = json::array();
    for (std::size_t x = 0; x < c.size(); ++x) {
      gens.push_back({{"id", x}, {"M", c.generator(x).maslov}, {"A", c.generator(x).alexander}});
      for (const auto& a : c.arrows(x)) arrows.push_back({{"src", x}, {"power", a.power}, {"tgt", a.target}});
    }
    emit(out, text, {{"expression", render(e)}, {"generators", gens}, {"arrows", arrows}});
    return kOk;
  }
  out << dump(c);
  return kOk;
}

// --- entry point ------------------------------------------------------------

/// Leading '-' on an expression would read as a flag; the expression parser
/// skips whitespace, so a space in front keeps it positional.
inline std::vector<std::string> protect_expressions(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 1 && a[0] == '-' && a.find("T(") != std::string::npos) a.insert(a.begin(), ' ');
  return args;
}

/// `args` excludes the program name.
inline int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concordance invariants and non-orientable slice genus bounds for sums of torus knots", "gamma4"};
  app.set_version_flag("--version", GAMMA4_VERSION);
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_flag("--decimal", o.decimal, "Render rationals as 6-digit decimals (inexact)");
  app.add_option("--cache", o.cache, "JSON result cache file");
  app.add_option("--genus-cap", o.genus_cap, "Genus cap for iterated reduction")->check(CLI::NonNegativeNumber);

  std::string expr, subset = "all";
  std::int64_t n = 0, max_n = 0, tau = 0, sigma = 0;
  std::optional<std::int64_t> stable;

  auto* inv = app.add_subcommand("invariants", "Signature, Alexander polynomials, V, nu+, t");
  inv->add_option("expr", expr, "Knot expression")->required();
  auto* bnd = app.add_subcommand("bound", "All gamma4 lower bounds");
  bnd->add_option("expr", expr, "Knot expression")->required();
  bnd->add_option("--stable", stable, "Horizon N for the stable bound");
  auto* dinv = app.add_subcommand("d-invariant", "Correction terms of n-surgery for every spin^c label");
  dinv->add_option("expr", expr, "Knot expression")->required();
  dinv->add_option("n", n, "Nonzero surgery framing")->required();
  auto* omg = app.add_subcommand("omega", "Scan t(nE)/n for n = 1..N");
  omg->add_option("expr", expr, "Knot expression")->required();
  omg->add_option("--max-n", max_n, "Horizon N")->required();
  auto* thin = app.add_subcommand("thin", "Bounds for the mirror of a Floer-thin knot");
  thin->add_option("--tau", tau, "tau(K) >= 0")->required();
  thin->add_option("--sigma", sigma, "sigma(K), even")->required();
  auto* ver = app.add_subcommand("verify", "Run the reproduction suite");
  std::string subset_help = "Subset: all";
  for (const auto& name : verify_subsets()) subset_help += ", " + name;
  ver->add_option("--subset", subset, subset_help);
  auto* dmp = app.add_subcommand("cfk-dump", "Dump the full knot complex");
  dmp->add_option("expr", expr, "Knot expression")->required();

  std::vector<std::string> args = protect_expressions(raw_args);
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << GAMMA4_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    ResultCache cache = o.cache.empty() ? ResultCache() : ResultCache(o.cache);
    RouterConfig cfg;
    cfg.genus_cap = o.genus_cap;
    Session session(cfg, cache);
    int code = kOk;
    if (*inv) code = cmd_invariants(expr, session, o, out);
    else if (*bnd) code = cmd_bound(expr, stable, session, o, out);
    else if (*dinv) code = cmd_d_invariant(expr, n, session, o, out);
    else if (*omg) code = cmd_omega(expr, max_n, session, o, out);
    else if (*thin) code = cmd_thin(tau, sigma, o, out);
    else if (*ver) code = cmd_verify(subset, cfg, o, out);
    else if (*dmp) code = cmd_cfk_dump(expr, cfg, o, out);
    cache.save();
    return code;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << " at position " << e.position() << '\n';
    return kUsage;
  } catch (const InvalidKnot& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OddEulerNumber& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

}  // namespace gamma4::cli
