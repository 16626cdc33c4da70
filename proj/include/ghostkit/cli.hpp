#pragma once

// The `ghostkit` command-line surface. run_command takes the arguments after
// the program name and writes to the given streams, so it can be driven from
// tests as well as from main().
//
// Exit codes: 0 success, 1 usage / parse / validation / domain error,
// 2 verification failure.

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghostkit/characters.hpp"
#include "ghostkit/config.hpp"
#include "ghostkit/expr.hpp"
#include "ghostkit/functors.hpp"
#include "ghostkit/fusion.hpp"
#include "ghostkit/homalg.hpp"
#include "ghostkit/modcat.hpp"
#include "ghostkit/rigidity.hpp"
#include "ghostkit/verify.hpp"

namespace ghostkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerifyFailed = 2;

namespace cli {

using nlohmann::json;

inline json sum_json(const FormalSum& s) {
  json a = json::array();
  for (const auto& [m, k] : s) a.push_back({{"module", m.str()}, {"mult", k}});
  return a;
}

inline const char* row_name(Row r) {
  switch (r) {
    case Row::Top: return "top";
    case Row::Middle: return "middle";
    case Row::Bottom: return "bottom";
  }
  return "bottom";
}

/// The single indecomposable an expression denotes (multiplicity one).
inline CanonicalModule single(const std::string& text) {
  const FormalSum s = parse_module_expr(text);
  if (s.terms().size() != 1 || s.begin()->second != 1)
    throw ValidationError("'" + text + "' is not a single indecomposable");
  return s.begin()->first;
}

/// Labels on a top and bottom row with \ and / for the edges of a string.
inline std::string string_diagram(const LoewyWord& w) {
  std::size_t cell = 0;
  for (const auto& e : w.entries) cell = std::max(cell, e.factor.str().size());
  cell += 2;
  const std::size_t width = cell * w.entries.size();
  std::string top(width, ' '), mid(width, ' '), bot(width, ' ');
  for (std::size_t k = 0; k < w.entries.size(); ++k) {
    const std::string label = w.entries[k].factor.str();
    std::string& line = w.entries[k].row == Row::Top ? top : bot;
    line.replace(k * cell, label.size(), label);
    if (k + 1 < w.entries.size()) {
      const std::size_t c0 = k * cell + label.size() / 2;
      const std::size_t c1 = (k + 1) * cell + w.entries[k + 1].factor.str().size() / 2;
      mid[(c0 + c1) / 2] = w.entries[k].row == Row::Top ? '\\' : '/';
    }
  }
  auto rstrip = [](std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  std::string out;
  for (const auto& line : {top, mid, bot})
    if (!rstrip(line).empty()) out += rstrip(line) + "\n";
  return out;
}

inline std::string diamond_diagram(const LoewyWord& w) {
  const std::string t = w.entries[0].factor.str(), l = w.entries[1].factor.str(),
                    r = w.entries[2].factor.str(), b = w.entries[3].factor.str();
  const std::size_t gap = 4, span = l.size() + gap + r.size();
  auto centred = [&](const std::string& s) { return std::string((span - s.size()) / 2, ' ') + s + "\n"; };
  const std::size_t lc = l.size() / 2 + 1, rc = l.size() + gap + r.size() / 2;
  std::string up(rc + 1, ' '), down(rc + 1, ' ');
  up[lc] = '/';
  up[rc] = '\\';
  down[lc] = '\\';
  down[rc] = '/';
  return centred(t) + up + "\n" + l + std::string(gap, ' ') + r + "\n" + down + "\n" + centred(b);
}

inline std::string loewy_diagram(const CanonicalModule& m) {
  const LoewyWord w = loewy(m);
  if (w.diamond) return diamond_diagram(w);
  if (m.is_simple()) return m.str() + "\n";
  return string_diagram(w);
}

inline json loewy_json(const CanonicalModule& m) {
  const LoewyWord w = loewy(m);
  json entries = json::array();
  for (const auto& e : w.entries) entries.push_back({{"factor", e.factor.str()}, {"row", row_name(e.row)}});
  return {{"module", m.str()}, {"diamond", w.diamond}, {"entries", entries}};
}

inline CanonicalModule apply_dual(const std::string& kind, const CanonicalModule& m) {
  if (kind == "restricted") return dual_restricted(m);
  if (kind == "star") return dual_star(m);
  if (kind == "tensor") return dual_tensor(m);
  return conjugate(m);
}

inline FormalSum apply_dual(const std::string& kind, const FormalSum& s) {
  FormalSum out;
  for (const auto& [m, k] : s) out.add(apply_dual(kind, m), k);
  return out;
}

inline std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

struct Printer {
  std::string format;
  std::ostream& out;

  bool json_mode() const { return format == "json"; }
  void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

}  // namespace cli

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using cli::json;
  CLI::App app{"Fusion, Hom/Ext, characters and rigidity checks for the bosonic ghost module category",
               "ghostkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --format and --config may follow the subcommand
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string format = "text";
  std::optional<std::string> config_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--config", config_path, "key = value defaults file (else $GHOSTKIT_CONFIG)");

  // Flags shared by several subcommands; unset optionals fall back to the config.
  std::optional<std::string> hmax_text, jwindow_text;
  std::optional<int> catalog_bound, max_length, max_flow;
  bool strict_guards = false, compact = false, with_kernel = false;
  std::vector<std::string> exprs;
  std::string dual_kind = "restricted";
  std::vector<std::string> suites;
  unsigned threads = 0;
  double rig_j = 0.5, rig_w1 = 1.0;
  int rig_ell = 0;

  auto* fuse_cmd = app.add_subcommand("fuse", "Fusion product of two module expressions");
  fuse_cmd->add_option("a", exprs, "Module expressions")->required()->expected(2);
  fuse_cmd->add_flag("--strict-guards", strict_guards, "Refuse products outside the m >= n role assignment");
  fuse_cmd->add_flag("--compact", compact, "Keep S{m,n}_k projective sums unexpanded in text output");

  auto* hom_cmd = app.add_subcommand("hom", "dim Hom(source, target)");
  hom_cmd->add_option("modules", exprs, "Source and target")->required()->expected(2);
  auto* ext_cmd = app.add_subcommand("ext", "dim Ext^1(source, target)");
  ext_cmd->add_option("modules", exprs, "Source and target")->required()->expected(2);

  auto* char_cmd = app.add_subcommand("char", "Graded dimensions on a box");
  char_cmd->add_option("module", exprs, "Module expression")->required()->expected(1);
  char_cmd->add_option("--hmax", hmax_text, "Conformal weight cut-off (rational)");
  char_cmd->add_option("--jwindow", jwindow_text, "Ghost weight window a:b");

  auto* loewy_cmd = app.add_subcommand("loewy", "Loewy diagram of an indecomposable");
  loewy_cmd->add_option("module", exprs, "Module expression")->required()->expected(1);

  auto* dual_cmd = app.add_subcommand("dual", "Apply a duality functor");
  dual_cmd->add_option("module", exprs, "Module expression")->required()->expected(1);
  dual_cmd->add_option("--kind", dual_kind, "Which functor")
      ->check(CLI::IsMember({"restricted", "star", "tensor", "conjugate"}))
      ->capture_default_str();

  auto* cover_cmd = app.add_subcommand("cover", "Projective cover");
  cover_cmd->add_option("module", exprs, "Module expression")->required()->expected(1);
  cover_cmd->add_flag("--kernel", with_kernel, "Also print the kernel of the cover");
  auto* hull_cmd = app.add_subcommand("hull", "Injective hull");
  hull_cmd->add_option("module", exprs, "Module expression")->required()->expected(1);
  hull_cmd->add_flag("--cokernel", with_kernel, "Also print the cokernel of the hull");

  auto* rig_cmd = app.add_subcommand("rigidity", "Rigidity constant and hypergeometric identities");
  rig_cmd->add_option("--j", rig_j, "Coset representative, 0 < j < 1")->capture_default_str();
  rig_cmd->add_option("--w1", rig_w1, "Insertion point w1 (w2 = 2 w1)")->capture_default_str();
  rig_cmd->add_option("--ell", rig_ell, "Spectral flow index")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("--suite", suites, "fusion, homalg, characters or numerics (default: all)")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-length", max_length, "Longest string in the pool");
  verify_cmd->add_option("--max-flow", max_flow, "Largest |flow| in the pool");
  verify_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  verify_cmd->add_option("--catalog-bound", catalog_bound, "Parameter bound of the sequence catalog");

  auto* catalog_cmd = app.add_subcommand("catalog", "List the non-split short exact sequences");
  catalog_cmd->add_option("--bound", catalog_bound, "Parameter bound of the infinite families");

  std::vector<std::string> argv_store{"ghostkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  const cli::Printer p{format, out};
  auto* cmd = app.get_subcommands().front();
  if (format == "csv" && cmd != char_cmd) {
    err << "error: --format csv is only available for char\n";
    return kExitError;
  }

  try {
    Config cfg = load_config(config_path);
    if (hmax_text) cfg.hmax = parse_rational(*hmax_text);
    if (jwindow_text) std::tie(cfg.jmin, cfg.jmax) = parse_window(*jwindow_text);
    if (catalog_bound) cfg.catalog_bound = *catalog_bound;
    if (max_length) cfg.max_length = *max_length;
    if (max_flow) cfg.max_flow = *max_flow;
    if (strict_guards) cfg.strict_guards = true;

    if (cmd == fuse_cmd) {
      const FusionResult r = fuse_detailed(parse_module_expr(exprs[0]), parse_module_expr(exprs[1]),
                                           FusionOptions{cfg.strict_guards});
      if (p.json_mode()) {
        p.emit({{"input", exprs}, {"summands", cli::sum_json(r.sum)}, {"guard_extended", r.guard_extended}});
      } else {
        out << (compact ? r.compact_str() : r.sum.str()) << "\n";
        if (r.guard_extended) err << "note: guard-extended product\n";
      }
    } else if (cmd == hom_cmd || cmd == ext_cmd) {
      const FormalSum a = parse_module_expr(exprs[0]), b = parse_module_expr(exprs[1]);
      const std::int64_t d = cmd == hom_cmd ? hom_dim(a, b) : ext_dim(a, b);
      if (p.json_mode()) p.emit({{"source", a.str()}, {"target", b.str()}, {"dim", d}});
      else out << d << "\n";
    } else if (cmd == char_cmd) {
      const FormalSum m = parse_module_expr(exprs[0]);
      const CharSeries ch = character(m, cfg.hmax, cfg.jmin, cfg.jmax);
      if (p.json_mode()) {
        json coeffs = json::array();
        for (const auto& [key, d] : ch.coeffs())
          if (d != 0) coeffs.push_back({{"j", to_string(key.first)}, {"h", to_string(key.second)}, {"dim", d}});
        p.emit({{"module", m.str()},
                {"hmax", to_string(cfg.hmax)},
                {"jmin", to_string(cfg.jmin)},
                {"jmax", to_string(cfg.jmax)},
                {"coefficients", coeffs}});
      } else {
        const char sep = format == "csv" ? ',' : ' ';
        out << "j" << sep << "h" << sep << "dim\n";
        for (const auto& [key, d] : ch.coeffs())
          if (d != 0) out << to_string(key.first) << sep << to_string(key.second) << sep << d << "\n";
      }
    } else if (cmd == loewy_cmd) {
      const CanonicalModule m = cli::single(exprs[0]);
      if (p.json_mode()) p.emit(cli::loewy_json(m));
      else out << cli::loewy_diagram(m);
    } else if (cmd == dual_cmd) {
      const FormalSum m = parse_module_expr(exprs[0]);
      const FormalSum r = cli::apply_dual(dual_kind, m);
      if (p.json_mode()) p.emit({{"input", m.str()}, {"kind", dual_kind}, {"result", r.str()}});
      else out << r.str() << "\n";
    } else if (cmd == cover_cmd || cmd == hull_cmd) {
      const bool is_cover = cmd == cover_cmd;
      const CanonicalModule m = cli::single(exprs[0]);
      const FormalSum env = is_cover ? projective_cover(m) : injective_hull(m);
      std::optional<CanonicalModule> rest;
      if (with_kernel && !m.is_projective())
        rest = is_cover ? presentation_kernel(m) : presentation_cokernel(m);
      const char* env_key = is_cover ? "cover" : "hull";
      const char* rest_key = is_cover ? "kernel" : "cokernel";
      if (p.json_mode()) {
        json j{{"module", m.str()}, {env_key, env.str()}};
        if (with_kernel) j[rest_key] = rest ? json(rest->str()) : json("0");
        p.emit(j);
      } else {
        out << env.str() << "\n";
        if (with_kernel) out << rest_key << ": " << (rest ? rest->str() : std::string("0")) << "\n";
      }
    } else if (cmd == rig_cmd) {
      const auto I = rigidity_constant(rig_j, rig_w1, rig_ell);
      const RigidityIdentities id = rigidity_identities(rig_j);
      const bool pass = id.pass() && std::abs(I) > 1e-8;
      if (p.json_mode()) {
        p.emit({{"j", rig_j},
                {"w1", rig_w1},
                {"ell", rig_ell},
                {"I_re", I.real()},
                {"I_im", I.imag()},
                {"I_abs", std::abs(I)},
                {"residuals",
                 {{"closed_form", id.closed_form_residual},
                  {"contiguity", id.contiguity_residual},
                  {"shifted_form", id.shifted_form_residual},
                  {"beta", id.beta_residual},
                  {"reflection", id.reflection_residual}}},
                {"identities_pass", pass}});
      } else {
        out << "j = " << cli::fmt_double(rig_j) << "\n"
            << "|I| = " << cli::fmt_double(std::abs(I)) << "\n"
            << "identities: " << (pass ? "pass" : "FAIL") << "\n";
      }
      return pass ? kExitOk : kExitVerifyFailed;
    } else if (cmd == verify_cmd) {
      VerifyOptions o;
      o.max_length = cfg.max_length;
      o.max_flow = cfg.max_flow;
      o.catalog_bound = cfg.catalog_bound;
      o.hmax = cfg.hmax;
      o.jmin = cfg.jmin;
      o.jmax = cfg.jmax;
      o.threads = threads;
      if (o.max_length < 1 || o.max_flow < 0 || o.catalog_bound < 1)
        throw ValidationError("pool sizes must be positive");
      if (suites.empty()) suites = suite_names();
      const std::size_t pool = module_pool(o.max_length, o.max_flow).size();
      bool all_ok = true;
      json jsuites = json::array();
      if (!p.json_mode()) out << "pool: " << pool << " modules, " << pool * pool * pool << " triples\n";
      for (const auto& name : suites) {
        const SuiteReport r = run_suite(name, o);
        all_ok = all_ok && r.ok();
        json jchecks = json::array();
        if (!p.json_mode()) out << "suite " << r.suite << "\n";
        for (const auto& c : r.checks) {
          jchecks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures},
                             {"first_failure", c.first_failure}});
          if (!p.json_mode()) {
            out << "  " << std::left << std::setw(28) << c.name << std::right << std::setw(10) << c.cases
                << " cases  " << (c.ok() ? "ok" : "FAIL") << "\n";
            if (!c.ok()) out << "    " << c.failures << " failures, first: " << c.first_failure << "\n";
          }
        }
        jsuites.push_back({{"suite", r.suite}, {"pass", r.ok()}, {"checks", jchecks}});
      }
      if (p.json_mode()) p.emit({{"pool_size", pool}, {"suites", jsuites}, {"pass", all_ok}});
      else out << "verify: " << (all_ok ? "PASS" : "FAIL") << "\n";
      return all_ok ? kExitOk : kExitVerifyFailed;
    } else if (cmd == catalog_cmd) {
      if (cfg.catalog_bound < 1) throw ValidationError("catalog bound must be positive");
      const auto cat = sequence_catalog(cfg.catalog_bound);
      if (p.json_mode()) {
        json seqs = json::array();
        for (const auto& s : cat)
          seqs.push_back({{"name", s.name}, {"family", s.family}, {"sub", s.sub.str()},
                          {"middle", s.middle.str()}, {"quotient", s.quotient.str()}});
        p.emit({{"bound", cfg.catalog_bound}, {"sequences", seqs}});
      } else {
        for (const auto& s : cat)
          out << s.name << ": 0 -> " << s.sub.str() << " -> " << s.middle.str() << " -> " << s.quotient.str()
              << " -> 0\n";
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}

}  // namespace ghostkit
