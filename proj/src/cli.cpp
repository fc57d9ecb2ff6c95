#include "fmq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fmq/batch.hpp"
#include "fmq/catalog.hpp"
#include "fmq/descent.hpp"
#include "fmq/isometry.hpp"
#include "fmq/reproduce.hpp"

namespace fmq {

namespace {

class Output {
 public:
  Output(std::ostream& os, bool records) : os_(os), records_(records) {}

  // Bare value in plain mode.
  void scalar(const std::string& key, const std::string& value) {
    if (records_) os_ << key << '\t' << value << '\n';
    else os_ << value << '\n';
  }
  void field(const std::string& key, const std::string& value) {
    if (records_) os_ << key << '\t' << value << '\n';
    else os_ << key << ": " << value << '\n';
  }
  void line(const std::string& plain, const std::string& key, const std::string& value) {
    if (records_) os_ << key << '\t' << value << '\n';
    else os_ << plain << '\n';
  }

 private:
  std::ostream& os_;
  bool records_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

struct Context {
  Catalog catalog;
  bool strict = false;
  bool negative = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

// "r,c1,...,ck;ch2"
ChernCharacter parse_class_literal(const std::string& text) {
  const auto parts = split(text, ';');
  if (parts.size() != 2) throw InputError("class literal must look like 'r,c1,...,ck;ch2': " + text);
  const auto ints = split(parts[0], ',');
  if (ints.empty() || ints[0].empty()) throw InputError("class literal is missing the rank: " + text);
  ChernCharacter e{parse_int(ints[0]), {}, parse_rat(parts[1])};
  for (std::size_t i = 1; i < ints.size(); ++i) e.c.push_back(parse_int(ints[i]));
  return e;
}

ChernCharacter resolve_class(const Context& ctx, const NumericalSurface& S, const std::string& arg) {
  ChernCharacter e;
  if (arg.find(';') != std::string::npos) {
    e = parse_class_literal(arg);
  } else {
    const NamedVector& v = ctx.catalog.vector(arg);
    if (v.surface != S.name())
      throw InputError("vector " + arg + " lives on " + v.surface + ", not on " + S.name());
    e = v.ch;
  }
  require_integral_class(S, e);
  return e;
}

MukaiVector resolve_mukai(const Context& ctx, const NumericalSurface& S, const std::string& arg) {
  if (arg.find(';') == std::string::npos) return mukai_vector(S, resolve_class(ctx, S, arg));
  const ChernCharacter raw = parse_class_literal(arg);
  MukaiVector v{raw.r, raw.c, raw.ch2};
  if (v.c.size() != S.num_rank()) throw InputError("Mukai vector does not live on " + S.name());
  return v;
}

void print_matrix_rows(Output& out, const std::string& key, const RatMat& m) {
  out.field(key, to_string(m));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out_stream, std::ostream& err) {
  CLI::App app{"Numerical Fourier-Mukai toolkit for surfaces with torsion canonical class", "fmq"};
  app.fallthrough();
  app.require_subcommand(1);

  std::vector<std::string> defs_files;
  bool records = false, strict = false, allow_invalid = false;
  app.add_option("--defs", defs_files, "Definitions file (repeatable)")->check(CLI::ExistingFile);
  app.add_flag("--records", records, "Emit key<TAB>value records");
  app.add_flag("--strict", strict, "Exit 1 on negative mathematical results");
  app.add_flag("--allow-invalid", allow_invalid, "Accept covers that fail validation");

  std::function<void(Context&, Output&)> action;

  // surface show ID
  auto* surface_cmd = app.add_subcommand("surface", "Surface queries")->require_subcommand(1);
  std::string surface_id;
  surface_cmd->add_subcommand("show", "Print a surface")
      ->callback([&] {
        action = [&](Context& ctx, Output& out) {
          const NumericalSurface& S = ctx.catalog.surface(surface_id);
          out.field("name", S.name());
          out.field("num_rank", std::to_string(S.num_rank()));
          out.field("intersection", to_string(S.num().gram()));
          out.field("chi_o", S.chi_o().get_str());
          out.field("canonical_order", std::to_string(S.canonical_order()));
        };
      })
      ->add_option("id", surface_id, "Surface id")
      ->required();

  std::string opt_surface, opt_e, opt_f, opt_v, opt_w, opt_cover, opt_cover_y, opt_cover_x,
      opt_matrix, opt_action, opt_action_y, opt_action_x;
  int opt_m = 1, opt_bound = 2;

  auto* chi_cmd = app.add_subcommand("chi", "Euler pairing chi(E, F)");
  chi_cmd->add_option("--surface", opt_surface)->required();
  chi_cmd->add_option("--e", opt_e, "Class 'r,c...;ch2' or vector id")->required();
  chi_cmd->add_option("--f", opt_f, "Class 'r,c...;ch2' or vector id")->required();
  chi_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const NumericalSurface& S = ctx.catalog.surface(opt_surface);
      out.scalar("chi", euler_pairing(S, resolve_class(ctx, S, opt_e), resolve_class(ctx, S, opt_f))
                            .get_str());
    };
  });

  auto* pairing_cmd = app.add_subcommand("pairing", "Mukai pairing <v, w>");
  pairing_cmd->add_option("--surface", opt_surface)->required();
  pairing_cmd->add_option("--v", opt_v, "Mukai vector 'r,c...;s' or vector id")->required();
  pairing_cmd->add_option("--w", opt_w, "Mukai vector 'r,c...;s' or vector id")->required();
  pairing_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const NumericalSurface& S = ctx.catalog.surface(opt_surface);
      out.scalar("pairing",
                 mukai_pairing(S, resolve_mukai(ctx, S, opt_v), resolve_mukai(ctx, S, opt_w)).get_str());
    };
  });

  auto* mukai_cmd = app.add_subcommand("mukai", "Mukai vector of a class");
  mukai_cmd->add_option("--surface", opt_surface)->required();
  mukai_cmd->add_option("--e", opt_e)->required();
  mukai_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const NumericalSurface& S = ctx.catalog.surface(opt_surface);
      out.scalar("mukai", to_string(mukai_vector(S, resolve_class(ctx, S, opt_e))));
    };
  });

  auto* moduli_cmd = app.add_subcommand("moduli-dim", "Expected moduli dimension 2 - chi(E, E)");
  moduli_cmd->add_option("--surface", opt_surface)->required();
  moduli_cmd->add_option("--e", opt_e)->required();
  moduli_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const NumericalSurface& S = ctx.catalog.surface(opt_surface);
      out.scalar("moduli_dim", moduli_dim_expectation(S, resolve_class(ctx, S, opt_e)).get_str());
    };
  });

  auto* cover_cmd = app.add_subcommand("cover", "Cover queries")->require_subcommand(1);
  std::string cover_id;
  cover_cmd->add_subcommand("validate", "Check the five transfer axioms")
      ->callback([&] {
        action = [&](Context& ctx, Output& out) {
          const ValidationReport report = validate_cover(ctx.catalog.cover(cover_id));
          for (const CheckResult& c : report.checks)
            out.line(std::string(c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.witness, c.name,
                     c.pass ? "PASS" : "FAIL");
          out.field("valid", yes_no(report.ok()));
          ctx.negative = !report.ok();
        };
      })
      ->add_option("id", cover_id, "Cover id")
      ->required();

  auto* push_cmd = app.add_subcommand("push", "Pushforward of a class on the cover");
  push_cmd->add_option("--cover", opt_cover)->required();
  push_cmd->add_option("--e", opt_e)->required();
  push_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const CoverTransfer& t = ctx.catalog.cover(opt_cover);
      out.scalar("push", to_string(pushforward_ch(t, resolve_class(ctx, t.cover(), opt_e))));
    };
  });

  auto* pull_cmd = app.add_subcommand("pull", "Pullback of a class on the base");
  pull_cmd->add_option("--cover", opt_cover)->required();
  pull_cmd->add_option("--e", opt_e)->required();
  pull_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const CoverTransfer& t = ctx.catalog.cover(opt_cover);
      out.scalar("pull", to_string(pullback_ch(t, resolve_class(ctx, t.base(), opt_e))));
    };
  });

  auto* adj_cmd = app.add_subcommand("adjunction", "Compare chi(p^* F, E) with chi(F, p_* E)");
  adj_cmd->add_option("--cover", opt_cover)->required();
  adj_cmd->add_option("--f", opt_f, "Class on the base")->required();
  adj_cmd->add_option("--e", opt_e, "Class on the cover")->required();
  adj_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const CoverTransfer& t = ctx.catalog.cover(opt_cover);
      const AdjunctionCheck a = chi_adjunction_check(t, resolve_class(ctx, t.base(), opt_f),
                                                     resolve_class(ctx, t.cover(), opt_e));
      out.field("lhs", a.lhs.get_str());
      out.field("rhs", a.rhs.get_str());
      out.field("equal", yes_no(a.equal));
      ctx.negative = !a.equal;
    };
  });

  auto add_class_option = [&](CLI::App* cmd) {
    auto* e = cmd->add_option("--e", opt_e, "Class on the cover");
    auto* v = cmd->add_option("--vector", opt_e, "Catalog vector id on the cover");
    e->excludes(v);
  };

  auto* free_cmd = app.add_subcommand("free", "gcd certificate for freeness of the induced action");
  free_cmd->add_option("--cover", opt_cover)->required();
  add_class_option(free_cmd);
  free_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      if (opt_e.empty()) throw InputError("free: one of --e or --vector is required");
      const CoverTransfer& t = ctx.catalog.cover(opt_cover);
      const GcdCertificate cert = freeness_gcd(t, resolve_class(ctx, t.cover(), opt_e));
      for (const auto& [label, v] : cert.values)
        out.line("chi(" + label + ", p_*e) = " + v.get_str(), "value." + label, v.get_str());
      out.field("gcd", cert.gcd.get_str());
      out.field("free", yes_no(cert.free));
      ctx.negative = !cert.free;
    };
  });

  auto* obs_cmd = app.add_subcommand("obstruction", "Divisibility obstruction for an orbit of length m");
  obs_cmd->add_option("--cover", opt_cover)->required();
  add_class_option(obs_cmd);
  obs_cmd->add_option("--m", opt_m, "Orbit length (divides the degree)")->required();
  obs_cmd->add_option("--action", opt_action, "Catalog action on the cover (default trivial)");
  obs_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      if (opt_e.empty()) throw InputError("obstruction: one of --e or --vector is required");
      const CoverTransfer& t = ctx.catalog.cover(opt_cover);
      std::optional<GActionLattice> g;
      if (!opt_action.empty()) g = ctx.catalog.action(opt_action);
      const ObstructionResult r =
          divisibility_obstruction(t, resolve_class(ctx, t.cover(), opt_e), opt_m, g);
      out.field("applicable", yes_no(r.applicable));
      if (!r.applicable) {
        out.field("reason", r.reason);
        ctx.negative = true;
        return;
      }
      out.field("descended", to_string(*r.descended));
      out.field("divisor", r.divisor.get_str());
      out.field("all_divisible", yes_no(r.all_divisible));
    };
  });

  auto add_cover_pair = [&](CLI::App* cmd) {
    cmd->add_option("--cover", opt_cover, "Cover used for both sides");
    cmd->add_option("--cover-y", opt_cover_y, "Cover of the source surface");
    cmd->add_option("--cover-x", opt_cover_x, "Cover of the target surface");
    cmd->add_option("--matrix", opt_matrix, "Extended-lattice matrix '[..;..]'")->required();
  };
  auto cover_pair = [&](const Context& ctx) -> std::pair<const CoverTransfer*, const CoverTransfer*> {
    const std::string y = opt_cover_y.empty() ? opt_cover : opt_cover_y;
    const std::string x = opt_cover_x.empty() ? opt_cover : opt_cover_x;
    if (y.empty() || x.empty()) throw InputError("give --cover or both --cover-y and --cover-x");
    return {&ctx.catalog.cover(y), &ctx.catalog.cover(x)};
  };

  auto* descend_cmd = app.add_subcommand("descend-map", "Descend an isometry of cover lattices");
  add_cover_pair(descend_cmd);
  descend_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const auto [ty, tx] = cover_pair(ctx);
      const LatticeIsometry phi_t(ty->cover(), tx->cover(), parse_matrix(opt_matrix));
      const DescentOutcome d = descend_isometry(phi_t, *ty, *tx);
      out.field("descends", yes_no(d.map.has_value()));
      if (d.map) print_matrix_rows(out, "map", d.map->mat());
      else out.field("witness", d.witness);
      ctx.negative = !d.map;
    };
  });

  auto* lift_cmd = app.add_subcommand("lift-map", "Lift an isometry of base lattices");
  add_cover_pair(lift_cmd);
  lift_cmd->add_option("--bound", opt_bound, "Box bound for free parameters")->check(CLI::Range(0, 16));
  lift_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const auto [ty, tx] = cover_pair(ctx);
      const LatticeIsometry phi(ty->base(), tx->base(), parse_matrix(opt_matrix));
      LiftOptions options;
      options.search_bound = opt_bound;
      const LiftResult r = lift_isometry(phi, *ty, *tx, options);
      out.field("lifts", std::to_string(r.lifts.size()));
      out.field("exhaustive", yes_no(r.exhaustive));
      if (r.family) out.field("family_dim", std::to_string(r.family->directions.size()));
      for (std::size_t i = 0; i < r.lifts.size(); ++i)
        print_matrix_rows(out, "lift." + std::to_string(i + 1), r.lifts[i].mat());
      if (!r.note.empty()) out.field("note", r.note);
      ctx.negative = r.lifts.empty();
    };
  });

  auto* eq_cmd = app.add_subcommand("equivariant", "Find mu with g^* phi = phi mu(g)^*");
  eq_cmd->add_option("--action-y", opt_action_y, "Action on the source")->required();
  eq_cmd->add_option("--action-x", opt_action_x, "Action on the target")->required();
  eq_cmd->add_option("--matrix", opt_matrix)->required();
  eq_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const GActionLattice& ay = ctx.catalog.action(opt_action_y);
      const GActionLattice& ax = ctx.catalog.action(opt_action_x);
      const LatticeIsometry phi(ay.surface(), ax.surface(), parse_matrix(opt_matrix));
      const auto mu = check_equivariant(phi, ay, ax);
      out.field("equivariant", yes_no(mu.has_value()));
      if (mu) {
        std::string s;
        for (std::size_t j = 0; j < mu->size(); ++j)
          s += (j ? "," : "") + std::to_string((*mu)[j]);
        out.field("mu", s);
      }
      ctx.negative = !mu;
    };
  });

  auto* avg_cmd = app.add_subcommand("avg", "Averaging operators")->require_subcommand(1);
  AveragingTrialConfig avg_config;
  bool avg_serial = false;
  auto* verify_cmd = avg_cmd->add_subcommand("verify", "Randomized ker A = im B trials");
  verify_cmd->add_option("--trials", avg_config.trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", avg_config.seed);
  verify_cmd->add_option("--max-order", avg_config.max_order)->check(CLI::Range(1, 64));
  verify_cmd->add_option("--max-dim", avg_config.max_dim)->check(CLI::Range(1, 64));
  verify_cmd->add_flag("--serial", avg_serial, "Use the serial reference driver");
  verify_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const auto trials = avg_serial ? run_averaging_trials_serial(avg_config)
                                     : run_averaging_trials(avg_config);
      std::size_t failures = 0;
      int max_order = 0;
      std::size_t max_dim = 0;
      for (const AveragingTrial& t : trials) {
        max_order = std::max(max_order, t.order);
        max_dim = std::max(max_dim, t.dim);
        if (t.report.holds) continue;
        ++failures;
        out.line("FAIL trial " + std::to_string(t.index) + ": order " + std::to_string(t.order) +
                     ", dim " + std::to_string(t.dim),
                 "failure." + std::to_string(t.index), "FAIL");
      }
      out.field("trials", std::to_string(trials.size()));
      out.field("seed", std::to_string(avg_config.seed));
      out.field("max_order_seen", std::to_string(max_order));
      out.field("max_dim_seen", std::to_string(max_dim));
      out.field("failures", std::to_string(failures));
      ctx.negative = failures != 0;
    };
  });

  auto* repro_cmd = app.add_subcommand("reproduce", "Run a scripted example reproduction");
  std::string repro_id;
  repro_cmd->add_option("id", repro_id, "ex3.5 | ex3.6 | ex5.2 | ex5.3 | mukai-no-descent")->required();
  repro_cmd->callback([&] {
    action = [&](Context& ctx, Output& out) {
      const ReproReport r = reproduce(ctx.catalog, repro_id);
      out.line(r.id + ": " + r.title, "title", r.title);
      for (const ReproCheck& c : r.checks)
        out.line(std::string(c.pass ? "PASS " : "FAIL ") + c.name + " = " + c.computed +
                     " (expected " + c.expected + ")",
                 c.name, c.computed + (c.pass ? "\tPASS" : "\tFAIL"));
      out.field("result", r.ok() ? "PASS" : "FAIL");
      ctx.negative = !r.ok();
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_stream << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out_stream << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run 'fmq --help' for usage\n";
    return 2;
  }
  if (!action) {
    err << "error: no command given\n";
    return 2;
  }

  try {
    Context ctx{builtin_catalog(), strict};
    const LoadOptions load_options{allow_invalid};
    for (const std::string& path : defs_files) {
      std::ifstream in(path);
      if (!in) throw InputError("cannot read " + path);
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        ctx.catalog.load(buf.str(), load_options);
      } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
      }
    }
    Output out(out_stream, records);
    action(ctx, out);
    return ctx.strict && ctx.negative ? 1 : 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace fmq
