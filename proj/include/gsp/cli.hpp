#ifndef GSP_CLI_HPP
#define GSP_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsp/git_locus.hpp"
#include "gsp/pgl2_oracle.hpp"
#include "gsp/pieces.hpp"
#include "gsp/quotient_strata.hpp"
#include "gsp/report.hpp"
#include "gsp/rootsys.hpp"
#include "gsp/verify.hpp"
#include "gsp/weyl.hpp"

namespace gsp::cli {

/// Environment variable overriding the group-size guard.
inline constexpr const char* kGuardEnv = "GSP_GROUP_GUARD";

enum ExitCode : int { kOk = 0, kUsage = 1, kCheckFailed = 2 };

struct RunConfig {
  std::string type_spec;
  std::string auto_spec = "id";
  std::string weight;
  std::string format = "json";
  std::string piece;
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  std::optional<std::uint64_t> guard;
};

namespace detail {

inline std::uint64_t effective_guard(const RunConfig& cfg) {
  if (cfg.guard) return *cfg.guard;
  if (const char* env = std::getenv(kGuardEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string(kGuardEnv) + " is not a number");
    }
  }
  return kDefaultGroupGuard;
}

inline PieceSet context(const RunConfig& cfg) {
  const std::uint64_t guard = effective_guard(cfg);
  RootSystem rs = build_root_system(cfg.type_spec, BuildOptions{guard});
  const DiagramAutomorphism sigma = parse_automorphism(rs, cfg.auto_spec);
  return PieceSet(generate_group(std::move(rs), guard), sigma);
}

inline void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw InvalidArgument("format '" + cfg.format + "' is not available for this command");
}

inline void emit(std::ostream& out, const report::Json& j) { out << j.dump(2) << "\n"; }

inline int checks_exit(const std::vector<CheckResult>& checks) {
  return verify::all_pass(checks) ? kOk : kCheckFailed;
}

}  // namespace detail

/// Runs one CLI invocation. Exit 0 on success, 2 when a check fails, 1 on a
/// usage or validation error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"G-stable piece combinatorics of wonderful compactifications"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_context = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--type", cfg.type_spec, "root system type, e.g. A3 or D4")->required();
    sub->add_option("--auto", cfg.auto_spec, "diagram automorphism: id or 1:3,2:2,3:1");
    sub->add_option("--guard", cfg.guard, "maximum Weyl group order (overrides GSP_GROUP_GUARD)");
    if (with_format)
      sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "table"}));
  };

  auto* pieces = app.add_subcommand("pieces", "list all pieces with their cores");
  add_context(pieces, true);
  auto* closure_cmd = app.add_subcommand("closure", "pieces in the closure of one piece");
  add_context(closure_cmd, true);
  closure_cmd->add_option("--piece", cfg.piece, "piece ID, e.g. J={1};w=s2")->required();
  auto* poset = app.add_subcommand("poset", "cover relations of the closure order");
  add_context(poset, true);
  auto* nilcone = app.add_subcommand("nilcone", "pieces in the nilpotent cone of a weight");
  add_context(nilcone, true);
  nilcone->add_option("--lambda", cfg.weight, "weight coefficients a1,...,an")->required();
  auto* semistable = app.add_subcommand("semistable", "pieces in the semistable locus");
  add_context(semistable, true);
  auto* common = app.add_subcommand("common-nilcone", "pieces in every nilpotent cone");
  add_context(common, true);
  auto* strata = app.add_subcommand("strata", "strata of the torus closure modulo W (untwisted only)");
  add_context(strata, true);
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  add_context(verify_cmd, true);
  verify_cmd->add_option("--suite", cfg.suite, "all, bruhat, pieces, git, quotient or pgl2")
      ->check(CLI::IsMember({"all", "bruhat", "pieces", "git", "quotient", "pgl2"}));
  verify_cmd->add_option("--samples", cfg.samples, "PGL2 oracle sample count");
  verify_cmd->add_option("--seed", cfg.seed, "PGL2 oracle seed");
  auto* oracle = app.add_subcommand("oracle-pgl2", "numeric PGL2 model checks");
  oracle->add_option("--samples", cfg.samples, "sample count");
  oracle->add_option("--seed", cfg.seed, "seed");
  oracle->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (oracle->parsed()) {
      const auto r = pgl2::run_oracle(cfg.samples, cfg.seed);
      if (cfg.format == "table")
        out << report::checks_table(r.checks);
      else
        detail::emit(out, report::oracle_json(r));
      return detail::checks_exit(r.checks);
    }

    const PieceSet ctx = detail::context(cfg);

    if (pieces->parsed()) {
      detail::require_format(cfg, {"json", "table"});
      if (cfg.format == "table") {
        std::vector<std::size_t> every(ctx.size());
        std::iota(every.begin(), every.end(), 0);
        out << report::pieces_table(ctx, every);
      } else {
        detail::emit(out, report::pieces_json(ctx));
      }
      return kOk;
    }
    if (closure_cmd->parsed()) {
      detail::require_format(cfg, {"json", "table"});
      const std::size_t p = ctx.parse(cfg.piece);
      if (cfg.format == "table")
        out << report::pieces_table(ctx, closure(ctx, p));
      else
        detail::emit(out, report::closure_json(ctx, p));
      return kOk;
    }
    if (poset->parsed()) {
      const ClosurePoset hasse = closure_poset(ctx);
      if (cfg.format == "dot") {
        out << report::poset_dot(ctx, hasse);
      } else if (cfg.format == "table") {
        std::vector<std::vector<std::string>> rows{{"upper", "lower"}};
        for (auto [lo, hi] : hasse.covers) rows.push_back({ctx[hi].id, ctx[lo].id});
        out << report::table(rows);
      } else {
        detail::emit(out, report::poset_json(ctx, hasse));
      }
      return kOk;
    }
    if (nilcone->parsed() || semistable->parsed() || common->parsed()) {
      detail::require_format(cfg, {"json", "table"});
      std::vector<Weight> weights;
      if (nilcone->parsed()) weights.push_back(parse_weight(cfg.weight));
      // Validates the weight before any report work.
      const auto chosen = nilcone->parsed() ? nilcone_pieces(ctx, weights.front())
                          : semistable->parsed() ? semistable_pieces(ctx)
                                                 : common_nilcone(ctx);
      const LocusReport r = locus_report(ctx, ClosureRelation(ctx), weights);
      if (cfg.format == "table")
        out << report::pieces_table(ctx, chosen);
      else
        detail::emit(out, report::locus_json(r));
      return detail::checks_exit(r.checks);
    }
    if (strata->parsed()) {
      detail::require_format(cfg, {"json", "table"});
      if (!ctx.sigma().is_identity()) throw InvalidArgument("strata requires --auto id");
      const auto list = quotient_strata(ctx);
      if (cfg.format == "table") {
        std::vector<std::vector<std::string>> rows{{"J", "cone_count", "piece"}};
        for (const auto& s : list) rows.push_back({s.J.to_string(), std::to_string(s.cone_count), s.matched_piece_id});
        out << report::table(rows);
      } else {
        detail::emit(out, report::strata_json(list));
      }
      return kOk;
    }
    if (verify_cmd->parsed()) {
      detail::require_format(cfg, {"json", "table"});
      const auto suite = verify::parse_suite(cfg.suite);
      const auto checks = verify::run_suite(ctx, suite, {cfg.samples, cfg.seed});
      if (cfg.format == "table") {
        out << report::checks_table(checks);
      } else {
        report::Json j = report::context_header(ctx);
        j["suite"] = cfg.suite;
        j["pass"] = verify::all_pass(checks);
        j["checks"] = report::checks_json(checks);
        detail::emit(out, j);
      }
      return detail::checks_exit(checks);
    }
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gsp::cli

#endif  // GSP_CLI_HPP
