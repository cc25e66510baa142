// charlab CLI: analyze, check, and sweep over the shared-library C API.
//
// Exit codes: 0 = all verdicts hold (or profile emitted), 1 = some verdict is
// false (a counterexample), 2 = input error.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "charlab/charlab.h"

namespace {

struct CommonArgs {
  unsigned p = 3;
  std::string format = "text";
  std::string cache_dir;
  bool timing = false;
};

charlab_options make_options(const CommonArgs& args) {
  charlab_options opt{};
  opt.enumeration_bound = 0;
  opt.cache_dir = args.cache_dir.empty() ? nullptr : args.cache_dir.c_str();
  opt.timing = args.timing ? 1 : 0;
  return opt;
}

int fail_with(charlab_status status) {
  std::cerr << "charlab: " << charlab_last_error() << "\n";
  switch (status) {
    case CHARLAB_ERR_INPUT:
    case CHARLAB_ERR_DOMAIN:
    case CHARLAB_ERR_CAPACITY:
      return 2;
    default:
      return 2;
  }
}

int emit(charlab_report* report, const std::string& format) {
  char* rendered = nullptr;
  charlab_status st = charlab_report_render(report, format.c_str(), &rendered);
  if (st != CHARLAB_OK) {
    charlab_report_free(report);
    return fail_with(st);
  }
  std::fputs(rendered, stdout);
  charlab_string_free(rendered);
  int rc = charlab_report_any_error(report) ? 2 : (charlab_report_any_failed(report) ? 1 : 0);
  charlab_report_free(report);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charlab — exact character conductors, p-rationality levels, and "
               "principal-block checkers for finite groups"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string group_file;
  std::string checkers;
  std::string scope = "b0";
  std::string corpus;
  std::string primes = "2,3,5";
  unsigned jobs = 1;

  auto add_common = [&](CLI::App* cmd, bool with_p) {
    if (with_p) cmd->add_option("--p", args.p, "prime to analyze at")->required();
    cmd->add_option("--format", args.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--cache-dir", args.cache_dir,
                    "character table cache directory (CHARLAB_CACHE overrides)");
    cmd->add_flag("--timing", args.timing, "fill timing_ms in reports");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "rationality profile of one group");
  analyze->add_option("file", group_file, "group file")->required();
  add_common(analyze, true);

  CLI::App* check = app.add_subcommand("check", "run conjecture checkers on one group");
  check->add_option("file", group_file, "group file")->required();
  add_common(check, true);
  check->add_option("--checker", checkers,
                    "comma-separated checkers: continuity, continuity-all, continuity-b0, "
                    "gap-frattini, gap-ppal, mckay, exponent, audit, all (default all)");
  check->add_option("--scope", scope, "scope for the plain continuity token: all|b0")
      ->check(CLI::IsMember({"all", "b0"}));

  CLI::App* sweep = app.add_subcommand("sweep", "run everything over a corpus manifest");
  sweep->add_option("--corpus", corpus, "corpus manifest (JSON)")->required();
  sweep->add_option("--p", primes, "comma-separated primes (default 2,3,5)");
  sweep->add_option("--jobs", jobs, "worker threads");
  add_common(sweep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  charlab_options opt = make_options(args);

  if (analyze->parsed() || check->parsed()) {
    charlab_group* group = nullptr;
    charlab_status st = charlab_group_from_file(group_file.c_str(), &group);
    if (st != CHARLAB_OK) return fail_with(st);
    charlab_report* report = nullptr;
    if (analyze->parsed())
      st = charlab_analyze(group, args.p, &opt, &report);
    else
      st = charlab_check(group, args.p, checkers.c_str(), scope.c_str(), &opt, &report);
    charlab_group_free(group);
    if (st != CHARLAB_OK) return fail_with(st);
    return emit(report, args.format);
  }

  charlab_report* report = nullptr;
  charlab_status st = charlab_sweep(corpus.c_str(), primes.c_str(), jobs, &opt, &report);
  if (st != CHARLAB_OK) return fail_with(st);
  return emit(report, args.format);
}
