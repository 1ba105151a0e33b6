// cakecut command-line tool.
//
//   cakecut run <scenario> [--out dir]
//   cakecut verify <transcript>
//   cakecut compare <scenario> --protocols a,b,c
//   cakecut attack <scenario> --attacker i
//   cakecut selftest
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include "cakecut/selftest.hpp"
#include "cakecut/simulate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>

using namespace cakecut;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string default_out_dir() {
  const char* env = std::getenv("CAKECUT_OUT_DIR");
  return env && *env ? env : "cakecut-out";
}

void print_allocation(const Allocation& a, const std::vector<Rational>& utilities) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::cout << "    P" << i + 1 << ":";
    for (const auto& iv : a.pieces[i]) std::cout << ' ' << to_string(iv);
    if (i < utilities.size()) {
      std::cout << "  utility " << to_string(utilities[i]) << " (~" << to_decimal(utilities[i], 6) << ")";
    }
    if (a.withheld[i]) std::cout << "  [withheld]";
    std::cout << '\n';
  }
}

void print_protocol(const ProtocolReport& p) {
  const auto& s = p.summary;
  std::cout << s.protocol << "  (" << p.seconds * 1000 << " ms)\n";
  print_allocation(s.allocation, s.utilities);
  std::cout << "    surplus " << to_string(s.surplus) << " (~" << to_decimal(s.surplus, 6) << ")"
            << ", min fairness margin " << to_string(s.min_margin()) << ", cuts " << s.cuts << '\n';
  for (const auto& r : p.misbehavior) std::cout << "    misbehavior: " << to_string(r) << '\n';
  if (p.verification) {
    std::cout << "    transcript: " << p.transcript->entries.size() << " entries, "
              << (p.verification->ok ? "verified" : "REJECTED") << '\n';
  }
}

void print_comparison(const SurplusComparison& c) {
  std::cout << "surplus ordering:";
  for (const auto& name : c.ordering) std::cout << ' ' << name;
  std::cout << '\n';
  for (const auto& d : c.differences) {
    std::cout << "  " << d.first << " - " << d.second << " = " << to_string(d.value) << " (~"
              << to_decimal(d.value, 6) << ")\n";
  }
}

void print_attack(const AttackReport& a, const Profile& p) {
  const auto& r = a.result;
  std::cout << "endriss leak attack by P" << a.attacker + 1 << ":\n"
            << "  honest utility " << to_string(r.honest_utility) << '\n'
            << "  attack utility " << to_string(r.attack_utility) << '\n';
  print_allocation(r.allocation, utilities(p, r.allocation));
  if (a.crypto_leaks.empty()) {
    std::cout << "crypto engine: no losing bid is ever opened; the declarations the attack needs are never public\n";
  } else {
    for (const auto& l : a.crypto_leaks) std::cout << "crypto engine leak: " << l << '\n';
  }
}

int cmd_run(const std::string& path, std::string out_dir) {
  auto s = load_scenario(path);
  auto report = simulate(s);
  for (const auto& p : report.protocols) print_protocol(p);
  if (report.protocols.size() > 1) print_comparison(report.comparison);
  if (report.attack) print_attack(*report.attack, s.profile);
  auto files = write_outputs(report, out_dir);
  std::cout << "report: " << files.report << '\n';
  for (const auto& t : files.transcripts) std::cout << "transcript: " << t << '\n';
  return report.verification_failed() ? kFailed : kOk;
}

int cmd_verify(const std::string& path) {
  auto t = read_transcript_file(path);
  auto v = verify_transcript(t);
  if (v.allocation) {
    std::cout << "replayed allocation:\n";
    print_allocation(*v.allocation, {});
  }
  constexpr std::size_t shown = 20;
  for (std::size_t i = 0; i < v.records.size() && i < shown; ++i) {
    std::cout << "misbehavior: " << to_string(v.records[i]) << '\n';
  }
  if (v.records.size() > shown) std::cout << "... and " << v.records.size() - shown << " more\n";
  std::cout << (v.ok ? "transcript OK" : "transcript REJECTED") << '\n';
  return v.ok ? kOk : kFailed;
}

int cmd_compare(const std::string& path, const std::vector<std::string>& protocols) {
  auto s = load_scenario(path);
  if (!protocols.empty()) {
    for (const auto& p : protocols) {
      const auto& known = known_protocols();
      if (std::find(known.begin(), known.end(), p) == known.end()) {
        std::cerr << "unknown protocol \"" << p << "\"\n";
        return kUsage;
      }
    }
    s.protocols = protocols;
  }
  s.attack.reset();
  auto report = simulate(s);
  for (const auto& p : report.protocols) print_protocol(p);
  print_comparison(report.comparison);
  return report.verification_failed() ? kFailed : kOk;
}

int cmd_attack(const std::string& path, std::size_t attacker) {
  auto s = load_scenario(path);
  if (attacker < 1 || attacker > s.profile.size()) {
    std::cerr << "attacker must be between 1 and " << s.profile.size() << '\n';
    return kUsage;
  }
  auto a = run_attack(s, attacker - 1);
  print_attack(a, s.profile);
  return a.crypto_leaks.empty() ? kOk : kFailed;
}

int cmd_selftest() {
  bool ok = true;
  for (const auto& c : run_selftest()) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.ok && !c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << '\n';
    ok = ok && c.ok;
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple-fair cake cutting: reference protocols and a cryptographic moving-knife engine"};
  app.require_subcommand(1);

  std::string scenario, transcript, out_dir = default_out_dir();
  std::vector<std::string> protocols;
  std::size_t attacker = 0;

  auto* run = app.add_subcommand("run", "Run a scenario, write report and transcripts");
  run->add_option("scenario", scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory (default $CAKECUT_OUT_DIR or ./cakecut-out)");

  auto* verify = app.add_subcommand("verify", "Check a transcript from public data only");
  verify->add_option("transcript", transcript, "Transcript file")->required()->check(CLI::ExistingFile);

  auto* compare = app.add_subcommand("compare", "Compare social surplus across protocols");
  compare->add_option("scenario", scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  compare->add_option("--protocols", protocols, "Comma-separated protocol list")->delimiter(',');

  auto* attack = app.add_subcommand("attack", "Endriss declaration-leak attack");
  attack->add_option("scenario", scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  attack->add_option("--attacker", attacker, "Attacking player (1-based)")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (*run) return cmd_run(scenario, out_dir);
    if (*verify) return cmd_verify(transcript);
    if (*compare) return cmd_compare(scenario, protocols);
    if (*attack) return cmd_attack(scenario, attacker);
    if (*selftest) return cmd_selftest();
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
