#include "cakecut/simulate.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

namespace cakecut {

namespace {

Json num(const Rational& v) { return Json{{"exact", to_string(v)}, {"approx", to_decimal(v)}}; }

Json opt_rational(const std::optional<Rational>& v) { return v ? Json(to_string(*v)) : Json(nullptr); }

Json endriss_rounds(const std::vector<RoundTrace>& rounds) {
  Json out = Json::array();
  for (const auto& r : rounds) {
    Json declared = Json::array();
    for (const auto& d : r.declared) declared.push_back(opt_rational(d));
    out.push_back({{"round", r.round},
                   {"remaining", r.remaining},
                   {"right_end", to_string(r.right_end)},
                   {"declared", std::move(declared)},
                   {"winner", r.winner + 1},
                   {"point", to_string(r.point)}});
  }
  return out;
}

Json engine_rounds(const std::vector<RoundOutcome>& rounds) {
  Json out = Json::array();
  for (const auto& r : rounds) {
    Json j = encode(r);
    j.erase("opened");
    if (!r.opened.empty()) j["openings"] = r.opened.size();
    out.push_back(std::move(j));
  }
  return out;
}

ProtocolReport run_one(const Scenario& s, const std::string& protocol) {
  ProtocolReport rep;
  const auto t0 = std::chrono::steady_clock::now();
  Allocation alloc;
  if (protocol == "endriss") {
    auto r = run_endriss(s.profile);
    alloc = r.allocation;
    rep.rounds = endriss_rounds(r.rounds);
  } else if (protocol == "sgall-woeginger") {
    auto r = run_sgall_woeginger(s.profile);
    alloc = r.allocation;
    Json decl = Json::array();
    for (const auto& row : r.declarations) {
      Json jr = Json::array();
      for (const auto& x : row) jr.push_back(to_string(x));
      decl.push_back(std::move(jr));
    }
    rep.rounds = Json{{"declarations", std::move(decl)}};
  } else {
    Backend b = protocol == "plaintext"             ? Backend::PlaintextExact
                : protocol == "plaintext-quantized" ? Backend::PlaintextQuantized
                                                    : Backend::Crypto;
    auto run = run_protocol(s.profile, s.engine_config(b));
    alloc = run.allocation;
    rep.rounds = engine_rounds(run.rounds);
    rep.misbehavior = run.misbehavior;
    if (run.transcript) {
      rep.transcript = run.transcript;
      rep.verification = verify_transcript(*run.transcript);
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.summary = summarize(s.profile, protocol, alloc);
  return rep;
}

}  // namespace

bool Report::verification_failed() const {
  for (const auto& p : protocols) {
    if (!p.misbehavior.empty()) return true;
    if (p.verification && !p.verification->ok) return true;
  }
  return false;
}

AttackReport run_attack(const Scenario& s, PlayerIndex attacker) {
  AttackReport a{attacker, endriss_leak_attack(s.profile, attacker), {}};
  auto run = run_protocol(s.profile, s.engine_config(Backend::Crypto));
  auto v = verify_transcript(*run.transcript);
  a.crypto_leaks = sealed_bid_violations(v.rounds);
  if (!v.ok) a.crypto_leaks.push_back("crypto transcript failed verification");
  return a;
}

Report simulate(const Scenario& s) {
  Report r;
  r.scenario = s.name;
  r.players = s.profile.size();
  r.levels = s.levels;
  r.group = s.group;
  std::vector<ProtocolSummary> summaries;
  for (const auto& p : s.protocols) {
    r.protocols.push_back(run_one(s, p));
    summaries.push_back(r.protocols.back().summary);
  }
  r.comparison = compare_surplus(summaries);
  if (s.attack) r.attack = run_attack(s, s.attack->attacker);
  return r;
}

Json to_json(const AttackReport& a) {
  return Json{{"attacker", a.attacker + 1},
              {"strategy", "endriss-leak"},
              {"honest_utility", num(a.result.honest_utility)},
              {"attack_utility", num(a.result.attack_utility)},
              {"gain", num(a.result.attack_utility - a.result.honest_utility)},
              {"allocation", encode(a.result.allocation)},
              {"rounds", endriss_rounds(a.result.trace.rounds)},
              {"crypto_losing_bid_openings", a.crypto_leaks}};
}

Json to_json(const Report& r) {
  Json protos = Json::array();
  for (const auto& p : r.protocols) {
    const auto& s = p.summary;
    Json utils = Json::array(), margins = Json::array(), records = Json::array();
    for (std::size_t i = 0; i < s.utilities.size(); ++i) {
      Json u = num(s.utilities[i]);
      u["player"] = i + 1;
      utils.push_back(std::move(u));
      margins.push_back(num(s.margins[i]));
    }
    for (const auto& m : p.misbehavior) records.push_back(encode(m));
    Json j{{"protocol", s.protocol},
           {"allocation", encode(s.allocation)},
           {"utilities", std::move(utils)},
           {"surplus", num(s.surplus)},
           {"fairness_margins", std::move(margins)},
           {"simple_fair", s.simple_fair()},
           {"cut_count", s.cuts},
           {"rounds", p.rounds},
           {"misbehavior", std::move(records)}};
    if (p.verification) {
      Json vr = Json::array();
      for (const auto& m : p.verification->records) vr.push_back(encode(m));
      j["transcript"] = Json{{"verified", p.verification->ok},
                             {"entries", p.transcript->entries.size()},
                             {"records", std::move(vr)}};
    }
    protos.push_back(std::move(j));
  }
  Json surplus = Json::array(), diffs = Json::array();
  for (const auto& [name, v] : r.comparison.surplus) surplus.push_back({{"protocol", name}, {"value", num(v)}});
  for (const auto& d : r.comparison.differences) {
    diffs.push_back({{"first", d.first}, {"second", d.second}, {"difference", num(d.value)}});
  }
  Json out{{"scenario", r.scenario},
           {"players", r.players},
           {"levels", r.levels},
           {"group", r.group},
           {"note", "\"approx\" fields are rounded decimal renderings; \"exact\" fields are authoritative"},
           {"protocols", std::move(protos)},
           {"comparison",
            {{"surplus", std::move(surplus)}, {"ordering", r.comparison.ordering}, {"differences", std::move(diffs)}}}};
  if (r.attack) out["attack"] = to_json(*r.attack);
  return out;
}

WrittenFiles write_outputs(const Report& r, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  WrittenFiles files;
  files.report = (fs::path(dir) / (r.scenario + ".report.json")).string();
  {
    std::ofstream out(files.report);
    out << to_json(r).dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write " + files.report);
  }
  for (const auto& p : r.protocols) {
    if (!p.transcript) continue;
    auto path = (fs::path(dir) / (r.scenario + "." + p.summary.protocol + ".transcript.jsonl")).string();
    std::ofstream out(path);
    write_transcript(out, *p.transcript);
    if (!out) throw std::runtime_error("cannot write " + path);
    files.transcripts.push_back(path);
  }
  return files;
}

}  // namespace cakecut
