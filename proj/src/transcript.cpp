#include "cakecut/transcript.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cakecut {

Json make_header(const GroupParams& gp, std::size_t players, std::size_t levels,
                 std::string_view seed) {
  std::size_t w = gp.element_hex_width();
  return Json{{"format", kTranscriptFormat},
              {"group",
               {{"name", gp.name}, {"p", to_hex(gp.p, w)}, {"q", to_hex(gp.q, w)}, {"g", to_hex(gp.g, w)}}},
              {"players", players},
              {"levels", levels},
              {"seed_commitment", hex(sha256("cakecut/seed|" + std::string(seed)))}};
}

std::string genesis_hash(const Json& header) { return chain_hash("", header); }

Json encode(const Allocation& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json pieces = Json::array();
    for (const auto& iv : a.pieces[i]) pieces.push_back({to_string(iv.lo), to_string(iv.hi)});
    out.push_back({{"player", i + 1}, {"pieces", std::move(pieces)}, {"withheld", a.withheld[i]}});
  }
  return out;
}

Allocation decode_allocation(const Json& j) {
  if (!j.is_array()) throw CodecError("allocation must be an array");
  Allocation a(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& e = j[i];
    if (!e.is_object() || e.value("player", 0) != static_cast<int>(i + 1)) {
      throw CodecError("allocation entries must list players in order");
    }
    try {
      for (const auto& iv : e.at("pieces")) {
        a.pieces[i].push_back(make_interval(parse_rational(iv.at(0).get<std::string>()),
                                            parse_rational(iv.at(1).get<std::string>())));
      }
      a.withheld[i] = e.at("withheld").get<bool>();
    } catch (const std::exception& ex) {
      throw CodecError(std::string("bad allocation entry: ") + ex.what());
    }
  }
  return a;
}

Json encode(const MisbehaviorRecord& r) {
  return Json{{"player", r.player ? Json(*r.player + 1) : Json(nullptr)},
              {"round", r.round},
              {"step", r.step},
              {"seq", r.seq ? Json(*r.seq) : Json(nullptr)},
              {"check", r.check},
              {"detail", r.detail}};
}

Json encode(const RoundOutcome& r) {
  Json opened = Json::array();
  for (const auto& [q, nonzero] : r.opened) {
    Json o{{"kind", q.kind == IndicatorKind::Tally ? "tally" : "cell"}, {"level", q.level}, {"nonzero", nonzero}};
    if (q.kind == IndicatorKind::Cell) o["player"] = q.player + 1;
    opened.push_back(std::move(o));
  }
  return Json{{"round", r.round},
              {"remaining", r.remaining},
              {"right_end", to_string(r.right_end)},
              {"winner", r.winner + 1},
              {"level", r.level ? Json(*r.level) : Json(nullptr)},
              {"cut", to_string(r.cut)},
              {"opened", std::move(opened)}};
}

Json summary_of(const ProtocolMachine& m) {
  Json rounds = Json::array(), records = Json::array();
  for (const auto& r : m.rounds()) rounds.push_back(encode(r));
  for (const auto& r : m.misbehavior()) records.push_back(encode(r));
  return Json{{"allocation", encode(m.allocation())}, {"rounds", std::move(rounds)},
              {"misbehavior", std::move(records)}};
}

namespace {

Json final_body(const Json& summary, const std::string& prev) {
  return Json{{"final", summary}, {"prev", prev}};
}

}  // namespace

Transcript build_transcript(const Json& header, const BulletinBoard& board,
                            const ProtocolMachine& machine) {
  Transcript t;
  t.header = header;
  t.genesis = board.genesis();
  t.entries = board.entries();
  t.summary = summary_of(machine);
  t.summary_prev = board.head();
  t.summary_hash = chain_hash(t.summary_prev, final_body(t.summary, t.summary_prev));
  return t;
}

void write_transcript(std::ostream& out, const Transcript& t) {
  out << canonical(Json{{"header", t.header}, {"hash", t.genesis}}) << '\n';
  for (const auto& e : t.entries) {
    Json line = entry_body(e);
    line["hash"] = e.hash;
    out << canonical(line) << '\n';
  }
  if (!t.summary.is_null()) {
    Json line = final_body(t.summary, t.summary_prev);
    line["hash"] = t.summary_hash;
    out << canonical(line) << '\n';
  }
}

std::string write_transcript(const Transcript& t) {
  std::ostringstream os;
  write_transcript(os, t);
  return os.str();
}

namespace {

BoardEntry entry_from_line(const Json& j) {
  BoardEntry e;
  e.seq = j.at("seq").get<std::size_t>();
  auto author = j.at("author").get<std::size_t>();
  if (author < 1) throw CodecError("author must be a 1-based player number");
  e.message.author = author - 1;
  e.message.round = j.at("round").get<std::size_t>();
  e.message.step = step_from_string(j.at("step").get<std::string>());
  e.message.opening = j.at("opening").get<std::size_t>();
  e.message.payload = j.at("payload");
  e.prev_hash = j.at("prev").get<std::string>();
  e.hash = j.at("hash").get<std::string>();
  if (j.size() != 8) throw CodecError("unexpected fields in entry");
  return e;
}

}  // namespace

Transcript read_transcript(std::istream& in) {
  Transcript t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      Json j = Json::parse(line);
      if (!j.is_object()) throw CodecError("line is not an object");
      if (j.contains("header")) {
        if (lineno != 1) throw CodecError("header must be the first line");
        t.header = j.at("header");
        t.genesis = j.at("hash").get<std::string>();
      } else if (j.contains("final")) {
        if (!t.summary.is_null()) throw CodecError("second final line");
        t.summary = j.at("final");
        t.summary_prev = j.at("prev").get<std::string>();
        t.summary_hash = j.at("hash").get<std::string>();
      } else {
        if (!t.summary.is_null()) throw CodecError("entry after final line");
        t.entries.push_back(entry_from_line(j));
      }
    } catch (const std::exception& ex) {
      t.unreadable.emplace_back(lineno, ex.what());
    }
  }
  return t;
}

Transcript read_transcript_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open transcript " + path);
  return read_transcript(in);
}

VerifyResult verify_transcript(const Transcript& t) {
  VerifyResult out;
  auto fail = [&](std::optional<PlayerIndex> player, std::size_t round, std::string step,
                  std::optional<std::size_t> seq, std::string check, std::string detail) {
    out.records.push_back({player, round, std::move(step), seq, std::move(check), std::move(detail)});
  };

  for (const auto& [lineno, why] : t.unreadable) {
    fail(std::nullopt, 0, "transcript", std::nullopt, "unreadable-line",
         "line " + std::to_string(lineno) + ": " + why);
  }

  // Header and public parameters.
  std::optional<ProtocolMachine> machine;
  try {
    if (t.header.at("format") != kTranscriptFormat) throw CodecError("unsupported format");
    const Json& g = t.header.at("group");
    GroupParams gp = GroupParams::named(g.at("name").get<std::string>());
    if (make_header(gp, t.header.at("players").get<std::size_t>(), t.header.at("levels").get<std::size_t>(), "")
            .at("group") != g) {
      throw CodecError("group parameters do not match the named group");
    }
    machine.emplace(gp, t.header.at("players").get<std::size_t>(), t.header.at("levels").get<std::size_t>());
  } catch (const std::exception& ex) {
    fail(std::nullopt, 0, "header", std::nullopt, "header", ex.what());
  }
  if (!t.header.is_null() && genesis_hash(t.header) != t.genesis) {
    fail(std::nullopt, 0, "header", std::nullopt, "chain-hash", "header hash mismatch");
  }

  // Chain and sequence, linked through the stored hashes so that one altered
  // entry yields one record.
  std::string prev = t.genesis;
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    const BoardEntry& e = t.entries[i];
    const auto& m = e.message;
    std::optional<PlayerIndex> who = m.author;
    if (e.seq != i) {
      fail(who, m.round, to_string(m.step), e.seq, "sequence", "expected seq " + std::to_string(i));
    }
    if (e.prev_hash != prev) fail(who, m.round, to_string(m.step), e.seq, "chain-link", "prev does not match");
    if (chain_hash(e.prev_hash, entry_body(e)) != e.hash) {
      fail(who, m.round, to_string(m.step), e.seq, "chain-hash", "entry hash mismatch");
    }
    prev = e.hash;
  }
  if (t.summary.is_null()) {
    fail(std::nullopt, 0, "final", std::nullopt, "missing-final", "no final line");
  } else {
    if (t.summary_prev != prev) fail(std::nullopt, 0, "final", std::nullopt, "chain-link", "prev does not match");
    if (chain_hash(t.summary_prev, final_body(t.summary, t.summary_prev)) != t.summary_hash) {
      fail(std::nullopt, 0, "final", std::nullopt, "chain-hash", "final hash mismatch");
    }
  }

  // Replay every message through the public state machine.
  if (machine) {
    bool replayed = true;
    try {
      for (const auto& e : t.entries) machine->consume(e);
    } catch (const std::exception& ex) {
      replayed = false;
      fail(std::nullopt, machine->round(), "replay", std::nullopt, "integrity", ex.what());
    }
    for (const auto& r : machine->misbehavior()) out.records.push_back(r);
    if (replayed && !machine->done()) {
      fail(std::nullopt, machine->round(), "replay", std::nullopt, "incomplete",
           "protocol did not finish; still waiting for " + std::to_string(machine->pending().size()) +
               " message(s)");
    }
    if (replayed && machine->done()) {
      out.allocation = machine->allocation();
      out.rounds = machine->rounds();
      if (!t.summary.is_null() && summary_of(*machine) != t.summary) {
        fail(std::nullopt, machine->round(), "final", std::nullopt, "summary-mismatch",
             "final line disagrees with the replayed outcome");
      }
    }
  }

  out.ok = out.records.empty();
  return out;
}

}  // namespace cakecut
