#pragma once

// Transcript files: one JSON object per line.
//
//   {"header": {...}, "hash": genesis}
//   {"seq": 0, "author": 1, "round": 0, "step": "key", "opening": 0,
//    "payload": {...}, "prev": genesis, "hash": ...}
//   ...
//   {"final": {"allocation": ..., "rounds": ..., "misbehavior": ...}, "prev": ..., "hash": ...}
//
// Every hash is sha256(prev + "\n" + canonical(body)) in hex, where body is
// the line without its "hash" field; the header hashes with an empty prev.

#include "cakecut/engine.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cakecut {

inline constexpr const char* kTranscriptFormat = "cakecut-transcript/1";

Json make_header(const GroupParams& gp, std::size_t players, std::size_t levels,
                 std::string_view seed);
std::string genesis_hash(const Json& header);

struct Transcript {
  Json header;
  std::string genesis;
  std::vector<BoardEntry> entries;
  Json summary;  // null when the final line is missing
  std::string summary_prev;
  std::string summary_hash;
  std::vector<std::pair<std::size_t, std::string>> unreadable;  // (line number, reason)
};

Json encode(const Allocation& a);
Allocation decode_allocation(const Json& j);
Json encode(const MisbehaviorRecord& r);
Json encode(const RoundOutcome& r);
Json summary_of(const ProtocolMachine& m);

Transcript build_transcript(const Json& header, const BulletinBoard& board,
                            const ProtocolMachine& machine);

void write_transcript(std::ostream& out, const Transcript& t);
std::string write_transcript(const Transcript& t);
/// Never throws on bad content: unparseable lines land in `unreadable`.
Transcript read_transcript(std::istream& in);
Transcript read_transcript_file(const std::string& path);

struct VerifyResult {
  bool ok = false;
  std::vector<MisbehaviorRecord> records;
  std::optional<Allocation> allocation;
  std::vector<RoundOutcome> rounds;
};

/// Re-checks the chain, the sequence numbers, every proof and the auction
/// logic from public data, and compares the replayed outcome to the final
/// line. Records every failure; never stops at the first one.
VerifyResult verify_transcript(const Transcript& t);

}  // namespace cakecut
