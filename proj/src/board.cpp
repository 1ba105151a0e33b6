#include "cakecut/board.hpp"

namespace cakecut {

const char* to_string(Step s) {
  switch (s) {
    case Step::Key: return "key";
    case Step::Bid: return "bid";
    case Step::Blind: return "blind";
    case Step::Share: return "share";
  }
  return "unknown";
}

Step step_from_string(std::string_view s) {
  for (auto step : {Step::Key, Step::Bid, Step::Blind, Step::Share}) {
    if (s == to_string(step)) return step;
  }
  throw CodecError("unknown step \"" + std::string(s) + "\"");
}

Json entry_body(const BoardEntry& e) {
  const auto& m = e.message;
  return Json{{"seq", e.seq},
              {"author", m.author + 1},
              {"round", m.round},
              {"step", to_string(m.step)},
              {"opening", m.opening},
              {"payload", m.payload},
              {"prev", e.prev_hash}};
}

std::string chain_hash(const std::string& prev_hash, const Json& body) {
  return hex(sha256(prev_hash + "\n" + canonical(body)));
}

BulletinBoard::BulletinBoard(std::string genesis_hash) : genesis_(std::move(genesis_hash)) {}

const std::string& BulletinBoard::head() const noexcept {
  return entries_.empty() ? genesis_ : entries_.back().hash;
}

const BoardEntry& BulletinBoard::append(BoardMessage m) {
  BoardEntry e;
  e.seq = entries_.size();
  e.message = std::move(m);
  e.prev_hash = head();
  e.hash = chain_hash(e.prev_hash, entry_body(e));
  entries_.push_back(std::move(e));
  return entries_.back();
}

}  // namespace cakecut
