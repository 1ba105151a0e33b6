#pragma once

// Append-only, hash-chained bulletin board.

#include "cakecut/codec.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cakecut {

enum class Step { Key, Bid, Blind, Share };

const char* to_string(Step s);
Step step_from_string(std::string_view s);

struct BoardMessage {
  std::size_t author = 0;  // zero-based player index
  std::size_t round = 0;   // 0 for key generation
  Step step = Step::Key;
  std::size_t opening = 0; // opening index within the round (blind/share)
  Json payload;

  bool operator==(const BoardMessage&) const = default;
};

struct BoardEntry {
  std::size_t seq = 0;
  BoardMessage message;
  std::string prev_hash;
  std::string hash;
};

/// Serialized form hashed into the chain (everything except `hash`).
Json entry_body(const BoardEntry& e);
std::string chain_hash(const std::string& prev_hash, const Json& body);

class BulletinBoard {
 public:
  explicit BulletinBoard(std::string genesis_hash);

  const BoardEntry& append(BoardMessage m);
  const std::vector<BoardEntry>& entries() const noexcept { return entries_; }
  const std::string& head() const noexcept;
  const std::string& genesis() const noexcept { return genesis_; }

 private:
  std::string genesis_;
  std::vector<BoardEntry> entries_;
};

}  // namespace cakecut
