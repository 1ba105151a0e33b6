#include "cakecut/engine.hpp"

#include "cakecut/transcript.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <stdexcept>

namespace cakecut {

const char* to_string(Backend b) {
  switch (b) {
    case Backend::PlaintextExact: return "plaintext-exact";
    case Backend::PlaintextQuantized: return "plaintext-quantized";
    case Backend::Crypto: return "crypto";
  }
  return "unknown";
}

Backend backend_from_string(std::string_view s) {
  for (auto b : {Backend::PlaintextExact, Backend::PlaintextQuantized, Backend::Crypto}) {
    if (s == to_string(b)) return b;
  }
  throw std::invalid_argument("unknown backend \"" + std::string(s) + "\"");
}

std::size_t RoundGrid::level_of(const Rational& y) const {
  if (right_end <= 0) return 0;
  Rational scaled = y * Rational(levels) / right_end;
  BigInt j = floor(scaled);
  if (j < 0) return 0;
  if (j >= BigInt(levels)) return levels - 1;
  return j.get_ui();
}

Rational RoundGrid::cut_of(std::size_t level) const {
  if (level >= levels) throw std::out_of_range("grid level out of range");
  Rational mid(2 * BigInt(level) + 1, 2 * BigInt(levels));
  mid.canonicalize();
  return mid * right_end;
}

ProtocolState::ProtocolState(std::size_t players)
    : n(players), remaining(players), right_end(1), marked(players), eligible(players, true) {
  if (players < 2) throw std::invalid_argument("the protocol needs at least two players");
}

void ProtocolState::mark(PlayerIndex winner, const Rational& cut) {
  if (finished()) throw std::logic_error("no round left to mark");
  if (winner >= n || !eligible[winner]) throw std::logic_error("winner is not eligible");
  if (cut < 0 || cut > right_end) throw std::logic_error("cut outside remaining cake");
  marked[winner] = Interval{cut, right_end};
  eligible[winner] = false;
  cuts.push_back(cut);
  right_end = cut;
  --remaining;
}

PlayerIndex ProtocolState::last_player() const {
  for (PlayerIndex i = 0; i < n; ++i) {
    if (eligible[i]) return i;
  }
  throw std::logic_error("no eligible player left");
}

Allocation ProtocolState::allocation(const std::vector<bool>& withheld) const {
  if (!finished()) throw std::logic_error("protocol not finished");
  Allocation a(n);
  for (PlayerIndex i = 0; i < n; ++i) {
    if (marked[i]) a.pieces[i].push_back(*marked[i]);
  }
  a.pieces[last_player()].push_back(Interval{Rational(0), right_end});
  for (PlayerIndex i = 0; i < n && i < withheld.size(); ++i) a.withheld[i] = withheld[i];
  return a;
}

std::size_t honest_bid(const Density& d, const ProtocolState& state, std::size_t levels) {
  Rational y = honest_cut(d, state.right_end, state.remaining);
  return RoundGrid{state.right_end, levels}.level_of(y);
}

std::string to_string(const MisbehaviorRecord& r) {
  std::string out = r.player ? "P" + std::to_string(*r.player + 1) : std::string("unattributed");
  out += " round " + std::to_string(r.round) + " step " + r.step;
  if (r.seq) out += " seq " + std::to_string(*r.seq);
  out += ": " + r.check;
  if (!r.detail.empty()) out += " (" + r.detail + ")";
  return out;
}

RoundOutcome run_plaintext_round(ProtocolState& state, const Profile& p, Backend backend,
                                 std::size_t levels) {
  if (backend == Backend::Crypto) throw std::invalid_argument("crypto rounds run on the board");
  if (p.size() != state.n) throw std::invalid_argument("profile size mismatch");
  RoundOutcome out{state.n - state.remaining + 1, state.remaining, state.right_end, 0, {}, 0, {}};
  std::optional<PlayerIndex> best;
  if (backend == Backend::PlaintextExact) {
    Rational best_cut;
    for (PlayerIndex i = 0; i < state.n; ++i) {
      if (!state.eligible[i]) continue;
      Rational y = honest_cut(p.densities[i], state.right_end, state.remaining);
      if (!best || y > best_cut) {
        best = i;
        best_cut = y;
      }
    }
    out.cut = best_cut;
  } else {
    std::size_t best_level = 0;
    for (PlayerIndex i = 0; i < state.n; ++i) {
      if (!state.eligible[i]) continue;
      std::size_t j = honest_bid(p.densities[i], state, levels);
      if (!best || j > best_level) {
        best = i;
        best_level = j;
      }
    }
    out.level = best_level;
    out.cut = RoundGrid{state.right_end, levels}.cut_of(best_level);
  }
  out.winner = *best;
  state.mark(out.winner, out.cut);
  return out;
}

// ---------------------------------------------------------------------------

ProtocolMachine::ProtocolMachine(GroupParams gp, std::size_t players, std::size_t levels)
    : gp_(std::move(gp)), n_(players), levels_(levels), state_(players), key_slots_(players) {
  if (levels < 1) throw std::invalid_argument("grid needs at least one level");
}

std::vector<ProtocolMachine::Demand> ProtocolMachine::pending() const {
  std::vector<Demand> out;
  switch (phase_) {
    case Phase::Keygen:
      for (PlayerIndex i = 0; i < n_; ++i) {
        if (!key_slots_[i]) out.push_back({i, Step::Key, 0, 0});
      }
      break;
    case Phase::Bidding:
      for (PlayerIndex i = 0; i < n_; ++i) {
        if (state_.eligible[i] && !bids_[i]) out.push_back({i, Step::Bid, round_, 0});
      }
      break;
    case Phase::Blinding:
      out.push_back({next_blinder_, Step::Blind, round_, opening_});
      break;
    case Phase::Sharing:
      for (PlayerIndex i = 0; i < n_; ++i) {
        if (!shares_[i]) out.push_back({i, Step::Share, round_, opening_});
      }
      break;
    case Phase::Done:
      break;
  }
  return out;
}

bool ProtocolMachine::demanded(const BoardMessage& m) const {
  Demand d{m.author, m.step, m.round, m.opening};
  auto p = pending();
  return std::find(p.begin(), p.end(), d) != p.end();
}

MisbehaviorRecord ProtocolMachine::reject(const BoardEntry& e, std::string check,
                                          std::string detail) {
  const auto& m = e.message;
  MisbehaviorRecord r;
  if (m.author < n_) r.player = m.author;
  r.round = m.round;
  r.step = to_string(m.step);
  r.seq = e.seq;
  r.check = std::move(check);
  r.detail = std::move(detail);
  records_.push_back(r);
  return r;
}

std::vector<MisbehaviorRecord> ProtocolMachine::consume(const BoardEntry& e) {
  const BoardMessage& m = e.message;
  if (m.author >= n_) return {reject(e, "unknown-author", "no such player")};
  if (phase_ == Phase::Done) return {reject(e, "step-order", "protocol already finished")};
  if (!demanded(m)) return {reject(e, "step-order", "message not expected at this point")};

  const std::string sc = scope(round_);
  try {
    switch (m.step) {
      case Step::Key: {
        auto k = decode_key_share(gp_, m.payload, m.author);
        if (!verify_key_share(gp_, k)) return {reject(e, "dlog-knowledge", "key share proof")};
        key_slots_[m.author] = std::move(k);
        if (std::all_of(key_slots_.begin(), key_slots_.end(), [](auto& s) { return s.has_value(); })) {
          for (auto& s : key_slots_) keys_.push_back(*s);
          pk_ = combine_pk(gp_, keys_);
          round_ = 1;
          start_round();
        }
        break;
      }
      case Step::Bid: {
        auto bv = decode_bid_vector(gp_, m.payload, m.author);
        if (bv.levels() != levels_ || bv.bit_proofs.size() != levels_) {
          return {reject(e, "bid-length", "expected " + std::to_string(levels_) + " cells")};
        }
        for (std::size_t j = 0; j < levels_; ++j) {
          if (!verify_bit(gp_, pk_, bv.cells[j], bv.bit_proofs[j], bid_cell_context(sc, m.author, j))) {
            return {reject(e, "bit-proof", "cell " + std::to_string(j))};
          }
        }
        if (!verify_sum_one(gp_, pk_, bv.cells, bv.sum_proof, bid_sum_context(sc, m.author))) {
          return {reject(e, "sum-one", "cells do not sum to one")};
        }
        bids_[m.author] = std::move(bv);
        bool complete = true;
        for (PlayerIndex i = 0; i < n_; ++i) complete = complete && (!state_.eligible[i] || bids_[i]);
        if (complete) {
          std::vector<BidVector> vs;
          for (PlayerIndex i = 0; i < n_; ++i) {
            if (state_.eligible[i]) vs.push_back(*bids_[i]);
          }
          tallies_ = suffix_tallies(gp_, vs);
          scan_.emplace(levels_, state_.eligible);
          opening_ = 0;
          start_opening();
        }
        break;
      }
      case Step::Blind: {
        auto b = decode_blind(gp_, m.payload, m.author);
        if (!verify_blind(gp_, current_, b, blind_context(sc, opening_))) {
          return {reject(e, "blind-proof", "exponentiation proof or identity rule")};
        }
        current_ = b.value;
        if (++next_blinder_ == n_) {
          phase_ = Phase::Sharing;
          shares_.assign(n_, std::nullopt);
        }
        break;
      }
      case Step::Share: {
        auto s = decode_share(gp_, m.payload, m.author);
        if (!verify_decryption_share(gp_, keys_[m.author].h, current_, s, share_context(sc, opening_))) {
          return {reject(e, "decryption-share", "correct-decryption proof")};
        }
        shares_[m.author] = std::move(s);
        if (std::all_of(shares_.begin(), shares_.end(), [](auto& x) { return x.has_value(); })) {
          finish_opening();
        }
        break;
      }
    }
  } catch (const CodecError& ex) {
    return {reject(e, "malformed-payload", ex.what())};
  } catch (const ProofFailure& ex) {
    return {reject(e, "proof", ex.what())};
  }
  return {};
}

void ProtocolMachine::start_round() {
  phase_ = Phase::Bidding;
  bids_.assign(n_, std::nullopt);
  tallies_.clear();
  scan_.reset();
  rounds_.push_back(RoundOutcome{round_, state_.remaining, state_.right_end, 0, {}, 0, {}});
}

void ProtocolMachine::start_opening() {
  auto q = scan_->next();
  if (!q) throw std::logic_error("auction scan has nothing to open");
  current_ = q->kind == IndicatorKind::Tally ? tallies_[q->level] : bids_[q->player]->cells[q->level];
  next_blinder_ = 0;
  phase_ = Phase::Blinding;
}

void ProtocolMachine::finish_opening() {
  std::vector<DecryptionShare> ss;
  for (auto& s : shares_) ss.push_back(*s);
  Element gm = combine_decrypt(gp_, current_, keys_, ss, share_context(scope(round_), opening_));
  try {
    scan_->record(gm != 1);
  } catch (const AuctionIntegrityError& ex) {
    // Every input was verified, so this cannot be pinned on a player.
    throw std::logic_error(std::string("auction integrity failure: ") + ex.what());
  }
  ++opening_;
  if (!scan_->done()) {
    start_opening();
    return;
  }
  auto& out = rounds_.back();
  out.winner = *scan_->winner();
  out.level = *scan_->max_level();
  out.cut = RoundGrid{state_.right_end, levels_}.cut_of(*out.level);
  out.opened = scan_->history();
  state_.mark(out.winner, out.cut);
  if (state_.finished()) {
    phase_ = Phase::Done;
  } else {
    ++round_;
    start_round();
  }
}

std::vector<bool> ProtocolMachine::offenders() const {
  std::vector<bool> out(n_, false);
  for (const auto& r : records_) {
    if (r.player) out[*r.player] = true;
  }
  return out;
}

Allocation ProtocolMachine::allocation() const { return state_.allocation(offenders()); }

// ---------------------------------------------------------------------------

PlayerAgent::PlayerAgent(GroupParams gp, PlayerIndex index, Density density, std::size_t levels,
                         Drbg rng)
    : gp_(std::move(gp)), index_(index), density_(std::move(density)), levels_(levels),
      rng_(std::move(rng)) {}

BoardMessage PlayerAgent::respond(const ProtocolMachine::Demand& d, const ProtocolMachine& m) {
  if (d.player != index_) throw std::invalid_argument("demand addressed to another player");
  BoardMessage msg{index_, d.round, d.step, d.opening, {}};
  const std::string sc = ProtocolMachine::scope(d.round);
  switch (d.step) {
    case Step::Key: {
      if (!key_) {
        Drbg r = rng_.derive("keygen");
        key_ = keygen_share(gp_, index_, r);
      }
      msg.payload = encode(gp_, key_->pub);
      break;
    }
    case Step::Bid: {
      std::size_t level = honest_bid(density_, m.state(), levels_);
      Drbg r = rng_.derive("bid/" + sc);
      msg.payload = encode(gp_, make_bid_vector(gp_, m.public_key(), index_, level, levels_, r, sc));
      break;
    }
    case Step::Blind: {
      const auto ctx = blind_context(sc, d.opening);
      Drbg r = rng_.derive(player_context(ctx, index_));
      Scalar e = r.nonzero_below(gp_.q);
      msg.payload = encode(gp_, blind_exponentiate(gp_, index_, m.current_indicator(), e, r, ctx));
      break;
    }
    case Step::Share: {
      if (!key_) throw std::logic_error("share demanded before key generation");
      const auto ctx = share_context(sc, d.opening);
      Drbg r = rng_.derive(player_context(ctx, index_));
      msg.payload = encode(gp_, decrypt_share(gp_, m.current_indicator(), *key_, r, ctx));
      break;
    }
  }
  return msg;
}

// ---------------------------------------------------------------------------

namespace {

Json& proof_of(BoardMessage& m) {
  switch (m.step) {
    case Step::Key:
    case Step::Blind:
    case Step::Share: return m.payload.at("proof");
    case Step::Bid: return m.payload.at("bit_proofs").at(0);
  }
  throw std::logic_error("unreachable");
}

Json& element_of(BoardMessage& m) {
  switch (m.step) {
    case Step::Key: return m.payload.at("h");
    case Step::Bid: return m.payload.at("cells").at(0).at(1);
    case Step::Blind: return m.payload.at("value").at(1);
    case Step::Share: return m.payload.at("value");
  }
  throw std::logic_error("unreachable");
}

}  // namespace

BoardMessage tamper_message(const GroupParams& gp, BoardMessage m, std::string_view field) {
  if (field == "proof") {
    Json& z = proof_of(m).at("responses").at(0);
    z = encode_scalar(gp, gp.reduce(decode_scalar(gp, z) + 1));
  } else if (field == "payload") {
    Json& e = element_of(m);
    e = encode_element(gp, gp.mul(decode_element(gp, e), gp.g));
  } else {
    throw std::invalid_argument("unknown tamper field \"" + std::string(field) + "\"");
  }
  return m;
}

namespace {

ProtocolRun run_plaintext(const Profile& p, const EngineConfig& config) {
  ProtocolState state(p.size());
  ProtocolRun run;
  while (!state.finished()) {
    run.rounds.push_back(run_plaintext_round(state, p, config.backend, config.levels));
  }
  run.allocation = state.allocation(std::vector<bool>(p.size(), false));
  return run;
}

using DemandKey = std::tuple<PlayerIndex, int, std::size_t, std::size_t>;

DemandKey key_of(PlayerIndex player, Step step, std::size_t round, std::size_t opening) {
  return {player, static_cast<int>(step), round, opening};
}

ProtocolRun run_crypto(const Profile& p, const EngineConfig& config) {
  const std::size_t n = p.size();
  const GroupParams& gp = config.group;
  Drbg root(config.seed);

  std::vector<PlayerAgent> agents;
  for (PlayerIndex i = 0; i < n; ++i) {
    agents.emplace_back(gp, i, p.densities[i], config.levels, root.derive("P" + std::to_string(i + 1)));
  }

  Json header = make_header(gp, n, config.levels, config.seed);
  BulletinBoard board(genesis_hash(header));
  ProtocolMachine machine(gp, n, config.levels);

  Drbg delivery = root.derive("delivery/" + std::to_string(config.delivery.seed));
  std::vector<BoardMessage> inflight;
  std::set<DemandKey> outstanding;
  ProtocolRun run;

  // Generous cap: each demand is answered once, plus resends after rejections.
  std::size_t budget = 1000000;
  while (!machine.done()) {
    std::vector<ProtocolMachine::Demand> fresh;
    for (const auto& d : machine.pending()) {
      if (outstanding.insert(key_of(d.player, d.step, d.round, d.opening)).second) fresh.push_back(d);
    }
    if (config.parallel_agents && fresh.size() > 1) {
      // Agents are distinct objects, so their computations are independent;
      // results are queued in demand order to keep the transcript identical.
      std::vector<std::future<BoardMessage>> fs;
      for (const auto& d : fresh) {
        fs.push_back(std::async(std::launch::async,
                                [&agents, &machine, d] { return agents[d.player].respond(d, machine); }));
      }
      for (auto& f : fs) inflight.push_back(f.get());
    } else {
      for (const auto& d : fresh) inflight.push_back(agents[d.player].respond(d, machine));
    }
    if (inflight.empty()) throw std::logic_error("protocol stalled with nothing in flight");
    if (--budget == 0) throw std::logic_error("protocol did not terminate");

    std::size_t pick = 0;
    switch (config.delivery.mode) {
      case DeliverySchedule::Mode::Fifo: pick = 0; break;
      case DeliverySchedule::Mode::Reverse: pick = inflight.size() - 1; break;
      case DeliverySchedule::Mode::Random: pick = delivery.below(BigInt(inflight.size())).get_ui(); break;
    }
    BoardMessage msg = std::move(inflight[pick]);
    inflight.erase(inflight.begin() + static_cast<std::ptrdiff_t>(pick));
    outstanding.erase(key_of(msg.author, msg.step, msg.round, msg.opening));

    if (config.tamper && config.tamper->seq == board.entries().size()) {
      msg = tamper_message(gp, std::move(msg), config.tamper->field);
    }
    run.delivery_order.push_back(msg.author);
    machine.consume(board.append(std::move(msg)));
  }

  run.allocation = machine.allocation();
  run.rounds = machine.rounds();
  run.misbehavior = machine.misbehavior();
  run.transcript = std::make_shared<const Transcript>(build_transcript(header, board, machine));
  return run;
}

}  // namespace

ProtocolRun run_protocol(const Profile& p, const EngineConfig& config) {
  if (p.size() < 2) throw std::invalid_argument("the protocol needs at least two players");
  if (config.levels < 1) throw std::invalid_argument("grid needs at least one level");
  if (config.backend == Backend::Crypto) return run_crypto(p, config);
  return run_plaintext(p, config);
}

std::vector<std::string> sealed_bid_violations(const std::vector<RoundOutcome>& rounds) {
  std::vector<std::string> out;
  for (const auto& r : rounds) {
    for (const auto& [q, nonzero] : r.opened) {
      const bool tally = q.kind == IndicatorKind::Tally;
      if (!r.level || (tally ? q.level < *r.level : q.level != *r.level)) {
        out.push_back("round " + std::to_string(r.round) + ": opened " + (tally ? "tally" : "cell of P" + std::to_string(q.player + 1)) +
                      " at level " + std::to_string(q.level));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<StepRule> step_graph() {
  return {
      {Step::Key, {}, false},
      {Step::Bid, {Step::Key, Step::Share}, false},
      {Step::Blind, {Step::Bid, Step::Blind, Step::Share}, false},
      {Step::Share, {Step::Blind}, false},
  };
}

bool step_graph_is_asynchronous(std::size_t players, std::size_t openings) {
  for (const auto& r : step_graph()) {
    if (r.needs_simultaneous_post) return false;
  }
  // One round unrolled: keys, bids, then per opening a blind chain and shares.
  std::vector<std::vector<std::size_t>> preds;
  auto node = [&](std::vector<std::size_t> in) {
    preds.push_back(std::move(in));
    return preds.size() - 1;
  };
  std::vector<std::size_t> keys, bids, gate;
  for (std::size_t i = 0; i < players; ++i) keys.push_back(node({}));
  for (std::size_t i = 0; i < players; ++i) bids.push_back(node(keys));
  gate = bids;
  for (std::size_t o = 0; o < openings; ++o) {
    std::size_t prev = node(gate);
    for (std::size_t i = 1; i < players; ++i) prev = node({prev});
    std::vector<std::size_t> shares;
    for (std::size_t i = 0; i < players; ++i) shares.push_back(node({prev}));
    gate = shares;
  }
  // Acyclic iff every node only depends on strictly earlier nodes, which
  // makes creation order a sequential posting order (Kahn would agree).
  for (std::size_t v = 0; v < preds.size(); ++v) {
    for (auto u : preds[v]) {
      if (u >= v) return false;
    }
  }
  return true;
}

}  // namespace cakecut
