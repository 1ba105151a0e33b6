#include "cakecut/analytics.hpp"

#include "cakecut/drbg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cakecut {

std::vector<Rational> received_utilities(const Profile& p, const Allocation& a) {
  if (a.size() != p.size()) throw std::invalid_argument("allocation size does not match profile");
  std::vector<Rational> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = a.withheld[i] ? Rational(0) : measure(p.densities[i], a.pieces[i]);
  }
  return out;
}

Rational social_surplus(const Profile& p, const Allocation& a) {
  Rational total = 0;
  for (const auto& u : received_utilities(p, a)) total += u;
  return total;
}

std::size_t cut_count(const Allocation& a) {
  std::set<Rational> cuts;
  for (const auto& pieces : a.pieces) {
    for (const auto& iv : pieces) {
      for (const auto& x : {iv.lo, iv.hi}) {
        if (x > 0 && x < 1) cuts.insert(x);
      }
    }
  }
  return cuts.size();
}

std::string profile_fingerprint(const Profile& p) {
  std::string text;
  for (const auto& d : p.densities) {
    for (const auto& s : d.segments()) text += to_string(s.right) + ":" + to_string(s.value) + ",";
    text += ";";
  }
  return hex(sha256(text)).substr(0, 16);
}

Rational ProtocolSummary::min_margin() const {
  if (margins.empty()) return 0;
  return *std::min_element(margins.begin(), margins.end());
}

ProtocolSummary summarize(const Profile& p, std::string protocol, const Allocation& a) {
  ProtocolSummary s;
  s.protocol = std::move(protocol);
  s.profile = profile_fingerprint(p);
  s.allocation = a;
  s.utilities = received_utilities(p, a);
  Rational share(1, p.size());
  for (const auto& u : s.utilities) {
    s.surplus += u;
    s.margins.push_back(u - share);
  }
  s.cuts = cut_count(a);
  return s;
}

SurplusComparison compare_surplus(const std::vector<ProtocolSummary>& summaries) {
  SurplusComparison out;
  for (const auto& s : summaries) {
    if (s.profile != summaries.front().profile) {
      throw std::invalid_argument("reports are over different profiles");
    }
    out.surplus.emplace_back(s.protocol, s.surplus);
  }
  std::vector<std::size_t> idx(summaries.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](auto a, auto b) { return summaries[a].surplus > summaries[b].surplus; });
  for (auto i : idx) out.ordering.push_back(summaries[i].protocol);
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    for (std::size_t j = i + 1; j < summaries.size(); ++j) {
      out.differences.push_back(
          {summaries[i].protocol, summaries[j].protocol, summaries[i].surplus - summaries[j].surplus});
    }
  }
  return out;
}

}  // namespace cakecut
