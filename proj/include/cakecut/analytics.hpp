#pragma once

// Utilities, social surplus and fairness margins, always recomputed from an
// allocation with exact arithmetic.

#include "cakecut/refproto.hpp"

#include <string>
#include <vector>

namespace cakecut {

/// Utility each player actually receives: zero for a withheld piece.
std::vector<Rational> received_utilities(const Profile& p, const Allocation& a);
Rational social_surplus(const Profile& p, const Allocation& a);
/// Number of distinct cut points strictly inside (0,1).
std::size_t cut_count(const Allocation& a);
/// Identifies a profile by its exact densities.
std::string profile_fingerprint(const Profile& p);

struct ProtocolSummary {
  std::string protocol;
  std::string profile;  // fingerprint
  Allocation allocation;
  std::vector<Rational> utilities;
  Rational surplus;
  std::vector<Rational> margins;  // utility - 1/n
  std::size_t cuts = 0;

  Rational min_margin() const;
  bool simple_fair() const { return min_margin() >= 0; }
};

ProtocolSummary summarize(const Profile& p, std::string protocol, const Allocation& a);

struct SurplusDifference {
  std::string first;
  std::string second;
  Rational value;  // surplus(first) - surplus(second)
};

struct SurplusComparison {
  std::vector<std::pair<std::string, Rational>> surplus;
  std::vector<std::string> ordering;  // descending surplus, stable on ties
  std::vector<SurplusDifference> differences;  // every pair, in input order
};

/// Throws std::invalid_argument when the summaries were computed on different profiles.
SurplusComparison compare_surplus(const std::vector<ProtocolSummary>& summaries);

}  // namespace cakecut
