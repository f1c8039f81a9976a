#pragma once

// SomeShareNegative: search for a union-closed extension of a family with a
// negative family share. A negative answer (all_nonnegative == true)
// certifies the family as an FC-family for the given weights.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frankl/family.hpp"
#include "frankl/weights.hpp"

namespace frankl {

struct NegEntry {
  SetCode code;
  Share share;  // always < 0

  friend bool operator==(const NegEntry&, const NegEntry&) = default;
};

// The sets the search branches on, together with the sum of their shares.
struct NegativeList {
  std::vector<NegEntry> entries;
  Share total = 0;
};

/// Every subset of the table's domain with negative share, most negative
/// first (ties by ascending code).
NegativeList negative_share_list(const ShareTable& table);

// A union-closed family under construction plus its cached family share.
// Membership is a dense bitmap over the share table's slots.
class SearchState {
 public:
  explicit SearchState(const ShareTable& table);
  SearchState(const ShareTable& table, const Family& f);

  const std::vector<SetCode>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  Share share() const noexcept { return share_; }
  bool contains(SetCode a) const noexcept { return a < present_.size() && present_[a] != 0; }
  Family family() const { return Family(members_); }

  /// Adds h, h|A for current members A and h|B for B in fc, skipping sets
  /// already present, and adds their table shares to the cached share.
  /// Returns the number of sets added.
  std::size_t insert_close(std::span<const SetCode> fc, SetCode h, const ShareTable& table);

  /// Drops every member added after the family had `size` members.
  void rollback(std::size_t size, Share share);

 private:
  std::vector<SetCode> members_;
  std::vector<std::uint8_t> present_;
  Share share_ = 0;
};

SearchState insert_close_shared(const Family& fc, SetCode h, SearchState state,
                                const ShareTable& table);

struct SearchOptions {
  bool bound_prune = true;
  bool member_prune = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes_bound = 0;
  std::uint64_t prunes_member = 0;
};

struct Verdict {
  bool all_nonnegative = false;
  // Present iff !all_nonnegative: an extension with negative share.
  std::optional<Family> witness;
  SearchStats stats;
};

/// Runs the table-driven search over an explicit branching list.
/// `closed_fc` must already be union closed.
Verdict run_search(const Family& closed_fc, const ShareTable& table, const NegativeList& list,
                   const SearchOptions& options = {});

/// Reference search: direct recursion over set-semantics families with
/// shares recomputed from `w` at every step. Returns true iff some extension
/// has a negative share. Throws InvalidWeight if w is zero on the union of fc.
bool ssn_abstract(const Family& fc, const WeightFn& w);

/// Optimized search with cached shares and a precomputed share table.
Verdict ssn_refined(const Family& fc, const WeightFn& w, const SearchOptions& options = {});

/// Full certification pipeline. Throws EmptyFamily or InvalidWeight.
Verdict verify_fc_candidate(const Family& fc, const WeightFn& w);

}  // namespace frankl
