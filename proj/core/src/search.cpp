#include "frankl/search.hpp"

#include <algorithm>
#include <cassert>

#include "frankl/error.hpp"

namespace frankl {

namespace {

void require_weight_function(const Family& fc, const WeightFn& w) {
  if (!is_weight_function_on(w, big_union(fc))) {
    throw Error(ErrorKind::InvalidWeight, "no element of the family's union has positive weight");
  }
}

// Literal recursion over the branching list.
bool ssn_abstract_aux(std::span<const SetCode> list, const Family& current, const Family& fc,
                      const WeightFn& w, SetCode x) {
  const Share current_share = family_share(w, current, x);
  if (list.empty()) return current_share < 0;

  Share bound = current_share;
  for (SetCode a : list) bound += set_share(w, a, x);
  if (bound >= 0) return false;

  const auto tail = list.subspan(1);
  if (ssn_abstract_aux(tail, current, fc, w, x)) return true;
  const SetCode h = list.front();
  if (current.contains(h)) return false;
  return ssn_abstract_aux(tail, insert_close_for(fc, h, current), fc, w, x);
}

}  // namespace

NegativeList negative_share_list(const ShareTable& table) {
  NegativeList out;
  for_each_submask(table.domain(), [&](SetCode a) {
    const Share s = table[a];
    if (s < 0) {
      out.entries.push_back({a, s});
      out.total += s;
    }
  });
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const NegEntry& l, const NegEntry& r) { return l.share < r.share; });
  return out;
}

SearchState::SearchState(const ShareTable& table) : present_(table.capacity(), 0) {}

SearchState::SearchState(const ShareTable& table, const Family& f) : SearchState(table) {
  for (SetCode a : f) {
    if (!contains(a)) {
      members_.push_back(a);
      present_.at(a) = 1;
      share_ += table[a];
    }
  }
}

std::size_t SearchState::insert_close(std::span<const SetCode> fc, SetCode h,
                                      const ShareTable& table) {
  const std::size_t before = members_.size();
  auto add = [&](SetCode a) {
    if (present_[a] == 0) {
      present_[a] = 1;
      members_.push_back(a);
      share_ += table[a];
    }
  };
  add(h);
  for (std::size_t i = 0; i < before; ++i) add(h | members_[i]);
  for (SetCode b : fc) add(h | b);
  return members_.size() - before;
}

void SearchState::rollback(std::size_t size, Share share) {
  for (std::size_t i = size; i < members_.size(); ++i) present_[members_[i]] = 0;
  members_.resize(size);
  share_ = share;
}

SearchState insert_close_shared(const Family& fc, SetCode h, SearchState state,
                                const ShareTable& table) {
  state.insert_close(fc.members(), h, table);
  return state;
}

Verdict run_search(const Family& closed_fc, const ShareTable& table, const NegativeList& list,
                   const SearchOptions& options) {
  enum class Stage : std::uint8_t { Enter, AfterSkip, AfterInclude };
  struct Frame {
    std::size_t index;
    Share remaining;  // sum of shares of list[index..]
    Stage stage;
    std::size_t saved_size;
    Share saved_share;
  };

  Verdict verdict;
  SearchStats& stats = verdict.stats;
  SearchState state(table);
  const std::span<const SetCode> fc(closed_fc.members());
  const auto& entries = list.entries;

  std::vector<Frame> stack;
  stack.reserve(entries.size() + 1);
  stack.push_back({0, list.total, Stage::Enter, 0, 0});

  while (!stack.empty()) {
    Frame& frame = stack.back();
    switch (frame.stage) {
      case Stage::Enter: {
        ++stats.nodes;
        if (options.bound_prune && state.share() + frame.remaining >= 0) {
          ++stats.prunes_bound;
          stack.pop_back();
          break;
        }
        if (frame.index == entries.size()) {
          if (state.share() < 0) {
            verdict.all_nonnegative = false;
            verdict.witness = state.family();
            return verdict;
          }
          stack.pop_back();
          break;
        }
        frame.stage = Stage::AfterSkip;
        const Frame child{frame.index + 1, frame.remaining - entries[frame.index].share,
                          Stage::Enter, 0, 0};
        stack.push_back(child);
        break;
      }
      case Stage::AfterSkip: {
        const SetCode h = entries[frame.index].code;
        if (options.member_prune && state.contains(h)) {
          ++stats.prunes_member;
          stack.pop_back();
          break;
        }
        frame.stage = Stage::AfterInclude;
        frame.saved_size = state.size();
        frame.saved_share = state.share();
        state.insert_close(fc, h, table);
#ifndef NDEBUG
        {
          Share fresh = 0;
          for (SetCode a : state.members()) fresh += table[a];
          assert(fresh == state.share());
        }
#endif
        const Frame child{frame.index + 1, frame.remaining - entries[frame.index].share,
                          Stage::Enter, 0, 0};
        stack.push_back(child);
        break;
      }
      case Stage::AfterInclude:
        state.rollback(frame.saved_size, frame.saved_share);
        stack.pop_back();
        break;
    }
  }
  verdict.all_nonnegative = true;
  return verdict;
}

bool ssn_abstract(const Family& fc, const WeightFn& w) {
  require_weight_function(fc, w);
  const SetCode x = big_union(fc);
  std::vector<SetCode> list;
  for_each_submask(x, [&](SetCode a) {
    if (set_share(w, a, x) < 0) list.push_back(a);
  });
  return ssn_abstract_aux(list, Family{}, closure(fc), w, x);
}

Verdict ssn_refined(const Family& fc, const WeightFn& w, const SearchOptions& options) {
  require_weight_function(fc, w);
  const SetCode x = big_union(fc);
  const ShareTable table(w, x);
  return run_search(closure(fc), table, negative_share_list(table), options);
}

Verdict verify_fc_candidate(const Family& fc, const WeightFn& w) {
  if (fc.empty()) throw Error(ErrorKind::EmptyFamily, "candidate family has no members");
  return ssn_refined(fc, w);
}

}  // namespace frankl
