#include "pinloop/gamegrundy.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "pinloop/error.hpp"

namespace pinloop {

std::vector<RegionSet> legal_moves(const MobidiscFormula& f, const RegionSet& pins) {
  if (!verify_pinning(f, pins)) fail(ErrorCode::StateNotPinning, "state does not pin every clause");
  std::vector<RegionSet> moves;
  for (std::size_t i = 0; i < pins.size(); ++i) {
    RegionSet next = pins;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
    if (verify_pinning(f, next)) moves.push_back(std::move(next));
  }
  return moves;
}

namespace {

class GrundySearch {
 public:
  explicit GrundySearch(const MobidiscFormula& f) : regions_(static_cast<int>(f.variables.size())) {
    for (const auto& clause : f.clauses) {
      std::uint32_t mask = 0;
      for (RegionId r : clause) {
        auto it = std::lower_bound(f.variables.begin(), f.variables.end(), r);
        if (it == f.variables.end() || *it != r) {
          fail(ErrorCode::UnknownRegionId, "clause names region " + std::to_string(r));
        }
        mask |= 1u << (it - f.variables.begin());
      }
      clauses_.push_back(mask);
    }
    memo_.assign(std::size_t{1} << regions_, -1);
  }

  bool pinning(std::uint32_t state) const {
    for (std::uint32_t c : clauses_) {
      if ((c & state) == 0) return false;
    }
    return true;
  }

  int value(std::uint32_t state) {
    if (memo_[state] >= 0) return memo_[state];
    if (!pinning(state)) fail(ErrorCode::StateNotPinning, "search reached a non-pinning state");
    // Grundy values are bounded by the number of options, at most 20.
    std::uint32_t seen = 0;
    for (int r = 0; r < regions_; ++r) {
      const std::uint32_t bit = 1u << r;
      if (!(state & bit) || !pinning(state & ~bit)) continue;
      seen |= 1u << value(state & ~bit);
    }
    int g = 0;
    while (seen & (1u << g)) ++g;
    memo_[state] = static_cast<std::int8_t>(g);
    return g;
  }

  int regions() const { return regions_; }

 private:
  int regions_;
  std::vector<std::uint32_t> clauses_;
  std::vector<std::int8_t> memo_;
};

}  // namespace

GrundyReport grundy(const MobidiscFormula& f, int max_regions) {
  const int r = static_cast<int>(f.variables.size());
  if (r > max_regions || r > 24) {
    fail(ErrorCode::ResourceBudgetExceeded,
         std::to_string(r) + " regions exceed the game bound of " + std::to_string(max_regions));
  }
  GrundySearch search(f);
  const std::uint32_t start = r == 0 ? 0u : (r == 32 ? ~0u : (1u << r) - 1u);
  GrundyReport report;
  report.grundy = search.value(start);
  report.first_player_wins = report.grundy != 0;
  if (report.first_player_wins) {
    for (int i = 0; i < r; ++i) {
      const std::uint32_t next = start & ~(1u << i);
      if (search.pinning(next) && search.value(next) == 0) {
        report.optimal_move = f.variables[i];
        break;
      }
    }
  }
  return report;
}

}  // namespace pinloop
