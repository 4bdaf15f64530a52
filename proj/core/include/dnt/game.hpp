#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dnt/errors.hpp"

namespace dnt {

enum class Player { row = 1, col = 2 };

struct PayoffPair {
  double u1;
  double u2;
  bool operator==(const PayoffPair&) const = default;
};

/// Two-person non-constant-sum game in strategic form: label lists for both
/// players and a p x q matrix of payoff pairs.
class BimatrixGame {
 public:
  BimatrixGame(std::vector<std::string> row_strategies, std::vector<std::string> col_strategies,
               std::vector<std::vector<PayoffPair>> payoffs);

  std::size_t rows() const { return row_strategies_.size(); }
  std::size_t cols() const { return col_strategies_.size(); }
  const std::vector<std::string>& row_strategies() const { return row_strategies_; }
  const std::vector<std::string>& col_strategies() const { return col_strategies_; }
  const PayoffPair& at(std::size_t i, std::size_t j) const { return payoffs_[i][j]; }
  const std::vector<std::vector<PayoffPair>>& payoffs() const { return payoffs_; }

  /// Payoff of the given player when the row player picks i and the column
  /// player picks j.
  double payoff(Player p, std::size_t i, std::size_t j) const {
    return p == Player::row ? payoffs_[i][j].u1 : payoffs_[i][j].u2;
  }

 private:
  std::vector<std::string> row_strategies_;
  std::vector<std::string> col_strategies_;
  std::vector<std::vector<PayoffPair>> payoffs_;
};

/// A pure strategy profile (row index, column index).
struct EquilibriumCell {
  std::size_t row;
  std::size_t col;
  bool operator==(const EquilibriumCell&) const = default;
};

using EquilibriumSet = std::vector<EquilibriumCell>;

/// All cells where u1 is maximal in its column and u2 maximal in its row,
/// ties included (weak best responses). Sorted row-major; may be empty.
EquilibriumSet pure_nash_equilibria(const BimatrixGame& g);

/// Argmax set of the player's payoff against a fixed opponent strategy.
std::vector<std::size_t> best_responses(const BimatrixGame& g, Player p,
                                        std::size_t opponent_strategy);

struct RankEntry {
  int rank;   // dense rank, 1 = best
  bool tied;  // shares its rank with at least one other strategy
  bool operator==(const RankEntry&) const = default;
};

/// Dense ranks of the player's strategies against each opponent strategy,
/// indexed [opponent strategy][own strategy].
std::vector<std::vector<RankEntry>> strategy_rankings(const BimatrixGame& g, Player p);

/// How often each of the player's strategies is a (possibly tied) best
/// response across all opponent strategies. Indexed by own strategy.
std::vector<int> best_response_frequency(const BimatrixGame& g, Player p);

}  // namespace dnt
