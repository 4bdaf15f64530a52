#include "dnt/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dnt {

namespace {

/// Payoffs of player p against opponent strategy `opp`, indexed by own strategy.
std::vector<double> own_payoffs(const BimatrixGame& g, Player p, std::size_t opp) {
  const std::size_t n = p == Player::row ? g.rows() : g.cols();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = p == Player::row ? g.payoff(p, i, opp) : g.payoff(p, opp, i);
  return v;
}

std::size_t opponent_count(const BimatrixGame& g, Player p) {
  return p == Player::row ? g.cols() : g.rows();
}

}  // namespace

BimatrixGame::BimatrixGame(std::vector<std::string> row_strategies,
                           std::vector<std::string> col_strategies,
                           std::vector<std::vector<PayoffPair>> payoffs)
    : row_strategies_(std::move(row_strategies)),
      col_strategies_(std::move(col_strategies)),
      payoffs_(std::move(payoffs)) {
  if (row_strategies_.empty() || col_strategies_.empty())
    throw EmptyInput("a game needs at least one strategy per player");
  if (payoffs_.size() != row_strategies_.size())
    throw LengthMismatch("payoff matrix row count does not match the row strategies");
  for (const auto& row : payoffs_) {
    if (row.size() != col_strategies_.size())
      throw LengthMismatch("payoff matrix column count does not match the column strategies");
    for (const auto& cell : row)
      if (!std::isfinite(cell.u1) || !std::isfinite(cell.u2))
        throw DomainError("payoffs must be finite");
  }
}

EquilibriumSet pure_nash_equilibria(const BimatrixGame& g) {
  // u1 column maxima and u2 row maxima; a cell attaining both satisfies the
  // two weak best-response inequalities.
  std::vector<double> col_max(g.cols(), -std::numeric_limits<double>::infinity());
  std::vector<double> row_max(g.rows(), -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      col_max[j] = std::max(col_max[j], g.at(i, j).u1);
      row_max[i] = std::max(row_max[i], g.at(i, j).u2);
    }
  }
  EquilibriumSet cells;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g.at(i, j).u1 == col_max[j] && g.at(i, j).u2 == row_max[i]) cells.push_back({i, j});
  return cells;
}

std::vector<std::size_t> best_responses(const BimatrixGame& g, Player p,
                                        std::size_t opponent_strategy) {
  if (opponent_strategy >= opponent_count(g, p))
    throw IndexOutOfRange("opponent strategy index out of range");
  const std::vector<double> v = own_payoffs(g, p, opponent_strategy);
  const double best = *std::max_element(v.begin(), v.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == best) out.push_back(i);
  return out;
}

std::vector<std::vector<RankEntry>> strategy_rankings(const BimatrixGame& g, Player p) {
  const std::size_t opponents = opponent_count(g, p);
  std::vector<std::vector<RankEntry>> ranks(opponents);
  for (std::size_t opp = 0; opp < opponents; ++opp) {
    const std::vector<double> v = own_payoffs(g, p, opp);
    std::vector<double> distinct(v);
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    ranks[opp].resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto pos = std::find(distinct.begin(), distinct.end(), v[i]) - distinct.begin();
      const bool tied = std::count(v.begin(), v.end(), v[i]) > 1;
      ranks[opp][i] = {static_cast<int>(pos) + 1, tied};
    }
  }
  return ranks;
}

std::vector<int> best_response_frequency(const BimatrixGame& g, Player p) {
  const std::size_t own = p == Player::row ? g.rows() : g.cols();
  std::vector<int> counts(own, 0);
  for (std::size_t opp = 0; opp < opponent_count(g, p); ++opp)
    for (const std::size_t i : best_responses(g, p, opp)) ++counts[i];
  return counts;
}

}  // namespace dnt
