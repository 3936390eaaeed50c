#ifndef CAUSALID_JOINT_TABLE_HPP
#define CAUSALID_JOINT_TABLE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace causalid {

/// Exact discrete distribution over named variables. Entries are stored
/// row-major: the first variable varies slowest.
///
/// Invariants: every entry is strictly positive and the entries sum to one
/// within 1e-12. The constructor throws PositivityError otherwise.
class JointTable {
 public:
  JointTable(std::vector<std::string> names, std::vector<std::size_t> cards,
             std::vector<double> probs);

  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::size_t>& cards() const noexcept { return cards_; }
  const std::vector<double>& probs() const noexcept { return probs_; }
  std::size_t num_states() const noexcept { return probs_.size(); }

  /// Probability of a full assignment, one value per variable.
  double at(std::span<const std::size_t> values) const;

  /// Marginal over variables `positions` (strictly increasing), row-major in
  /// that order.
  std::vector<double> marginal(std::span<const std::size_t> positions) const;

  /// The same distribution with its variables listed in `order` (a
  /// permutation of names()).
  JointTable reordered(std::span<const std::string> order) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> cards_;
  std::vector<double> probs_;
};

/// Product of `cards`, throwing StateSpaceError once it exceeds `cap`.
std::size_t checked_state_count(std::span<const std::size_t> cards, std::size_t cap);

/// Advances a mixed-radix counter (last digit fastest). Returns false after
/// the final state, leaving the counter at all zeros.
bool next_assignment(std::span<std::size_t> digits, std::span<const std::size_t> cards);

}  // namespace causalid

#endif  // CAUSALID_JOINT_TABLE_HPP
