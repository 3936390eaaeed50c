#include "causalid/joint_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "causalid/error.hpp"

namespace causalid {

std::size_t checked_state_count(std::span<const std::size_t> cards, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t c : cards) {
    if (c == 0) throw ContractError("zero cardinality");
    if (total > cap / c) {
      throw StateSpaceError("state space exceeds the enumeration cap of " + std::to_string(cap));
    }
    total *= c;
  }
  return total;
}

bool next_assignment(std::span<std::size_t> digits, std::span<const std::size_t> cards) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < cards[i]) return true;
    digits[i] = 0;
  }
  return false;
}

JointTable::JointTable(std::vector<std::string> names, std::vector<std::size_t> cards,
                       std::vector<double> probs)
    : names_(std::move(names)), cards_(std::move(cards)), probs_(std::move(probs)) {
  if (names_.size() != cards_.size()) throw ContractError("names and cardinalities differ in length");
  const auto expected = checked_state_count(cards_, std::numeric_limits<std::size_t>::max());
  if (probs_.size() != expected) throw ContractError("probability vector has the wrong length");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p > 0.0)) throw PositivityError("joint table entry is not strictly positive");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw PositivityError("joint table does not sum to one");
}

double JointTable::at(std::span<const std::size_t> values) const {
  if (values.size() != cards_.size()) throw ContractError("assignment length mismatch");
  std::size_t index = 0;
  for (std::size_t i = 0; i < cards_.size(); ++i) {
    if (values[i] >= cards_[i]) throw ContractError("value out of domain");
    index = index * cards_[i] + values[i];
  }
  return probs_[index];
}

std::vector<double> JointTable::marginal(std::span<const std::size_t> positions) const {
  std::vector<std::size_t> out_stride(cards_.size(), 0);
  std::size_t out_size = 1;
  for (std::size_t k = positions.size(); k-- > 0;) {
    const std::size_t p = positions[k];
    if (p >= cards_.size()) throw ContractError("marginal position out of range");
    if (k + 1 < positions.size() && positions[k + 1] <= p) {
      throw ContractError("marginal positions must be strictly increasing");
    }
    out_stride[p] = out_size;
    out_size *= cards_[p];
  }
  std::vector<double> out(out_size, 0.0);
  std::vector<std::size_t> digits(cards_.size(), 0);
  std::size_t out_index = 0;
  for (std::size_t state = 0; state < probs_.size(); ++state) {
    out[out_index] += probs_[state];
    // Odometer step keeping out_index in sync with the digits.
    for (std::size_t i = cards_.size(); i-- > 0;) {
      if (++digits[i] < cards_[i]) {
        out_index += out_stride[i];
        break;
      }
      out_index -= out_stride[i] * (cards_[i] - 1);
      digits[i] = 0;
    }
  }
  return out;
}

JointTable JointTable::reordered(std::span<const std::string> order) const {
  if (order.size() != names_.size()) throw ContractError("reorder needs a permutation of the variables");
  std::vector<std::size_t> source(order.size());
  std::vector<std::size_t> new_cards(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = std::find(names_.begin(), names_.end(), order[i]);
    if (it == names_.end()) throw ContractError("reorder: unknown variable '" + order[i] + "'");
    source[i] = static_cast<std::size_t>(it - names_.begin());
    new_cards[i] = cards_[source[i]];
  }
  std::vector<double> out(probs_.size());
  std::vector<std::size_t> digits(order.size(), 0);
  std::vector<std::size_t> old_values(names_.size(), 0);
  std::size_t index = 0;
  do {
    for (std::size_t i = 0; i < order.size(); ++i) old_values[source[i]] = digits[i];
    out[index++] = at(old_values);
  } while (next_assignment(digits, new_cards));
  return JointTable(std::vector<std::string>(order.begin(), order.end()), std::move(new_cards),
                    std::move(out));
}

}  // namespace causalid
