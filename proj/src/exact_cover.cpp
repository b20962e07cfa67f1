#include "cpoly/exact_cover.hpp"

#include <limits>

#include "cpoly/error.hpp"

namespace cpoly {

ExactCover::ExactCover(std::size_t items) : items_(items), size_(items + 1, 0) {
  nodes_.resize(items + 1);
  for (std::size_t i = 0; i <= items; ++i) {
    nodes_[i] = Node{i == 0 ? items : i - 1, i == items ? 0 : i + 1, i, i, i, 0};
  }
}

std::size_t ExactCover::add_option(std::span<const std::size_t> items) {
  if (items.empty()) throw InvalidInput("ExactCover: empty option");
  const std::size_t id = option_count_++;
  const std::size_t first = nodes_.size();
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (items[j] >= items_) throw InvalidInput("ExactCover: item out of range");
    const std::size_t col = items[j] + 1;
    const std::size_t idx = nodes_.size();
    const std::size_t left = j == 0 ? idx : idx - 1;
    nodes_.push_back(Node{left, first, nodes_[col].up, col, col, id});
    nodes_[nodes_[col].up].down = idx;
    nodes_[col].up = idx;
    nodes_[left].right = idx;
    nodes_[first].left = idx;
    ++size_[col];
  }
  return id;
}

void ExactCover::cover(std::size_t col) {
  nodes_[nodes_[col].right].left = nodes_[col].left;
  nodes_[nodes_[col].left].right = nodes_[col].right;
  for (std::size_t r = nodes_[col].down; r != col; r = nodes_[r].down)
    for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) {
      nodes_[nodes_[j].down].up = nodes_[j].up;
      nodes_[nodes_[j].up].down = nodes_[j].down;
      --size_[nodes_[j].column];
    }
}

void ExactCover::uncover(std::size_t col) {
  for (std::size_t r = nodes_[col].up; r != col; r = nodes_[r].up)
    for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) {
      ++size_[nodes_[j].column];
      nodes_[nodes_[j].down].up = j;
      nodes_[nodes_[j].up].down = j;
    }
  nodes_[nodes_[col].right].left = col;
  nodes_[nodes_[col].left].right = col;
}

std::size_t ExactCover::choose_column() const {
  std::size_t best = 0;
  std::size_t best_size = std::numeric_limits<std::size_t>::max();
  for (std::size_t c = nodes_[0].right; c != 0; c = nodes_[c].right)
    if (size_[c] < best_size) {
      best = c;
      best_size = size_[c];
      if (best_size == 0) break;
    }
  return best;
}

// Returns false when the caller asked to stop (or the budget ran out).
bool ExactCover::search(std::uint64_t budget, bool& exhausted,
                        const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (++visited_ > budget) {
    exhausted = true;
    return false;
  }
  if (nodes_[0].right == 0) {
    ++solutions_;
    return visit(partial_);
  }
  const std::size_t col = choose_column();
  if (size_[col] == 0) return true;
  cover(col);
  bool keep_going = true;
  for (std::size_t r = nodes_[col].down; r != col && keep_going; r = nodes_[r].down) {
    partial_.push_back(nodes_[r].option);
    for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
    keep_going = search(budget, exhausted, visit);
    for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
    partial_.pop_back();
  }
  uncover(col);
  return keep_going;
}

ExactCover::Result ExactCover::solve(std::uint64_t node_budget) {
  Result result;
  visited_ = 0;
  solutions_ = 0;
  bool exhausted = false;
  search(node_budget, exhausted, [&](const std::vector<std::size_t>& sol) {
    result.options = sol;
    return false;
  });
  result.nodes = visited_;
  if (!result.options.empty() || (solutions_ > 0)) result.status = Status::Found;
  else if (exhausted) result.status = Status::BudgetExhausted;
  else result.status = Status::NoSolution;
  return result;
}

std::uint64_t ExactCover::for_each_solution(const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  visited_ = 0;
  solutions_ = 0;
  bool exhausted = false;
  search(std::numeric_limits<std::uint64_t>::max(), exhausted, visit);
  return solutions_;
}

}  // namespace cpoly
