#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cpoly {

// Exact cover by dancing links (Algorithm X), branching on the item with the
// fewest remaining options.
class ExactCover {
 public:
  enum class Status { Found, NoSolution, BudgetExhausted };

  struct Result {
    Status status = Status::NoSolution;
    std::vector<std::size_t> options;  // chosen option ids when Found
    std::uint64_t nodes = 0;           // search-tree nodes visited
  };

  explicit ExactCover(std::size_t items);

  std::size_t item_count() const { return items_; }
  std::size_t option_count() const { return option_count_; }

  // Items must be distinct and < item_count(). Returns the option id.
  std::size_t add_option(std::span<const std::size_t> items);

  // First solution in search order, or proof of none. The instance is left
  // unchanged.
  Result solve(std::uint64_t node_budget);

  // Calls visit for every solution; stops early when visit returns false.
  // Returns the number of solutions visited.
  std::uint64_t for_each_solution(const std::function<bool(const std::vector<std::size_t>&)>& visit);

 private:
  struct Node {
    std::size_t left, right, up, down, column, option;
  };

  void cover(std::size_t col);
  void uncover(std::size_t col);
  std::size_t choose_column() const;
  bool search(std::uint64_t budget, bool& exhausted,
              const std::function<bool(const std::vector<std::size_t>&)>& visit);

  std::size_t items_;
  std::size_t option_count_ = 0;
  std::vector<Node> nodes_;        // 0 = root, 1..items = column headers
  std::vector<std::size_t> size_;  // per column header
  std::vector<std::size_t> partial_;
  std::uint64_t visited_ = 0;
  std::uint64_t solutions_ = 0;
};

}  // namespace cpoly
