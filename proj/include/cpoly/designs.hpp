#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cpoly {

using Grid = std::vector<std::vector<std::size_t>>;

struct LatinSquare {
  std::size_t n = 0;
  Grid grid;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
};

struct MolsSet {
  std::size_t n = 0;
  std::vector<LatinSquare> squares;
};

// Lines are sorted point-id lists; pencils group parallel lines.
struct AffinePlane {
  std::size_t n = 0;
  std::vector<std::vector<std::vector<std::size_t>>> pencils;

  std::size_t point_count() const { return n * n; }
  std::vector<std::vector<std::size_t>> lines() const;
};

// Exact checks. Both throw InvalidInput on a ragged grid; are_orthogonal also
// on unequal orders.
bool is_latin(const LatinSquare& l);
bool are_orthogonal(const LatinSquare& l, const LatinSquare& m);

// L_a(r, c) = a r + c over GF(q), a over the nonzero elements in canonical
// order. Throws UnsupportedDimension when q is not a prime power.
MolsSet mols_prime_power(std::size_t q);

// Pencils: rows, columns, then the level sets of each square. Point (r, c)
// has id r*n + c.
AffinePlane mols_to_affine_plane(const MolsSet& mols);

struct PlaneReport {
  enum class Violation { None, LineSize, PairOnNoLine, PencilPartition, PairOnManyLines, Counts };

  bool pass = false;
  Violation violation = Violation::None;
  std::string message;
  std::vector<std::size_t> witness;  // offending point or line ids
};

// Checks, in order: line sizes, every point pair on some line, pencils
// partition the points, no pair on two lines, N+1 pencils of N lines.
PlaneReport verify_affine_plane(const AffinePlane& plane);

// Cells (row, col) with row-indexed column choice: transversal[r] = c.
using Transversal = std::vector<std::size_t>;

std::vector<Transversal> transversals(const LatinSquare& l);

struct MateResult {
  enum class Status { Found, NoneProof, BudgetExhausted };

  Status status = Status::NoneProof;
  std::optional<LatinSquare> mate;
  std::size_t transversal_count = 0;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultMateBudget = 1'000'000'000ull;
inline constexpr std::size_t kMaxMateOrder = 8;

// Partitions the cells into n disjoint transversals by exact cover; cells of
// transversal i get symbol i in the mate.
MateResult orthogonal_mate(const LatinSquare& l, std::uint64_t node_budget = kDefaultMateBudget);

inline constexpr std::size_t kMaxReducedOrder = 6;

// Every reduced square (first row and column 0..n-1) exactly once, by
// row-major backtracking. Returns the count.
std::uint64_t enumerate_reduced_latin(std::size_t n, const std::function<void(const LatinSquare&)>& visit);
std::vector<LatinSquare> reduced_latin_squares(std::size_t n);

// True iff n = 1, 2 (mod 4) and n is not a sum of two squares.
bool bruck_ryser_excludes(std::size_t n);
bool is_sum_of_two_squares(std::size_t n);

struct SurveyEntry {
  std::size_t index = 0;
  std::size_t transversal_count = 0;
  std::uint64_t nodes = 0;
  MateResult::Status status = MateResult::Status::NoneProof;
};

struct SurveyCertificate {
  std::size_t n = 0;
  std::size_t reduced_squares = 0;
  std::size_t mates_found = 0;
  std::size_t budget_exhausted = 0;
  std::uint64_t total_nodes = 0;
  std::vector<SurveyEntry> entries;  // by square index
};

// Mate search over every reduced square of order n, split across threads and
// merged by square index.
SurveyCertificate mate_survey(std::size_t n, unsigned threads = 0,
                              std::uint64_t node_budget = kDefaultMateBudget);

}  // namespace cpoly
