#include "cpoly/designs.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "cpoly/error.hpp"
#include "cpoly/exact_cover.hpp"
#include "cpoly/finite_field.hpp"
#include "cpoly/mub.hpp"
#include "cpoly/parallel.hpp"

namespace cpoly {

namespace {

void require_square_grid(const LatinSquare& l) {
  if (l.grid.size() != l.n) throw InvalidInput("Latin square: expected " + std::to_string(l.n) + " rows");
  for (const auto& row : l.grid)
    if (row.size() != l.n) throw InvalidInput("Latin square: ragged grid");
}

std::string pair_string(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

std::vector<std::vector<std::size_t>> AffinePlane::lines() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& pencil : pencils)
    for (const auto& line : pencil) out.push_back(line);
  return out;
}

bool is_latin(const LatinSquare& l) {
  require_square_grid(l);
  const std::size_t n = l.n;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t a = l.grid[r][c];
      const std::size_t b = l.grid[c][r];
      if (a >= n || b >= n || row_seen[a] || col_seen[b]) return false;
      row_seen[a] = true;
      col_seen[b] = true;
    }
  }
  return true;
}

bool are_orthogonal(const LatinSquare& l, const LatinSquare& m) {
  require_square_grid(l);
  require_square_grid(m);
  if (l.n != m.n) throw InvalidInput("are_orthogonal: orders differ");
  const std::size_t n = l.n;
  std::vector<bool> seen(n * n, false);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t a = l.grid[r][c];
      const std::size_t b = m.grid[r][c];
      if (a >= n || b >= n) return false;
      if (seen[a * n + b]) return false;
      seen[a * n + b] = true;
    }
  return true;
}

MolsSet mols_prime_power(std::size_t q) {
  if (q < 2) throw InvalidDimension("mols_prime_power: q must be >= 2");
  if (q > kMaxFieldOrder) throw SizeCapExceeded("mols_prime_power: q must be <= 512");
  const auto pk = as_prime_power(q);
  if (!pk) throw UnsupportedDimension(factorization_string(q) + " is not a prime power");
  const FieldTables f(std::make_shared<const FieldSpec>(make_field(pk->p, pk->k)));

  MolsSet mols;
  mols.n = q;
  for (std::uint32_t a = 1; a < q; ++a) {
    LatinSquare sq{q, Grid(q, std::vector<std::size_t>(q))};
    for (std::uint32_t r = 0; r < q; ++r) {
      const std::uint32_t ar = f.mul(a, r);
      for (std::uint32_t c = 0; c < q; ++c) sq.grid[r][c] = f.add(ar, c);
    }
    mols.squares.push_back(std::move(sq));
  }
  return mols;
}

AffinePlane mols_to_affine_plane(const MolsSet& mols) {
  const std::size_t n = mols.n;
  if (n < 2) throw InvalidDimension("mols_to_affine_plane: n must be >= 2");
  if (mols.squares.size() != n - 1) {
    throw InvalidInput("mols_to_affine_plane: expected " + std::to_string(n - 1) + " squares, got " +
                       std::to_string(mols.squares.size()));
  }
  for (std::size_t i = 0; i < mols.squares.size(); ++i) {
    if (mols.squares[i].n != n || !is_latin(mols.squares[i])) {
      throw InvalidInput("mols_to_affine_plane: square " + std::to_string(i) + " is not Latin of order " +
                         std::to_string(n));
    }
    for (std::size_t j = i + 1; j < mols.squares.size(); ++j)
      if (!are_orthogonal(mols.squares[i], mols.squares[j])) {
        throw InvalidInput("mols_to_affine_plane: squares " + pair_string(i, j) + " are not orthogonal");
      }
  }

  AffinePlane plane;
  plane.n = n;
  std::vector<std::vector<std::size_t>> rows(n), cols(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      rows[r].push_back(r * n + c);
      cols[c].push_back(r * n + c);
    }
  plane.pencils.push_back(std::move(rows));
  plane.pencils.push_back(std::move(cols));
  for (const auto& sq : mols.squares) {
    std::vector<std::vector<std::size_t>> levels(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) levels[sq.grid[r][c]].push_back(r * n + c);
    plane.pencils.push_back(std::move(levels));
  }
  return plane;
}

PlaneReport verify_affine_plane(const AffinePlane& plane) {
  using V = PlaneReport::Violation;
  PlaneReport report;
  const std::size_t n = plane.n;
  const std::size_t points = n * n;
  auto fail = [&](V v, std::string msg, std::vector<std::size_t> witness) {
    report.pass = false;
    report.violation = v;
    report.message = std::move(msg);
    report.witness = std::move(witness);
    return report;
  };

  const auto lines = plane.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::vector<std::size_t> sorted = lines[i];
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (sorted.size() != n || !distinct || (!sorted.empty() && sorted.back() >= points)) {
      return fail(V::LineSize, "line " + std::to_string(i) + " does not have " + std::to_string(n) +
                                   " distinct points", {i});
    }
  }

  std::vector<std::uint32_t> common(points * points, 0);
  for (const auto& line : lines)
    for (std::size_t a = 0; a < line.size(); ++a)
      for (std::size_t b = a + 1; b < line.size(); ++b) {
        const std::size_t x = std::min(line[a], line[b]);
        const std::size_t y = std::max(line[a], line[b]);
        ++common[x * points + y];
      }
  for (std::size_t x = 0; x < points; ++x)
    for (std::size_t y = x + 1; y < points; ++y)
      if (common[x * points + y] == 0) {
        return fail(V::PairOnNoLine, "point pair on no line: " + pair_string(x, y), {x, y});
      }

  for (std::size_t p = 0; p < plane.pencils.size(); ++p) {
    std::vector<std::uint32_t> hits(points, 0);
    for (const auto& line : plane.pencils[p])
      for (auto pt : line) ++hits[pt];
    for (std::size_t pt = 0; pt < points; ++pt)
      if (hits[pt] != 1) {
        return fail(V::PencilPartition,
                    "pencil " + std::to_string(p) + " does not partition the points: point " +
                        std::to_string(pt) + " covered " + std::to_string(hits[pt]) + " times",
                    {p, pt});
      }
  }

  for (std::size_t x = 0; x < points; ++x)
    for (std::size_t y = x + 1; y < points; ++y)
      if (common[x * points + y] > 1) {
        return fail(V::PairOnManyLines, "point pair on more than one line: " + pair_string(x, y), {x, y});
      }

  bool counts_ok = plane.pencils.size() == n + 1;
  for (const auto& pencil : plane.pencils) counts_ok = counts_ok && pencil.size() == n;
  if (!counts_ok) {
    return fail(V::Counts, "expected " + std::to_string(n + 1) + " pencils of " + std::to_string(n) + " lines",
                {plane.pencils.size()});
  }
  report.pass = true;
  return report;
}

std::vector<Transversal> transversals(const LatinSquare& l) {
  require_square_grid(l);
  const std::size_t n = l.n;
  std::vector<Transversal> out;
  Transversal current(n);
  std::vector<bool> col_used(n, false), sym_used(n, false);
  std::function<void(std::size_t)> extend = [&](std::size_t r) {
    if (r == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t s = l.grid[r][c];
      if (col_used[c] || sym_used[s]) continue;
      col_used[c] = sym_used[s] = true;
      current[r] = c;
      extend(r + 1);
      col_used[c] = sym_used[s] = false;
    }
  };
  extend(0);
  return out;
}

MateResult orthogonal_mate(const LatinSquare& l, std::uint64_t node_budget) {
  if (l.n > kMaxMateOrder) throw SizeCapExceeded("orthogonal_mate: order must be <= 8");
  if (!is_latin(l)) throw InvalidInput("orthogonal_mate: input is not a Latin square");
  const std::size_t n = l.n;
  const auto ts = transversals(l);

  ExactCover cover(n * n);
  std::vector<std::size_t> cells(n);
  for (const auto& t : ts) {
    for (std::size_t r = 0; r < n; ++r) cells[r] = r * n + t[r];
    cover.add_option(cells);
  }
  const auto solved = cover.solve(node_budget);

  MateResult result;
  result.transversal_count = ts.size();
  result.nodes = solved.nodes;
  switch (solved.status) {
    case ExactCover::Status::Found: {
      LatinSquare mate{n, Grid(n, std::vector<std::size_t>(n))};
      for (std::size_t i = 0; i < solved.options.size(); ++i) {
        const auto& t = ts[solved.options[i]];
        for (std::size_t r = 0; r < n; ++r) mate.grid[r][t[r]] = i;
      }
      result.status = MateResult::Status::Found;
      result.mate = std::move(mate);
      break;
    }
    case ExactCover::Status::NoSolution:
      result.status = MateResult::Status::NoneProof;
      break;
    case ExactCover::Status::BudgetExhausted:
      result.status = MateResult::Status::BudgetExhausted;
      break;
  }
  return result;
}

std::uint64_t enumerate_reduced_latin(std::size_t n, const std::function<void(const LatinSquare&)>& visit) {
  if (n < 1) throw InvalidDimension("enumerate_reduced_latin: n must be >= 1");
  if (n > kMaxReducedOrder) throw SizeCapExceeded("enumerate_reduced_latin: n must be <= 6");
  LatinSquare sq{n, Grid(n, std::vector<std::size_t>(n, 0))};
  std::vector<std::uint32_t> row_mask(n, 0), col_mask(n, 0);
  auto place = [&](std::size_t r, std::size_t c, std::size_t s) {
    sq.grid[r][c] = s;
    row_mask[r] |= 1u << s;
    col_mask[c] |= 1u << s;
  };
  for (std::size_t c = 0; c < n; ++c) place(0, c, c);
  for (std::size_t r = 1; r < n; ++r) place(r, 0, r);

  std::uint64_t count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == n * n) {
      ++count;
      visit(sq);
      return;
    }
    const std::size_t r = cell / n;
    const std::size_t c = cell % n;
    if (r == 0 || c == 0) {
      fill(cell + 1);
      return;
    }
    const std::uint32_t used = row_mask[r] | col_mask[c];
    for (std::size_t s = 0; s < n; ++s) {
      if (used & (1u << s)) continue;
      place(r, c, s);
      fill(cell + 1);
      row_mask[r] &= ~(1u << s);
      col_mask[c] &= ~(1u << s);
    }
  };
  fill(0);
  return count;
}

std::vector<LatinSquare> reduced_latin_squares(std::size_t n) {
  std::vector<LatinSquare> out;
  enumerate_reduced_latin(n, [&](const LatinSquare& sq) { out.push_back(sq); });
  return out;
}

bool is_sum_of_two_squares(std::size_t n) {
  for (std::size_t a = 0; a * a <= n; ++a) {
    const std::size_t rest = n - a * a;
    std::size_t b = 0;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) return true;
  }
  return false;
}

bool bruck_ryser_excludes(std::size_t n) {
  if (n < 2) throw InvalidDimension("bruck_ryser_excludes: n must be >= 2");
  const std::size_t residue = n % 4;
  return (residue == 1 || residue == 2) && !is_sum_of_two_squares(n);
}

SurveyCertificate mate_survey(std::size_t n, unsigned threads, std::uint64_t node_budget) {
  const auto squares = reduced_latin_squares(n);
  SurveyCertificate cert;
  cert.n = n;
  cert.reduced_squares = squares.size();
  cert.entries.resize(squares.size());
  parallel_chunks(squares.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto r = orthogonal_mate(squares[i], node_budget);
      cert.entries[i] = SurveyEntry{i, r.transversal_count, r.nodes, r.status};
    }
  });
  for (const auto& e : cert.entries) {
    cert.total_nodes += e.nodes;
    if (e.status == MateResult::Status::Found) ++cert.mates_found;
    if (e.status == MateResult::Status::BudgetExhausted) ++cert.budget_exhausted;
  }
  return cert;
}

}  // namespace cpoly
