#include "mbstar/linear.hpp"

#include <cstddef>

#include "mbstar/errors.hpp"

namespace mbstar {

std::optional<std::vector<Rat>> solve_nonneg_exact(std::vector<std::vector<Rat>> a,
                                                   std::vector<Rat> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw InvalidInputError("matrix/rhs size mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw InvalidInputError("ragged constraint matrix");
  if (rows == 0) return std::vector<Rat>(cols, Rat(0));

  // Tableau [A | I | b] with one artificial per row; minimize the sum of the
  // artificials. b is made nonnegative first so the artificial basis is
  // feasible.
  const std::size_t width = cols + rows + 1;
  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(width, Rat(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? Rat(-a[i][j]) : a[i][j];
    t[i][cols + i] = 1;
    t[i][width - 1] = flip ? Rat(-b[i]) : b[i];
  }

  // Reduced costs after pricing out the artificial basis: obj[j] = -sum_i a_ij
  // for structural columns, 0 for artificials; objective value -sum b.
  std::vector<Rat> obj(width, Rat(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= t[i][j];
  for (std::size_t i = 0; i < rows; ++i) obj[width - 1] -= t[i][width - 1];

  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  for (;;) {
    // Bland: lowest-index structural column with negative reduced cost.
    // Artificials never re-enter once out.
    std::size_t enter = width;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == rows) {
        leave = i;
        continue;
      }
      Rat lhs = t[i][width - 1] * t[leave][enter];
      Rat rhs = t[leave][width - 1] * t[i][enter];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
    }
    if (leave == rows) {
      // Unbounded phase-one objective cannot happen (bounded below by 0);
      // reaching this means the tableau is corrupt.
      throw InvalidInputError("phase-one simplex lost boundedness");
    }

    Rat pivot = t[leave][enter];
    for (std::size_t j = 0; j < width; ++j) t[leave][j] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rat factor = obj[enter];
      for (std::size_t j = 0; j < width; ++j) obj[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  // Feasible iff all artificials were driven to zero.
  if (obj[width - 1] != 0) return std::nullopt;

  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) x[basis[i]] = t[i][width - 1];
  return x;
}

}  // namespace mbstar
