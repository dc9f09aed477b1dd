#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace rspec {

using IntCol = std::vector<mpz_class>;

/// Column Hermite form of an integer lattice spanned by columns.
///
/// `basis` holds the nonzero echelon columns; column t has its pivot at
/// `pivot_rows[t]` (strictly increasing), the pivot is positive, and entries
/// of earlier columns in that row lie in [0, pivot). This form is unique for
/// the lattice. `kernel` holds a basis of the integer relations among the
/// input columns when requested.
struct HermiteForm {
  std::size_t rows = 0;
  std::vector<IntCol> basis;
  std::vector<std::size_t> pivot_rows;
  std::vector<IntCol> kernel;

  bool contains(IntCol v) const;
  /// Coordinates of v in `basis`; empty optional-like flag via return bool.
  bool solve(IntCol v, IntCol& coords) const;
};

HermiteForm hermite_form(std::vector<IntCol> cols, std::size_t rows, bool want_kernel);

/// Extended gcd: g = s*a + t*b, g >= 0.
void xgcd(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& s, mpz_class& t);

}  // namespace rspec
