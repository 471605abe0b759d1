#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ybcube/presentation.hpp"

namespace ybcube {

// Abelianized relation matrix: rows = relators, cols = generators, entry
// (r, g) = signed count of generator g in relator r.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> entries;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}
  mpz_class& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
};

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank x Z/d1 x ... x Z/dk with 1 < d1 | d2 | ... | dk.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<mpz_class> factors;

  std::string to_string() const;
  mpz_class torsion_order() const;
  bool operator==(const AbelianGroup&) const = default;
};

// Inverse pairs are identified into one column (inverse letters count -1),
// which makes the explicit x x^-1 = 1 relations vacuous; the all-letters
// convention is kept in the tests as an oracle.
IntegerMatrix abelianize(const Presentation& pres);

// Invariant factors and free rank of the integer cokernel, by elimination
// with minimal-absolute-value pivots; exact arithmetic throughout.
AbelianGroup smith_normal_form(const IntegerMatrix& m);

AbelianGroup first_homology(const Presentation& pres);

}  // namespace ybcube
