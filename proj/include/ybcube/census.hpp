#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "ybcube/presentation.hpp"

namespace ybcube {

// Desk-scale guard for census computations (ml <= kCensusGuard).
inline constexpr int kCensusGuard = 10;

struct LabeledCensus {
  int m = 0;
  int l = 0;
  mpz_class count_labeled;  // number of labeled one-vertex VH complexes
  mpq_class mass;           // count / (2^{l+m} l! m!)
};

using ComplexSink = std::function<void(const Presentation&)>;

// Exact count of sets of ml squares on labeled edge sets A (|A| = 2m) and
// B (|B| = 2l) with fixed involutions such that every ordered corner pair is
// covered exactly once and every square has four distinct corners.
// Backtracks over the smallest uncovered corner; optionally streams each
// complex as a two-color group presentation.
mpz_class enumerate_labeled(int m, int l, const ComplexSink& stream = {},
                            int guard = kCensusGuard);

// Same count with caller-chosen fixed-point-free involutions on A and B
// (inv_a[x] = partner of x).  The count does not depend on the choice.
mpz_class enumerate_labeled_with_involutions(int m, int l, const std::vector<int>& inv_a,
                                             const std::vector<int>& inv_b,
                                             const ComplexSink& stream = {},
                                             int guard = kCensusGuard);

// Evaluates the labeled count as the coefficient of prod x_{ab} in
// ((1/4) tr((tau_A X tau_B X^t)^2))^{ml}, by exact coefficient extraction
// over bitset-indexed multilinear monomials, and derives the
// automorphism-weighted mass.  Never enumerates squares.
LabeledCensus mass_formula_eval(int m, int l, int guard = kCensusGuard);

// Lower bound for the number of solutions with |X| = 2(m+l+k): every labeled
// (2m,2l) complex extends to a 3-cube complex by a commuting factor of size
// 2k.  Requires m, l, k >= 2.
mpz_class cube_census_lower_bound(int m, int l, int k, int guard = kCensusGuard);

// Canonical key of a two-color complex under the universal relabeling group
// (involution-respecting bijections of each color class): the minimum of the
// sorted square encodings over all relabelings.  Equal keys = same complex
// up to relabeling.
std::vector<int> relabeling_canonical_key(const Presentation& pres);

// Streamed deduplication by canonical key: the number of complexes up to
// relabeling.  There is no closed formula for this count, only the
// automorphism-weighted mass, so it is computed by enumeration.
mpz_class count_distinct_complexes(int m, int l, int guard = kCensusGuard);

}  // namespace ybcube
