#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <utility>
#include <vector>

#include "ybcube/complex.hpp"
#include "ybcube/presentation.hpp"

namespace ybcube {

// A bijection X^2 -> X^2 stored as a dense table indexed by label-id pairs.
// Immutable in practice; verification loops only read it.
struct YBSolution {
  std::vector<Label> labels;                // X
  std::vector<std::pair<int, int>> table;   // size D*D, entry for (x,y) at x*D+y
  std::string provenance;                   // source presentation name
  std::shared_ptr<const Presentation> source;  // cube group, when derived

  int size() const { return static_cast<int>(labels.size()); }
  std::pair<int, int> apply(int x, int y) const {
    return table[static_cast<size_t>(x) * labels.size() + static_cast<size_t>(y)];
  }
  bool is_bijection() const;
  int64_t fixed_pairs() const;
  // sorted cycle lengths of the table viewed as a permutation of X^2
  std::vector<int64_t> cycle_type() const;
};

// Identity on X^2 and the flip P(x,y) = (y,x).
YBSolution identity_solution(std::vector<Label> labels);
YBSolution flip_solution(std::vector<Label> labels);
// Q = P o R.
YBSolution compose_flip(const YBSolution& r);

// Theorem rule: every dihedral form (e1,e2,e3,e4) of a square gives
// R(e1,e2) = (e4^-1, e3^-1); same-color pairs are fixed.  Requires a complex
// passing check_vh; conflicting or missing cross pairs throw.
YBSolution derive_R(const OneVertexComplex& cx);

// Exhaustive braid check R12 R23 R12 = R23 R12 R23 over all D^3 triples.
CheckReport verify_ybe(const YBSolution& r);
// Exhaustive check Q12 Q13 Q23 = Q23 Q13 Q12 for Q = P o R.
CheckReport verify_qybe(const YBSolution& r);

// Permutation matrix of the linear extension on basis pairs, index (x,y) ->
// x*D + y.  One unit per row and column.
struct PermutationMatrix {
  int64_t dim = 0;               // D^2
  std::vector<int64_t> target;   // target[source]
};

PermutationMatrix to_matrix(const YBSolution& r);
void write_matrix_market(const PermutationMatrix& m, std::ostream& out);
void write_matrix_csv(const PermutationMatrix& m, std::ostream& out);

enum class IsoVerdict { Isomorphic, NonIsomorphic, Inconclusive };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::vector<int> nu;   // witness bijection when isomorphic: nu[x1_id] = x2_id
  std::string reason;
  int64_t nodes_used = 0;
};

// Cheap invariants (sizes, fixed-pair structure, cycle type, H1 of the cube
// groups when both solutions carry provenance) followed by backtracking
// search for nu with R2(nu x, nu y) = (nu (x) nu)(R1(x,y)).  Budget
// exhaustion yields Inconclusive, never a wrong verdict.
IsoResult iso_test(const YBSolution& r1, const YBSolution& r2,
                   int64_t node_budget = 2'000'000);

// Is nu a solution isomorphism from r1 to r2?
bool is_isomorphism(const YBSolution& r1, const YBSolution& r2, const std::vector<int>& nu);

}  // namespace ybcube
