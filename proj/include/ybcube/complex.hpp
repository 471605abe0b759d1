#pragma once

#include <string>
#include <vector>

#include "ybcube/presentation.hpp"

namespace ybcube {

// The one-vertex square complex S_{A1,...,An} underlying a group
// presentation with colored labels and length-4 relators.
struct OneVertexComplex {
  std::vector<Label> labels;
  std::vector<SquareRelation> squares;   // canonical, sorted
  std::vector<std::vector<int>> partition;  // label ids grouped by color
  std::vector<int> valency_vector;
  std::string name;

  int num_colors() const { return static_cast<int>(partition.size()); }
  int inverse(int id) const { return labels[static_cast<size_t>(id)].inverse_id; }
  int color(int id) const { return labels[static_cast<size_t>(id)].color; }
};

// Bipartite corner graph between two color classes.
struct LinkGraph {
  int color_left = -1;
  int color_right = -1;
  std::vector<int> left;   // oriented edges (label ids) of color_left
  std::vector<int> right;  // oriented edges of color_right
  struct Corner {
    int left_label;
    int right_label;
    int square;  // index into OneVertexComplex::squares
  };
  std::vector<Corner> corners;
};

struct Witness {
  std::string kind;
  std::vector<int> labels;
  std::string detail;
};

struct CheckReport {
  std::string check;
  bool pass = false;
  std::vector<Witness> witnesses;  // capped; a trailing witness notes truncation
  int64_t failures = 0;            // total failure count before capping
};

OneVertexComplex build_complex(const Presentation& pres);

// The four corner pairs (lower-color edge, higher-color edge) of a canonical
// square word (e1,e2,e3,e4): (e1,e2), (e3,e4), (e3',e2'), (e1',e4').
std::array<std::pair<int, int>, 4> square_corners(const OneVertexComplex& cx,
                                                  const SquareRelation& sq);

LinkGraph link(const OneVertexComplex& cx, int color_i, int color_j);

// Per color pair: fixed-point-free involutions, complete bipartite link
// (every ordered cross-color pair in exactly one corner), and four pairwise
// distinct corner tuples per square.
CheckReport check_vh(const OneVertexComplex& cx);

// For every tri-colored triple (x,y,z), the two propagation orders through
// the squares agree; this is the combinatorial statement that squares
// assemble into closed 3-cubes.  Vacuous with fewer than 3 colors.
CheckReport check_cube_condition(const OneVertexComplex& cx);

std::string to_dot(const LinkGraph& g);

// The complex read back as a group presentation (labels + squares).
Presentation to_presentation(const OneVertexComplex& cx);

}  // namespace ybcube
