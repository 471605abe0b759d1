#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ybcube/common.hpp"
#include "ybcube/field.hpp"

namespace ybcube {

struct YBSolution;  // ybmap.hpp

// One oriented edge / generator symbol.  Ids are dense (0..n-1) so verifiers
// can use array-indexed maps; paper-style names are display metadata.
struct Label {
  int id = -1;
  int color = -1;       // tree-factor index
  int inverse_id = -1;  // involution partner (== id only in the even-q case)
  std::string name;

  bool operator==(const Label&) const = default;
};

// A length-4 word stored in canonical form.
// kind = Group:     relator e1 e2 e3 e4 = 1, canonical under the four
//                   equivalent forms of a geometric square.
// kind = Semigroup: relation e1 e2 = e3 e4, canonical under side swap.
struct SquareRelation {
  std::array<int, 4> word{};
  auto operator<=>(const SquareRelation&) const = default;
};

struct Presentation {
  enum class Kind { Group, Semigroup };

  std::vector<Label> labels;            // dense ids 0..size-1
  std::vector<SquareRelation> squares;  // canonical, sorted, unique
  Kind kind = Kind::Group;
  std::string name;                     // display metadata, not serialized

  const Label& label(int id) const { return labels.at(static_cast<size_t>(id)); }
  int inverse(int id) const { return labels.at(static_cast<size_t>(id)).inverse_id; }
  int num_colors() const;
  std::vector<int> color_class(int color) const;
  std::vector<int> valency_vector() const;

  bool operator==(const Presentation& o) const {
    return labels == o.labels && squares == o.squares && kind == o.kind;
  }
};

// Canonical representative of a group square: rotate so the lower color
// leads, then take the lexicographic minimum of the four equivalent tuples
// (e1,e2,e3,e4), (e3,e4,e1,e2), (e3',e2',e1',e4'), (e1',e4',e3',e2')
// where x' denotes the involution partner.  Requires alternating colors.
SquareRelation canonical_group_square(const std::vector<Label>& labels,
                                      std::array<int, 4> word);

// Canonical representative of a semigroup relation xy = tz: the smaller of
// (x,y,t,z) and (t,z,x,y).
SquareRelation canonical_semigroup_relation(std::array<int, 4> word);

// The group Gamma_{M,delta}: generators a_i for i in M (a union of the given
// cosets of (q-1)Z/(q^2-1)), involution a_i -> a_{i+(q^2-1)/2}, and one
// square class a_i a_j a_l^{-1} a_k^{-1} per dihedral orbit over all
// i != j mod (q-1).  Colors follow the sorted coset list; names are
// letter-subscript (a1, b2, ...).  Even q puts a_i^2 = 1 and needs the
// explicit opt-in since the involution then has fixed points.
Presentation build_gamma(const ZechTable& table, std::vector<int64_t> cosets,
                         bool allow_even_q = false);

// Hard-coded presentations: "gamma1" (18 generators, valency (6,6,6)) and
// "gamma2" (18 generators, valency (4,6,8)).
Presentation fixture(const std::string& name);

// Adds a fresh color with generators c_1..c_k (and inverses) commuting with
// every existing generator; square relators c x c^-1 x^-1.
Presentation extend_with_commuting_factor(const Presentation& base, int k);

// Group or semigroup generated by X with one relation xy = tz per ordered
// pair with R(x,y) = (t,z) != (x,y).  The group flavor introduces formal
// inverses as fresh labels (relators x y z* t*).
Presentation structure_presentation(const YBSolution& R, Presentation::Kind kind);

}  // namespace ybcube
