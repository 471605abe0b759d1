#include "ybcube/complex.hpp"

#include <algorithm>
#include <sstream>

namespace ybcube {

namespace {

constexpr size_t kMaxWitnesses = 16;

void add_witness(CheckReport& report, Witness w) {
  if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(std::move(w));
}

void finalize(CheckReport& report, size_t failures) {
  report.pass = (failures == 0);
  report.failures = static_cast<int64_t>(failures);
  if (failures > report.witnesses.size())
    report.witnesses.push_back(
        {"truncated", {}, std::to_string(failures - report.witnesses.size()) + " more failures"});
}

std::string lname(const OneVertexComplex& cx, int id) {
  const std::string& n = cx.labels[static_cast<size_t>(id)].name;
  return n.empty() ? "#" + std::to_string(id) : n;
}

}  // namespace

OneVertexComplex build_complex(const Presentation& pres) {
  if (pres.kind != Presentation::Kind::Group)
    throw Error("build_complex: presentation must be a group presentation");
  const int n = static_cast<int>(pres.labels.size());
  for (const Label& l : pres.labels) {
    if (l.inverse_id < 0 || l.inverse_id >= n)
      throw Error("build_complex: label " + l.name + " is missing its inverse");
    const Label& p = pres.labels[static_cast<size_t>(l.inverse_id)];
    if (p.inverse_id != l.id) throw Error("build_complex: involution is not involutive");
    if (p.color != l.color) throw Error("build_complex: inverse pair with mismatched colors");
  }

  OneVertexComplex cx;
  cx.labels = pres.labels;
  cx.name = pres.name;
  cx.partition.resize(static_cast<size_t>(pres.num_colors()));
  for (const Label& l : pres.labels) cx.partition[static_cast<size_t>(l.color)].push_back(l.id);
  for (const auto& cls : cx.partition) cx.valency_vector.push_back(static_cast<int>(cls.size()));

  cx.squares.reserve(pres.squares.size());
  for (const SquareRelation& sq : pres.squares)
    cx.squares.push_back(canonical_group_square(pres.labels, sq.word));  // validates alternation
  std::sort(cx.squares.begin(), cx.squares.end());
  cx.squares.erase(std::unique(cx.squares.begin(), cx.squares.end()), cx.squares.end());
  return cx;
}

std::array<std::pair<int, int>, 4> square_corners(const OneVertexComplex& cx,
                                                  const SquareRelation& sq) {
  const auto& w = sq.word;
  return {{{w[0], w[1]},
           {w[2], w[3]},
           {cx.inverse(w[2]), cx.inverse(w[1])},
           {cx.inverse(w[0]), cx.inverse(w[3])}}};
}

LinkGraph link(const OneVertexComplex& cx, int color_i, int color_j) {
  if (color_i == color_j || color_i < 0 || color_j < 0 || color_i >= cx.num_colors() ||
      color_j >= cx.num_colors())
    throw Error("link: invalid color pair");
  LinkGraph g;
  g.color_left = std::min(color_i, color_j);
  g.color_right = std::max(color_i, color_j);
  g.left = cx.partition[static_cast<size_t>(g.color_left)];
  g.right = cx.partition[static_cast<size_t>(g.color_right)];
  for (size_t s = 0; s < cx.squares.size(); ++s) {
    const auto& w = cx.squares[s].word;
    if (cx.color(w[0]) != g.color_left || cx.color(w[1]) != g.color_right) continue;
    for (auto [a, b] : square_corners(cx, cx.squares[s]))
      g.corners.push_back({a, b, static_cast<int>(s)});
  }
  return g;
}

CheckReport check_vh(const OneVertexComplex& cx) {
  CheckReport report;
  report.check = "vh";
  size_t failures = 0;
  const int n = static_cast<int>(cx.labels.size());

  for (const Label& l : cx.labels) {
    if (l.inverse_id == l.id) {
      ++failures;
      add_witness(report, {"involution_fixed_point", {l.id}, lname(cx, l.id) + " is self-inverse"});
    }
  }

  // corner coverage, all color pairs at once: count[x*n + y] over cross pairs
  std::vector<int> count(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (const SquareRelation& sq : cx.squares) {
    auto corners = square_corners(cx, sq);
    for (auto [a, b] : corners) count[static_cast<size_t>(a) * static_cast<size_t>(n) +
                                      static_cast<size_t>(b)]++;
    // four corner tuples pairwise distinct (the cardinality-4 condition)
    std::array<std::pair<int, int>, 4> sorted = corners;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      ++failures;
      add_witness(report, {"corner_tuple_collision",
                           {sq.word[0], sq.word[1], sq.word[2], sq.word[3]},
                           "square " + lname(cx, sq.word[0]) + " " + lname(cx, sq.word[1]) + " " +
                               lname(cx, sq.word[2]) + " " + lname(cx, sq.word[3]) +
                               " has coinciding corners"});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (cx.color(x) >= cx.color(y)) continue;
      int c = count[static_cast<size_t>(x) * static_cast<size_t>(n) + static_cast<size_t>(y)];
      if (c == 1) continue;
      ++failures;
      add_witness(report, {c == 0 ? "missing_corner" : "doubled_corner",
                           {x, y},
                           "pair (" + lname(cx, x) + ", " + lname(cx, y) + ") lies in " +
                               std::to_string(c) + " corners"});
    }
  }
  finalize(report, failures);
  return report;
}

namespace {

// R restricted to cross-color pairs, read directly off the squares:
// every dihedral form (e1,e2,e3,e4) maps (e1,e2) to (e4^-1,e3^-1).
// Returns false (with witnesses) if two squares claim one ordered pair.
bool cross_pair_map(const OneVertexComplex& cx, std::vector<std::pair<int, int>>& map,
                    CheckReport& report, size_t& failures) {
  const int n = static_cast<int>(cx.labels.size());
  map.assign(static_cast<size_t>(n) * static_cast<size_t>(n), {-1, -1});
  bool ok = true;
  for (const SquareRelation& sq : cx.squares) {
    std::array<int, 4> t = sq.word;
    std::array<std::array<int, 4>, 8> forms;
    for (int s = 0; s < 4; ++s) {
      forms[static_cast<size_t>(s)] = t;
      t = {t[1], t[2], t[3], t[0]};
    }
    std::array<int, 4> rev = {cx.inverse(sq.word[3]), cx.inverse(sq.word[2]),
                              cx.inverse(sq.word[1]), cx.inverse(sq.word[0])};
    for (int s = 0; s < 4; ++s) {
      forms[static_cast<size_t>(4 + s)] = rev;
      rev = {rev[1], rev[2], rev[3], rev[0]};
    }
    for (const auto& f : forms) {
      std::pair<int, int> image = {cx.inverse(f[3]), cx.inverse(f[2])};
      auto& slot = map[static_cast<size_t>(f[0]) * static_cast<size_t>(n) +
                       static_cast<size_t>(f[1])];
      if (slot.first == -1) {
        slot = image;
      } else if (slot != image) {
        ok = false;
        ++failures;
        add_witness(report, {"conflicting_pair",
                             {f[0], f[1]},
                             "two squares disagree on (" + lname(cx, f[0]) + ", " +
                                 lname(cx, f[1]) + ")"});
      }
    }
  }
  return ok;
}

}  // namespace

CheckReport check_cube_condition(const OneVertexComplex& cx) {
  CheckReport report;
  report.check = "cube_condition";
  size_t failures = 0;
  if (cx.num_colors() < 3) {
    report.pass = true;
    report.witnesses.push_back({"vacuous", {}, "fewer than 3 colors; no tri-colored triples"});
    return report;
  }

  const int n = static_cast<int>(cx.labels.size());
  std::vector<std::pair<int, int>> map;
  if (!cross_pair_map(cx, map, report, failures)) {
    finalize(report, failures);
    return report;
  }
  auto apply = [&](int x, int y) { return map[static_cast<size_t>(x) * static_cast<size_t>(n) +
                                              static_cast<size_t>(y)]; };
  auto defined = [](std::pair<int, int> p) { return p.first != -1; };

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (cx.color(x) == cx.color(y)) continue;
      for (int z = 0; z < n; ++z) {
        if (cx.color(z) == cx.color(x) || cx.color(z) == cx.color(y)) continue;
        // R12 R23 R12 vs R23 R12 R23, all steps on cross-color pairs
        auto p1 = apply(x, y);
        auto p2 = defined(p1) ? apply(p1.second, z) : p1;
        auto p3 = defined(p2) ? apply(p1.first, p2.first) : p2;
        auto q1 = apply(y, z);
        auto q2 = defined(q1) ? apply(x, q1.first) : q1;
        auto q3 = defined(q2) ? apply(q2.second, q1.second) : q2;
        bool bad;
        if (!defined(p1) || !defined(p2) || !defined(p3) || !defined(q1) || !defined(q2) ||
            !defined(q3)) {
          bad = true;  // some cross pair not realized in any square
        } else {
          // lhs = (p3.first, p3.second, p2.second), rhs = (q2.first, q3.first, q3.second)
          bad = !(p3.first == q2.first && p3.second == q3.first && p2.second == q3.second);
        }
        if (bad) {
          ++failures;
          add_witness(report, {"open_cube",
                               {x, y, z},
                               "triple (" + lname(cx, x) + ", " + lname(cx, y) + ", " +
                                   lname(cx, z) + ") does not close"});
        }
      }
    }
  }
  finalize(report, failures);
  return report;
}

std::string to_dot(const LinkGraph& g) {
  std::ostringstream out;
  out << "graph link_" << g.color_left << "_" << g.color_right << " {\n";
  out << "  // left = color " << g.color_left << ", right = color " << g.color_right << "\n";
  for (int id : g.left) out << "  L" << id << " [shape=box];\n";
  for (int id : g.right) out << "  R" << id << " [shape=ellipse];\n";
  for (const auto& c : g.corners)
    out << "  L" << c.left_label << " -- R" << c.right_label << " [label=\"s" << c.square
        << "\"];\n";
  out << "}\n";
  return out.str();
}

Presentation to_presentation(const OneVertexComplex& cx) {
  Presentation pres;
  pres.labels = cx.labels;
  pres.squares = cx.squares;
  pres.kind = Presentation::Kind::Group;
  pres.name = cx.name;
  return pres;
}

}  // namespace ybcube
