#include "ybcube/ybmap.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ybcube/homology.hpp"

namespace ybcube {

namespace {

constexpr size_t kMaxWitnesses = 16;

std::string lname(const std::vector<Label>& labels, int id) {
  const std::string& n = labels[static_cast<size_t>(id)].name;
  return n.empty() ? "#" + std::to_string(id) : n;
}

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

}  // namespace

bool YBSolution::is_bijection() const {
  std::vector<char> seen(table.size(), 0);
  const int d = size();
  for (auto [u, v] : table) {
    if (u < 0 || v < 0 || u >= d || v >= d) return false;
    size_t idx = static_cast<size_t>(u) * static_cast<size_t>(d) + static_cast<size_t>(v);
    if (seen[idx]) return false;
    seen[idx] = 1;
  }
  return true;
}

int64_t YBSolution::fixed_pairs() const {
  int64_t fixed = 0;
  const int d = size();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      if (apply(x, y) == std::pair<int, int>{x, y}) ++fixed;
  return fixed;
}

std::vector<int64_t> YBSolution::cycle_type() const {
  const int d = size();
  const size_t dim = static_cast<size_t>(d) * static_cast<size_t>(d);
  std::vector<char> seen(dim, 0);
  std::vector<int64_t> cycles;
  for (size_t start = 0; start < dim; ++start) {
    if (seen[start]) continue;
    int64_t len = 0;
    size_t at = start;
    while (!seen[at]) {
      seen[at] = 1;
      ++len;
      auto [u, v] = table[at];
      at = static_cast<size_t>(u) * static_cast<size_t>(d) + static_cast<size_t>(v);
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

YBSolution identity_solution(std::vector<Label> labels) {
  YBSolution r;
  r.labels = std::move(labels);
  const int d = r.size();
  r.table.resize(static_cast<size_t>(d) * static_cast<size_t>(d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      r.table[static_cast<size_t>(x) * static_cast<size_t>(d) + static_cast<size_t>(y)] = {x, y};
  r.provenance = "identity";
  return r;
}

YBSolution flip_solution(std::vector<Label> labels) {
  YBSolution r = identity_solution(std::move(labels));
  const int d = r.size();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      r.table[static_cast<size_t>(x) * static_cast<size_t>(d) + static_cast<size_t>(y)] = {y, x};
  r.provenance = "flip";
  return r;
}

YBSolution compose_flip(const YBSolution& r) {
  YBSolution q = r;
  for (auto& [u, v] : q.table) std::swap(u, v);
  q.provenance = r.provenance.empty() ? "flip*R" : "flip*" + r.provenance;
  return q;
}

YBSolution derive_R(const OneVertexComplex& cx) {
  const int d = static_cast<int>(cx.labels.size());
  YBSolution r;
  r.labels = cx.labels;
  r.provenance = cx.name;
  r.source = std::make_shared<Presentation>(to_presentation(cx));
  r.table.assign(static_cast<size_t>(d) * static_cast<size_t>(d), {-1, -1});

  auto slot = [&](int x, int y) -> std::pair<int, int>& {
    return r.table[static_cast<size_t>(x) * static_cast<size_t>(d) + static_cast<size_t>(y)];
  };
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
      auto& entry = slot(f[0], f[1]);
      if (entry.first == -1) {
        entry = image;
      } else if (entry != image) {
        throw Error("derive_R: conflicting assignments for pair (" + lname(cx.labels, f[0]) +
                    ", " + lname(cx.labels, f[1]) + "); the complex is not VH");
      }
    }
  }
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      auto& entry = slot(x, y);
      if (cx.color(x) == cx.color(y)) {
        entry = {x, y};
      } else if (entry.first == -1) {
        throw Error("derive_R: cross-color pair (" + lname(cx.labels, x) + ", " +
                    lname(cx.labels, y) + ") lies in no square; the complex is not VH");
      }
    }
  }
  return r;
}

CheckReport verify_ybe(const YBSolution& r) {
  CheckReport report;
  report.check = "ybe";
  size_t failures = 0;
  const int d = r.size();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        auto p1 = r.apply(x, y);
        auto p2 = r.apply(p1.second, z);
        auto p3 = r.apply(p1.first, p2.first);
        auto q1 = r.apply(y, z);
        auto q2 = r.apply(x, q1.first);
        auto q3 = r.apply(q2.second, q1.second);
        if (p3.first != q2.first || p3.second != q3.first || p2.second != q3.second) {
          ++failures;
          add_witness(report, {"braid_violation",
                               {x, y, z},
                               "triple (" + lname(r.labels, x) + ", " + lname(r.labels, y) +
                                   ", " + lname(r.labels, z) + ")"});
        }
      }
  finalize(report, failures);
  return report;
}

CheckReport verify_qybe(const YBSolution& r) {
  CheckReport report;
  report.check = "qybe";
  size_t failures = 0;
  const YBSolution q = compose_flip(r);
  const int d = q.size();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        // lhs = Q12 Q13 Q23, rhs = Q23 Q13 Q12, applied right to left
        auto a1 = q.apply(y, z);
        auto a2 = q.apply(x, a1.second);
        auto a3 = q.apply(a2.first, a1.first);
        // lhs = (a3.first, a3.second, a2.second)
        auto b1 = q.apply(x, y);
        auto b2 = q.apply(b1.first, z);
        auto b3 = q.apply(b1.second, b2.second);
        // rhs = (b2.first, b3.first, b3.second)
        if (a3.first != b2.first || a3.second != b3.first || a2.second != b3.second) {
          ++failures;
          add_witness(report, {"qybe_violation",
                               {x, y, z},
                               "triple (" + lname(r.labels, x) + ", " + lname(r.labels, y) +
                                   ", " + lname(r.labels, z) + ")"});
        }
      }
  finalize(report, failures);
  return report;
}

PermutationMatrix to_matrix(const YBSolution& r) {
  const int64_t d = r.size();
  PermutationMatrix m;
  m.dim = d * d;
  m.target.resize(static_cast<size_t>(m.dim));
  for (int64_t x = 0; x < d; ++x)
    for (int64_t y = 0; y < d; ++y) {
      auto [u, v] = r.apply(static_cast<int>(x), static_cast<int>(y));
      m.target[static_cast<size_t>(x * d + y)] = static_cast<int64_t>(u) * d + v;
    }
  return m;
}

void write_matrix_market(const PermutationMatrix& m, std::ostream& out) {
  out << "%%MatrixMarket matrix coordinate integer general\n";
  out << m.dim << " " << m.dim << " " << m.dim << "\n";
  for (int64_t source = 0; source < m.dim; ++source)
    out << m.target[static_cast<size_t>(source)] + 1 << " " << source + 1 << " 1\n";
}

void write_matrix_csv(const PermutationMatrix& m, std::ostream& out) {
  for (int64_t source = 0; source < m.dim; ++source)
    out << source << "," << m.target[static_cast<size_t>(source)] << "\n";
}

bool is_isomorphism(const YBSolution& r1, const YBSolution& r2, const std::vector<int>& nu) {
  const int d = r1.size();
  if (r2.size() != d || static_cast<int>(nu.size()) != d) return false;
  std::vector<char> used(static_cast<size_t>(d), 0);
  for (int x : nu) {
    if (x < 0 || x >= d || used[static_cast<size_t>(x)]) return false;
    used[static_cast<size_t>(x)] = 1;
  }
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      auto [u, v] = r1.apply(x, y);
      auto [u2, v2] = r2.apply(nu[static_cast<size_t>(x)], nu[static_cast<size_t>(y)]);
      if (nu[static_cast<size_t>(u)] != u2 || nu[static_cast<size_t>(v)] != v2) return false;
    }
  return true;
}

namespace {

// local profile: how many y make both (x,y) and (y,x) fixed
std::vector<int> fixedness_profile(const YBSolution& r) {
  const int d = r.size();
  std::vector<int> f(static_cast<size_t>(d), 0);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      if (r.apply(x, y) == std::pair<int, int>{x, y} &&
          r.apply(y, x) == std::pair<int, int>{y, x})
        f[static_cast<size_t>(x)]++;
  return f;
}

struct IsoSearch {
  const YBSolution& r1;
  const YBSolution& r2;
  int d;
  const std::vector<int>& f1;
  const std::vector<int>& f2;
  bool color_phase = false;
  int64_t budget = 0;
  int64_t nodes = 0;
  bool budget_hit = false;

  std::vector<int> nu, nu_inv;
  std::vector<int> assigned;           // ids in assignment order
  std::vector<int> cmap, crmap;        // color -> color when color_phase
  std::vector<int> ccount;

  IsoSearch(const YBSolution& a, const YBSolution& b, const std::vector<int>& fa,
            const std::vector<int>& fb)
      : r1(a), r2(b), d(a.size()), f1(fa), f2(fb) {}

  void reset(bool colors, int64_t node_budget) {
    color_phase = colors;
    budget = node_budget;
    nodes = 0;
    budget_hit = false;
    nu.assign(static_cast<size_t>(d), -1);
    nu_inv.assign(static_cast<size_t>(d), -1);
    assigned.clear();
    int nc1 = 0, nc2 = 0;
    for (const Label& l : r1.labels) nc1 = std::max(nc1, l.color + 1);
    for (const Label& l : r2.labels) nc2 = std::max(nc2, l.color + 1);
    cmap.assign(static_cast<size_t>(nc1), -1);
    crmap.assign(static_cast<size_t>(nc2), -1);
    ccount.assign(static_cast<size_t>(nc1), 0);
  }

  int color1(int x) const { return r1.labels[static_cast<size_t>(x)].color; }
  int color2(int x) const { return r2.labels[static_cast<size_t>(x)].color; }

  // try nu[x] = w plus all forced consequences; appends to `assigned`
  bool assign(int x, int w) {
    if (nu[static_cast<size_t>(x)] != -1) return nu[static_cast<size_t>(x)] == w;
    if (nu_inv[static_cast<size_t>(w)] != -1) return false;
    if (f1[static_cast<size_t>(x)] != f2[static_cast<size_t>(w)]) return false;
    if (color_phase) {
      int c1 = color1(x), c2 = color2(w);
      if (cmap[static_cast<size_t>(c1)] == -1) {
        if (crmap[static_cast<size_t>(c2)] != -1) return false;
        cmap[static_cast<size_t>(c1)] = c2;
        crmap[static_cast<size_t>(c2)] = c1;
      } else if (cmap[static_cast<size_t>(c1)] != c2) {
        return false;
      }
      ccount[static_cast<size_t>(color1(x))]++;
    }
    nu[static_cast<size_t>(x)] = w;
    nu_inv[static_cast<size_t>(w)] = x;
    assigned.push_back(x);

    // propagate against everything assigned so far (including x itself)
    for (size_t i = 0; i < assigned.size(); ++i) {
      int y = assigned[i];
      // the loop re-checks older pairs too once x joins; only pairs touching
      // x can be new, so check (x,y) and (y,x)
      if (!check_pair(x, y) || (y != x && !check_pair(y, x))) return false;
    }
    return true;
  }

  bool check_pair(int x, int y) {
    int wx = nu[static_cast<size_t>(x)], wy = nu[static_cast<size_t>(y)];
    if (wx == -1 || wy == -1) return true;
    auto [u, v] = r1.apply(x, y);
    auto [u2, v2] = r2.apply(wx, wy);
    return assign(u, u2) && assign(v, v2);
  }

  void undo_to(size_t mark) {
    while (assigned.size() > mark) {
      int x = assigned.back();
      assigned.pop_back();
      int w = nu[static_cast<size_t>(x)];
      nu[static_cast<size_t>(x)] = -1;
      nu_inv[static_cast<size_t>(w)] = -1;
      if (color_phase) {
        int c1 = color1(x);
        if (--ccount[static_cast<size_t>(c1)] == 0) {
          crmap[static_cast<size_t>(cmap[static_cast<size_t>(c1)])] = -1;
          cmap[static_cast<size_t>(c1)] = -1;
        }
      }
    }
  }

  bool search() {
    int x = -1;
    for (int i = 0; i < d; ++i)
      if (nu[static_cast<size_t>(i)] == -1) {
        x = i;
        break;
      }
    if (x == -1) return true;
    for (int w = 0; w < d; ++w) {
      if (nu_inv[static_cast<size_t>(w)] != -1) continue;
      if (++nodes > budget) {
        budget_hit = true;
        return false;
      }
      size_t mark = assigned.size();
      if (assign(x, w) && search()) return true;
      undo_to(mark);
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

IsoResult iso_test(const YBSolution& r1, const YBSolution& r2, int64_t node_budget) {
  IsoResult result;
  if (r1.size() != r2.size()) {
    result.verdict = IsoVerdict::NonIsomorphic;
    result.reason = "|X| differs: " + std::to_string(r1.size()) + " vs " +
                    std::to_string(r2.size());
    return result;
  }
  // non-isometric complexes give non-isomorphic solutions, so differing cube
  // group homology already decides
  if (r1.source && r2.source) {
    AbelianGroup h1 = first_homology(*r1.source);
    AbelianGroup h2 = first_homology(*r2.source);
    if (!(h1 == h2)) {
      result.verdict = IsoVerdict::NonIsomorphic;
      result.reason = "cube group H1 invariants differ: " + h1.to_string() + " vs " +
                      h2.to_string();
      return result;
    }
  }
  if (r1.fixed_pairs() != r2.fixed_pairs()) {
    result.verdict = IsoVerdict::NonIsomorphic;
    result.reason = "fixed pair counts differ";
    return result;
  }
  if (r1.cycle_type() != r2.cycle_type()) {
    result.verdict = IsoVerdict::NonIsomorphic;
    result.reason = "cycle types of the X^2 permutation differ";
    return result;
  }
  std::vector<int> f1 = fixedness_profile(r1);
  std::vector<int> f2 = fixedness_profile(r2);
  {
    std::vector<int> s1 = f1, s2 = f2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) {
      result.verdict = IsoVerdict::NonIsomorphic;
      result.reason = "fixedness profiles differ";
      return result;
    }
  }

  IsoSearch search(r1, r2, f1, f2);
  // fast phase: color-respecting
  search.reset(true, std::max<int64_t>(node_budget / 4, 1));
  if (search.search()) {
    result.verdict = IsoVerdict::Isomorphic;
    result.nu = search.nu;
    result.reason = "explicit isomorphism found (color-respecting search)";
    result.nodes_used = search.nodes;
    if (!is_isomorphism(r1, r2, result.nu)) throw Error("iso_test: internal witness check failed");
    return result;
  }
  int64_t used = search.nodes;
  // complete phase
  search.reset(false, node_budget - used);
  if (search.search()) {
    result.verdict = IsoVerdict::Isomorphic;
    result.nu = search.nu;
    result.reason = "explicit isomorphism found";
    result.nodes_used = used + search.nodes;
    if (!is_isomorphism(r1, r2, result.nu)) throw Error("iso_test: internal witness check failed");
    return result;
  }
  result.nodes_used = used + search.nodes;
  if (search.budget_hit) {
    result.verdict = IsoVerdict::Inconclusive;
    result.reason = "node budget exhausted after " + std::to_string(result.nodes_used) +
                    " nodes";
  } else {
    result.verdict = IsoVerdict::NonIsomorphic;
    result.reason = "exhaustive search found no isomorphism";
  }
  return result;
}

}  // namespace ybcube
