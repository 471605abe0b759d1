#include "ybcube/census.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>

namespace ybcube {

namespace {

void check_guard(int m, int l, int guard) {
  if (m < 1 || l < 1) throw Error("census: m and l must be >= 1");
  if (static_cast<int64_t>(m) * l > guard)
    throw Error("census: ml = " + std::to_string(static_cast<int64_t>(m) * l) +
                " exceeds the guard " + std::to_string(guard));
}

Presentation complex_presentation(int m, int l, const std::vector<int>& inv_a,
                                  const std::vector<int>& inv_b,
                                  const std::vector<std::array<int, 4>>& squares) {
  Presentation pres;
  pres.kind = Presentation::Kind::Group;
  for (int i = 0; i < 2 * m; ++i)
    pres.labels.push_back({i, 0, inv_a[static_cast<size_t>(i)], "a" + std::to_string(i + 1)});
  for (int i = 0; i < 2 * l; ++i)
    pres.labels.push_back(
        {2 * m + i, 1, 2 * m + inv_b[static_cast<size_t>(i)], "b" + std::to_string(i + 1)});
  for (const auto& [a, b, a2, b2] : squares) {
    std::array<int, 4> word = {a, 2 * m + b, inv_a[static_cast<size_t>(a2)],
                               2 * m + inv_b[static_cast<size_t>(b2)]};
    pres.squares.push_back(canonical_group_square(pres.labels, word));
  }
  std::sort(pres.squares.begin(), pres.squares.end());
  return pres;
}

struct Enumerator {
  int m, l;
  const std::vector<int>& inv_a;
  const std::vector<int>& inv_b;
  const ComplexSink& stream;
  std::vector<char> covered;
  std::vector<std::array<int, 4>> chosen;  // (a, b, a', b')
  mpz_class count = 0;

  int corner(int a, int b) const { return a * 2 * l + b; }

  void run() {
    covered.assign(static_cast<size_t>(4 * m * l), 0);
    recurse();
  }

  void recurse() {
    int first = -1;
    for (int c = 0; c < 4 * m * l; ++c)
      if (!covered[static_cast<size_t>(c)]) {
        first = c;
        break;
      }
    if (first == -1) {
      ++count;
      if (stream) stream(complex_presentation(m, l, inv_a, inv_b, chosen));
      return;
    }
    const int a = first / (2 * l), b = first % (2 * l);
    // squares covering (a,b) as their leading corner: relation a b = b' a',
    // corners (a,b), (a', b^-1), (a^-1, b'), (a'^-1, b'^-1)
    for (int a2 = 0; a2 < 2 * m; ++a2) {
      for (int b2 = 0; b2 < 2 * l; ++b2) {
        if (a2 == inv_a[static_cast<size_t>(a)] && b2 == inv_b[static_cast<size_t>(b)])
          continue;  // coinciding corner tuples (2-torsion shadow)
        int c1 = corner(a2, inv_b[static_cast<size_t>(b)]);
        int c2 = corner(inv_a[static_cast<size_t>(a)], b2);
        int c3 = corner(inv_a[static_cast<size_t>(a2)], inv_b[static_cast<size_t>(b2)]);
        if (covered[static_cast<size_t>(c1)] || covered[static_cast<size_t>(c2)] ||
            covered[static_cast<size_t>(c3)])
          continue;
        covered[static_cast<size_t>(first)] = covered[static_cast<size_t>(c1)] =
            covered[static_cast<size_t>(c2)] = covered[static_cast<size_t>(c3)] = 1;
        chosen.push_back({a, b, a2, b2});
        recurse();
        chosen.pop_back();
        covered[static_cast<size_t>(first)] = covered[static_cast<size_t>(c1)] =
            covered[static_cast<size_t>(c2)] = covered[static_cast<size_t>(c3)] = 0;
      }
    }
  }
};

void check_involution(const std::vector<int>& inv, int size, const char* which) {
  if (static_cast<int>(inv.size()) != size)
    throw Error(std::string("census: involution on ") + which + " has the wrong size");
  for (int x = 0; x < size; ++x) {
    int y = inv[static_cast<size_t>(x)];
    if (y < 0 || y >= size || y == x || inv[static_cast<size_t>(y)] != x)
      throw Error(std::string("census: involution on ") + which +
                  " is not a fixed-point-free involution");
  }
}

}  // namespace

mpz_class enumerate_labeled_with_involutions(int m, int l, const std::vector<int>& inv_a,
                                             const std::vector<int>& inv_b,
                                             const ComplexSink& stream, int guard) {
  check_guard(m, l, guard);
  check_involution(inv_a, 2 * m, "A");
  check_involution(inv_b, 2 * l, "B");
  Enumerator e{m, l, inv_a, inv_b, stream, {}, {}, 0};
  e.run();
  return e.count;
}

mpz_class enumerate_labeled(int m, int l, const ComplexSink& stream, int guard) {
  std::vector<int> inv_a(static_cast<size_t>(2 * m)), inv_b(static_cast<size_t>(2 * l));
  for (int x = 0; x < 2 * m; ++x) inv_a[static_cast<size_t>(x)] = x ^ 1;
  for (int x = 0; x < 2 * l; ++x) inv_b[static_cast<size_t>(x)] = x ^ 1;
  return enumerate_labeled_with_involutions(m, l, inv_a, inv_b, stream, guard);
}

namespace {

// Sparse polynomial over multilinear monomials in up to 64 variables;
// products with overlapping supports are dropped (they can never reach a
// multilinear coefficient again).
using MultilinearPoly = std::unordered_map<uint64_t, int64_t>;

MultilinearPoly poly_mul(const MultilinearPoly& p, const MultilinearPoly& q) {
  MultilinearPoly r;
  for (const auto& [mp, cp] : p)
    for (const auto& [mq, cq] : q) {
      if (mp & mq) continue;
      r[mp | mq] += cp * cq;
    }
  for (auto it = r.begin(); it != r.end();)
    it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

using PolyMatrix = std::vector<std::vector<MultilinearPoly>>;

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  PolyMatrix c(rows, std::vector<MultilinearPoly>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].empty()) continue;
      for (size_t j = 0; j < cols; ++j) {
        if (b[k][j].empty()) continue;
        for (const auto& [mt, ct] : poly_mul(a[i][k], b[k][j])) c[i][j][mt] += ct;
      }
    }
  return c;
}

MultilinearPoly mat_trace(const PolyMatrix& a) {
  MultilinearPoly t;
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& [mt, ct] : a[i][i]) t[mt] += ct;
  return t;
}

}  // namespace

LabeledCensus mass_formula_eval(int m, int l, int guard) {
  check_guard(m, l, guard);
  const int na = 2 * m, nb = 2 * l;
  if (na * nb > 64) throw Error("census: more than 64 corner variables");

  auto var = [&](int a, int b) { return static_cast<uint64_t>(1) << (a * nb + b); };

  // generic matrix X, its transpose, and the involution permutation matrices
  PolyMatrix X(static_cast<size_t>(na), std::vector<MultilinearPoly>(static_cast<size_t>(nb)));
  PolyMatrix Xt(static_cast<size_t>(nb), std::vector<MultilinearPoly>(static_cast<size_t>(na)));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) {
      X[static_cast<size_t>(a)][static_cast<size_t>(b)][var(a, b)] = 1;
      Xt[static_cast<size_t>(b)][static_cast<size_t>(a)][var(a, b)] = 1;
    }
  PolyMatrix tauA(static_cast<size_t>(na), std::vector<MultilinearPoly>(static_cast<size_t>(na)));
  PolyMatrix tauB(static_cast<size_t>(nb), std::vector<MultilinearPoly>(static_cast<size_t>(nb)));
  for (int a = 0; a < na; ++a) tauA[static_cast<size_t>(a)][static_cast<size_t>(a ^ 1)][0] = 1;
  for (int b = 0; b < nb; ++b) tauB[static_cast<size_t>(b)][static_cast<size_t>(b ^ 1)][0] = 1;

  PolyMatrix M = mat_mul(mat_mul(tauA, X), mat_mul(tauB, Xt));
  MultilinearPoly trace = mat_trace(mat_mul(M, M));  // 4 * (sum over squares)

  // coefficient of prod_{a,b} x_{ab} in trace^{ml}: partitions of the full
  // variable set into monomial supports, resolved on the lowest open variable
  const int ml = m * l;
  const uint64_t full = (na * nb == 64) ? ~static_cast<uint64_t>(0)
                                        : (static_cast<uint64_t>(1) << (na * nb)) - 1;
  std::vector<std::vector<std::pair<uint64_t, int64_t>>> by_low(static_cast<size_t>(na * nb));
  for (const auto& [mask, coeff] : trace) {
    int low = __builtin_ctzll(mask);
    by_low[static_cast<size_t>(low)].push_back({mask, coeff});
  }
  for (auto& bucket : by_low)
    std::sort(bucket.begin(), bucket.end());

  std::unordered_map<uint64_t, mpz_class> memo;
  auto extract = [&](auto&& self, uint64_t open) -> mpz_class {
    if (open == 0) return 1;
    auto it = memo.find(open);
    if (it != memo.end()) return it->second;
    mpz_class total = 0;
    int low = __builtin_ctzll(open);
    for (const auto& [mask, coeff] : by_low[static_cast<size_t>(low)]) {
      if (mask & ~open) continue;
      total += coeff * self(self, open & ~mask);
    }
    memo.emplace(open, total);
    return total;
  };
  mpz_class numerator = extract(extract, full);  // = 4^{ml} * labeled count

  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(ml));
  if (numerator % four_pow != 0)
    throw Error("census: extraction is not divisible by 4^{ml}");

  LabeledCensus result;
  result.m = m;
  result.l = l;
  result.count_labeled = numerator / four_pow;

  mpz_class denom = 1;
  mpz_class fac;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(l + m));
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(l));
  denom *= fac;
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(m));
  denom *= fac;
  result.mass = mpq_class(result.count_labeled, denom);
  result.mass.canonicalize();
  return result;
}

mpz_class cube_census_lower_bound(int m, int l, int k, int guard) {
  if (m < 2 || l < 2 || k < 2)
    throw Error("cube_census_lower_bound: m, l, k must all be >= 2");
  return mass_formula_eval(m, l, guard).count_labeled;
}

namespace {

// all involution-respecting self-maps of one color class: permute the pairs,
// optionally flip inside each pair
std::vector<std::vector<int>> relabelings(const std::vector<int>& ids,
                                          const std::vector<int>& inverse) {
  std::vector<int> reps;
  for (int id : ids)
    if (id <= inverse[static_cast<size_t>(id)]) reps.push_back(id);
  const size_t k = reps.size();
  std::vector<int> perm(k);
  for (size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
  std::vector<std::vector<int>> maps;
  do {
    for (uint32_t flips = 0; flips < (1u << k); ++flips) {
      std::vector<int> map(inverse.size(), -1);
      for (size_t i = 0; i < k; ++i) {
        int src = reps[i];
        int dst = reps[static_cast<size_t>(perm[i])];
        if (flips & (1u << i)) dst = inverse[static_cast<size_t>(dst)];
        map[static_cast<size_t>(src)] = dst;
        map[static_cast<size_t>(inverse[static_cast<size_t>(src)])] =
            inverse[static_cast<size_t>(dst)];
      }
      maps.push_back(std::move(map));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

}  // namespace

std::vector<int> relabeling_canonical_key(const Presentation& pres) {
  if (pres.num_colors() != 2)
    throw Error("relabeling_canonical_key: expected a two-color complex");
  const int n = static_cast<int>(pres.labels.size());
  std::vector<int> inverse(static_cast<size_t>(n));
  for (const Label& l : pres.labels) inverse[static_cast<size_t>(l.id)] = l.inverse_id;
  std::vector<int> a_ids = pres.color_class(0), b_ids = pres.color_class(1);

  // per-class maps on the full id space; identity outside the class
  auto maps_a = relabelings(a_ids, inverse);
  auto maps_b = relabelings(b_ids, inverse);

  std::vector<int> best;
  std::vector<int> key;
  std::vector<SquareRelation> squares;
  for (const auto& ma : maps_a) {
    for (const auto& mb : maps_b) {
      auto image = [&](int id) {
        int v = ma[static_cast<size_t>(id)];
        return v != -1 ? v : mb[static_cast<size_t>(id)];
      };
      squares.clear();
      for (const SquareRelation& sq : pres.squares)
        squares.push_back(canonical_group_square(
            pres.labels, {image(sq.word[0]), image(sq.word[1]), image(sq.word[2]),
                          image(sq.word[3])}));
      std::sort(squares.begin(), squares.end());
      key.clear();
      for (const SquareRelation& sq : squares)
        key.insert(key.end(), sq.word.begin(), sq.word.end());
      if (best.empty() || key < best) best = key;
    }
  }
  return best;
}

mpz_class count_distinct_complexes(int m, int l, int guard) {
  std::set<std::vector<int>> keys;
  enumerate_labeled(
      m, l, [&](const Presentation& pres) { keys.insert(relabeling_canonical_key(pres)); },
      guard);
  return mpz_class(keys.size());
}

}  // namespace ybcube
