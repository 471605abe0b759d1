#include "ybcube/homology.hpp"

#include <algorithm>
#include <map>

namespace ybcube {

std::string AbelianGroup::to_string() const {
  std::string s;
  if (free_rank == 1) s = "Z";
  else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
  for (const mpz_class& d : factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.get_str();
  }
  return s.empty() ? "1" : s;
}

mpz_class AbelianGroup::torsion_order() const {
  mpz_class o = 1;
  for (const mpz_class& d : factors) o *= d;
  return o;
}

IntegerMatrix abelianize(const Presentation& pres) {
  if (pres.kind != Presentation::Kind::Group)
    throw Error("abelianize: presentation must be a group presentation");

  // one column per involution pair, represented by the smaller id
  std::map<int, int> column;  // representative id -> column
  for (const Label& l : pres.labels) {
    int rep = std::min(l.id, l.inverse_id);
    if (!column.count(rep)) {
      int next = static_cast<int>(column.size());
      column[rep] = next;
    }
  }
  IntegerMatrix m(static_cast<int>(pres.squares.size()), static_cast<int>(column.size()));
  for (int r = 0; r < m.rows; ++r) {
    for (int id : pres.squares[static_cast<size_t>(r)].word) {
      const Label& l = pres.label(id);
      int rep = std::min(l.id, l.inverse_id);
      m.at(r, column.at(rep)) += (id == rep) ? 1 : -1;
    }
  }
  return m;
}

namespace {

void swap_rows(IntegerMatrix& a, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
}

void swap_cols(IntegerMatrix& a, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
}

}  // namespace

AbelianGroup smith_normal_form(const IntegerMatrix& input) {
  IntegerMatrix a = input;
  const int n = std::min(a.rows, a.cols);
  std::vector<mpz_class> diag;

  int s = 0;
  while (s < n) {
    // minimal absolute value pivot in the trailing submatrix
    int pr = -1, pc = -1;
    mpz_class best;
    for (int r = s; r < a.rows; ++r)
      for (int c = s; c < a.cols; ++c) {
        if (a.at(r, c) == 0) continue;
        mpz_class v = abs(a.at(r, c));
        if (pr == -1 || v < best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr == -1) break;  // submatrix is zero
    swap_rows(a, s, pr);
    swap_cols(a, s, pc);

    bool reduced = true;
    for (int r = s + 1; r < a.rows; ++r) {
      if (a.at(r, s) == 0) continue;
      mpz_class q = a.at(r, s) / a.at(s, s);  // truncated division keeps |rem| < |pivot|
      if (q != 0)
        for (int c = s; c < a.cols; ++c) a.at(r, c) -= q * a.at(s, c);
      if (a.at(r, s) != 0) reduced = false;
    }
    for (int c = s + 1; c < a.cols; ++c) {
      if (a.at(s, c) == 0) continue;
      mpz_class q = a.at(s, c) / a.at(s, s);
      if (q != 0)
        for (int r = s; r < a.rows; ++r) a.at(r, c) -= q * a.at(r, s);
      if (a.at(s, c) != 0) reduced = false;
    }
    if (!reduced) continue;  // smaller remainders appeared; pick a new pivot

    // pivot must divide the rest of the submatrix or get mixed with a bad row
    int bad_row = -1;
    for (int r = s + 1; r < a.rows && bad_row == -1; ++r)
      for (int c = s + 1; c < a.cols; ++c)
        if (a.at(r, c) % a.at(s, s) != 0) {
          bad_row = r;
          break;
        }
    if (bad_row != -1) {
      for (int c = s; c < a.cols; ++c) a.at(s, c) += a.at(bad_row, c);
      continue;
    }
    diag.push_back(abs(a.at(s, s)));
    ++s;
  }

  AbelianGroup g;
  g.free_rank = a.cols - static_cast<int>(diag.size());
  for (const mpz_class& d : diag)
    if (d > 1) g.factors.push_back(d);
  return g;
}

AbelianGroup first_homology(const Presentation& pres) {
  return smith_normal_form(abelianize(pres));
}

}  // namespace ybcube
