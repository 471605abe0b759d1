#include "ybcube/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ybcube/ybmap.hpp"

namespace ybcube {

namespace {

int64_t mod_pos(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void sort_unique(std::vector<SquareRelation>& squares) {
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
}

char color_letter(int color) {
  if (color < 0 || color >= 26) throw Error("presentation: too many colors for letter names");
  return static_cast<char>('a' + color);
}

}  // namespace

int Presentation::num_colors() const {
  int n = 0;
  for (const Label& l : labels) n = std::max(n, l.color + 1);
  return n;
}

std::vector<int> Presentation::color_class(int color) const {
  std::vector<int> ids;
  for (const Label& l : labels)
    if (l.color == color) ids.push_back(l.id);
  return ids;
}

std::vector<int> Presentation::valency_vector() const {
  std::vector<int> v(static_cast<size_t>(num_colors()), 0);
  for (const Label& l : labels) v[static_cast<size_t>(l.color)]++;
  return v;
}

SquareRelation canonical_group_square(const std::vector<Label>& labels,
                                      std::array<int, 4> w) {
  auto color = [&](int id) { return labels.at(static_cast<size_t>(id)).color; };
  auto inv = [&](int id) { return labels.at(static_cast<size_t>(id)).inverse_id; };
  if (color(w[0]) != color(w[2]) || color(w[1]) != color(w[3]) || color(w[0]) == color(w[1]))
    throw Error("square: colors do not alternate");
  if (color(w[0]) > color(w[1])) w = {w[1], w[2], w[3], w[0]};
  std::array<std::array<int, 4>, 4> forms = {{
      {w[0], w[1], w[2], w[3]},
      {w[2], w[3], w[0], w[1]},
      {inv(w[2]), inv(w[1]), inv(w[0]), inv(w[3])},
      {inv(w[0]), inv(w[3]), inv(w[2]), inv(w[1])},
  }};
  return SquareRelation{*std::min_element(forms.begin(), forms.end())};
}

SquareRelation canonical_semigroup_relation(std::array<int, 4> w) {
  std::array<int, 4> swapped = {w[2], w[3], w[0], w[1]};
  return SquareRelation{std::min(w, swapped)};
}

Presentation build_gamma(const ZechTable& table, std::vector<int64_t> cosets,
                         bool allow_even_q) {
  const int64_t q = table.q();
  const int64_t order = table.order();
  const int64_t step = q - 1;
  const bool even_q = (q % 2 == 0);
  if (even_q && !allow_even_q)
    throw Error("build_gamma: q is even; the involution has fixed points "
                "(pass allow_even_q to construct anyway)");

  for (int64_t& c : cosets) c = mod_pos(c, step);
  std::sort(cosets.begin(), cosets.end());
  if (std::adjacent_find(cosets.begin(), cosets.end()) != cosets.end())
    throw Error("build_gamma: duplicate cosets");
  if (cosets.size() < 2) throw Error("build_gamma: need at least 2 cosets");

  Presentation pres;
  pres.kind = Presentation::Kind::Group;
  pres.name = "gamma_q" + std::to_string(q);

  // labels grouped by coset, each coset listed in increasing exponent order
  std::map<int64_t, int> id_of;  // exponent -> label id
  for (size_t c = 0; c < cosets.size(); ++c) {
    for (int64_t i = cosets[c]; i < order; i += step) {
      Label l;
      l.id = static_cast<int>(pres.labels.size());
      l.color = static_cast<int>(c);
      l.name = color_letter(l.color) + std::to_string(i);
      pres.labels.push_back(l);
      id_of[i] = l.id;
    }
  }
  for (auto [i, id] : id_of) {
    int64_t partner = even_q ? i : mod_pos(i + order / 2, order);
    pres.labels[static_cast<size_t>(id)].inverse_id = id_of.at(partner);
  }

  for (auto [i, id_i] : id_of) {
    for (auto [j, id_j] : id_of) {
      if (mod_pos(i - j, step) == 0) continue;
      KlPair kl = kl_pair(table, i, j);
      auto it_k = id_of.find(kl.k);
      auto it_l = id_of.find(kl.l);
      if (it_k == id_of.end() || it_l == id_of.end())
        throw Error("build_gamma: M is not closed under the square relations");
      std::array<int, 4> word = {id_i, id_j, pres.inverse(it_l->second),
                                 pres.inverse(it_k->second)};
      pres.squares.push_back(canonical_group_square(pres.labels, word));
    }
  }
  sort_unique(pres.squares);
  return pres;
}

namespace {

struct FixtureData {
  // generator index lists per letter and the involution offset rule
  std::vector<std::vector<int>> indices;  // per color: subscripts
  std::vector<int> inverse_shift;         // subscript of x^-1 = subscript + shift (cyclic)
  std::vector<int> cycle;                 // cyclic modulus of subscripts, 0 = pair by shift
  const char* relators;
};

Presentation make_fixture(const std::string& name, const FixtureData& data) {
  Presentation pres;
  pres.kind = Presentation::Kind::Group;
  pres.name = name;
  std::map<std::pair<int, int>, int> id_of;  // (color, subscript) -> id
  for (size_t c = 0; c < data.indices.size(); ++c) {
    for (int sub : data.indices[c]) {
      Label l;
      l.id = static_cast<int>(pres.labels.size());
      l.color = static_cast<int>(c);
      l.name = color_letter(l.color) + std::to_string(sub);
      pres.labels.push_back(l);
      id_of[{static_cast<int>(c), sub}] = l.id;
    }
  }
  for (size_t c = 0; c < data.indices.size(); ++c) {
    for (int sub : data.indices[c]) {
      int partner = sub + data.inverse_shift[c];
      if (data.cycle[c] > 0) {
        partner = partner % data.cycle[c];
        if (partner == 0) partner = data.cycle[c];  // 1-based subscripts
      }
      int id = id_of.at({static_cast<int>(c), sub});
      pres.labels[static_cast<size_t>(id)].inverse_id =
          id_of.at({static_cast<int>(c), partner});
    }
  }
  // parse relators: words like "a1 b2 a17 b22", separated by ';'
  std::string text = data.relators;
  std::array<int, 4> word{};
  int pos = 0;
  size_t at = 0;
  while (at < text.size()) {
    while (at < text.size() && (text[at] == ' ' || text[at] == '\n' || text[at] == ';')) ++at;
    if (at >= text.size()) break;
    int color = text[at] - 'a';
    ++at;
    int sub = 0;
    while (at < text.size() && text[at] >= '0' && text[at] <= '9') {
      sub = sub * 10 + (text[at] - '0');
      ++at;
    }
    word[static_cast<size_t>(pos++)] = id_of.at({color, sub});
    if (pos == 4) {
      pres.squares.push_back(canonical_group_square(pres.labels, word));
      pos = 0;
    }
  }
  if (pos != 0) throw Error("fixture: trailing partial relator");
  sort_unique(pres.squares);
  return pres;
}

// x_i^-1 = x_{i+12 mod 24}; subscripts step by 4 within each letter
const FixtureData kGamma1 = {
    {{1, 5, 9, 13, 17, 21}, {2, 6, 10, 14, 18, 22}, {3, 7, 11, 15, 19, 23}},
    {12, 12, 12},
    {24, 24, 24},
    "a1 b2 a17 b22 ; a1 b6 a9 b10 ; a1 b10 a9 b6 ; a1 b14 a21 b14 ; a1 b18 a5 b18 ;"
    "a1 b22 a17 b2 ; a5 b2 a21 b6 ; a5 b6 a21 b2 ; a5 b22 a9 b22 ;"
    "a1 c3 a17 c3 ; a1 c7 a13 c19 ; a1 c11 a9 c11 ; a1 c15 a1 c23 ; a5 c3 a5 c19 ;"
    "a5 c7 a21 c7 ; a5 c11 a17 c23 ; a9 c3 a21 c15 ; a9 c7 a9 c23 ;"
    "b2 c3 b18 c23 ; b2 c7 b10 c11 ; b2 c11 b10 c7 ; b2 c15 b22 c15 ; b2 c19 b6 c19 ;"
    "b2 c23 b18 c3 ; b6 c3 b22 c7 ; b6 c7 b22 c3 ; b6 c23 b10 c23"};

// a_i^-1 = a_{i+2}, b_i^-1 = b_{i+3}, c_i^-1 = c_{i+4}, cyclic 1-based
const FixtureData kGamma2 = {
    {{1, 2, 3, 4}, {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6, 7, 8}},
    {2, 3, 4},
    {4, 6, 8},
    "a1 b1 a4 b2 ; a1 b2 a4 b4 ; a1 b3 a2 b1 ; a1 b4 a2 b3 ; a1 b5 a1 b6 ; a2 b2 a2 b6 ;"
    "a1 c1 a2 c8 ; a1 c2 a4 c4 ; a1 c3 a2 c2 ; a1 c4 a3 c3 ;"
    "a1 c5 a1 c6 ; a1 c7 a4 c1 ; a2 c1 a4 c6 ; a2 c4 a2 c7 ;"
    "b1 c1 b5 c4 ; b1 c2 b1 c5 ; b1 c3 b6 c1 ; b1 c4 b3 c6 ; b1 c6 b2 c3 ; b1 c7 b1 c8 ;"
    "b2 c1 b3 c2 ; b2 c2 b5 c5 ; b2 c4 b5 c3 ; b2 c7 b6 c4 ; b3 c1 b6 c6 ; b3 c4 b6 c3"};

}  // namespace

Presentation fixture(const std::string& name) {
  if (name == "gamma1") return make_fixture(name, kGamma1);
  if (name == "gamma2") return make_fixture(name, kGamma2);
  throw Error("fixture: unknown name '" + name + "' (expected gamma1 or gamma2)");
}

Presentation extend_with_commuting_factor(const Presentation& base, int k) {
  if (k < 1) throw Error("extend_with_commuting_factor: k must be >= 1");
  if (base.kind != Presentation::Kind::Group)
    throw Error("extend_with_commuting_factor: base must be a group presentation");

  Presentation out = base;
  const int new_color = base.num_colors();
  const int first = static_cast<int>(base.labels.size());
  for (int i = 0; i < 2 * k; ++i) {
    Label l;
    l.id = first + i;
    l.color = new_color;
    l.inverse_id = first + ((i + k) % (2 * k));
    l.name = color_letter(new_color) + std::to_string(i + 1);
    out.labels.push_back(l);
  }
  // one commutator class per (new pair, old pair)
  for (int i = 0; i < k; ++i) {
    int c = first + i;
    for (const Label& x : base.labels) {
      if (x.id > x.inverse_id) continue;  // one representative per old pair
      std::array<int, 4> word = {c, x.id, out.inverse(c), x.inverse_id};
      out.squares.push_back(canonical_group_square(out.labels, word));
    }
  }
  std::sort(out.squares.begin(), out.squares.end());
  out.squares.erase(std::unique(out.squares.begin(), out.squares.end()), out.squares.end());
  out.name = base.name.empty() ? "extended" : base.name + "+c" + std::to_string(k);
  return out;
}

Presentation structure_presentation(const YBSolution& R, Presentation::Kind kind) {
  const int n = R.size();
  Presentation pres;
  pres.kind = kind;
  pres.name = (kind == Presentation::Kind::Group ? "structure_group" : "structure_semigroup") +
              (R.provenance.empty() ? std::string() : "(" + R.provenance + ")");

  if (kind == Presentation::Kind::Semigroup) {
    pres.labels = R.labels;
    std::set<SquareRelation> rels;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto [t, z] = R.apply(x, y);
        if (t == x && z == y) continue;
        rels.insert(canonical_semigroup_relation({x, y, t, z}));
      }
    pres.squares.assign(rels.begin(), rels.end());
    return pres;
  }

  // group flavor: formal inverses are fresh labels n..2n-1
  pres.labels = R.labels;
  for (int i = 0; i < n; ++i) {
    pres.labels[static_cast<size_t>(i)].inverse_id = n + i;
    Label star;
    star.id = n + i;
    star.color = R.labels[static_cast<size_t>(i)].color;
    star.inverse_id = i;
    star.name = R.labels[static_cast<size_t>(i)].name + "^-1";
    pres.labels.push_back(star);
  }
  std::set<SquareRelation> rels;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [t, z] = R.apply(x, y);
      if (t == x && z == y) continue;
      rels.insert(canonical_group_square(pres.labels, {x, y, n + z, n + t}));
    }
  pres.squares.assign(rels.begin(), rels.end());
  return pres;
}

}  // namespace ybcube
