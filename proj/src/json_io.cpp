#include "ybcube/json_io.hpp"

#include <algorithm>

namespace ybcube {

using nlohmann::json;

void to_json(json& j, const FieldSpec& spec) {
  j = json{{"p", spec.p},
           {"e", spec.e},
           {"modulus", spec.modulus},
           {"delta_exponent", spec.delta_exponent}};
}

void from_json(const json& j, FieldSpec& spec) {
  j.at("p").get_to(spec.p);
  j.at("e").get_to(spec.e);
  j.at("modulus").get_to(spec.modulus);
  j.at("delta_exponent").get_to(spec.delta_exponent);
}

void to_json(json& j, const Presentation& pres) {
  json labels = json::array();
  for (const Label& l : pres.labels)
    labels.push_back(json{{"id", l.id},
                          {"name", l.name},
                          {"color", l.color},
                          {"inverse", l.inverse_id}});
  json squares = json::array();
  for (const SquareRelation& sq : pres.squares)
    squares.push_back(json{sq.word[0], sq.word[1], sq.word[2], sq.word[3]});
  j = json{{"labels", labels},
           {"squares", squares},
           {"kind", pres.kind == Presentation::Kind::Group ? "group" : "semigroup"}};
}

void from_json(const json& j, Presentation& pres) {
  pres = Presentation{};
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "group") pres.kind = Presentation::Kind::Group;
  else if (kind == "semigroup") pres.kind = Presentation::Kind::Semigroup;
  else throw Error("presentation JSON: unknown kind '" + kind + "'");

  for (const json& lj : j.at("labels")) {
    Label l;
    lj.at("id").get_to(l.id);
    lj.at("name").get_to(l.name);
    lj.at("color").get_to(l.color);
    lj.at("inverse").get_to(l.inverse_id);
    pres.labels.push_back(l);
  }
  std::sort(pres.labels.begin(), pres.labels.end(),
            [](const Label& a, const Label& b) { return a.id < b.id; });
  for (size_t i = 0; i < pres.labels.size(); ++i)
    if (pres.labels[i].id != static_cast<int>(i))
      throw Error("presentation JSON: label ids must be dense 0..n-1");

  for (const json& sj : j.at("squares")) {
    if (!sj.is_array() || sj.size() != 4)
      throw Error("presentation JSON: squares must be 4-element arrays");
    std::array<int, 4> word = {sj[0].get<int>(), sj[1].get<int>(), sj[2].get<int>(),
                               sj[3].get<int>()};
    for (int id : word)
      if (id < 0 || id >= static_cast<int>(pres.labels.size()))
        throw Error("presentation JSON: square references unknown label");
    pres.squares.push_back(pres.kind == Presentation::Kind::Group
                               ? canonical_group_square(pres.labels, word)
                               : canonical_semigroup_relation(word));
  }
  std::sort(pres.squares.begin(), pres.squares.end());
  pres.squares.erase(std::unique(pres.squares.begin(), pres.squares.end()), pres.squares.end());
}

void to_json(json& j, const Witness& w) {
  j = json{{"kind", w.kind}, {"labels", w.labels}, {"detail", w.detail}};
}

void to_json(json& j, const CheckReport& report) {
  j = json{{"check", report.check}, {"pass", report.pass}, {"witnesses", report.witnesses}};
}

void to_json(json& j, const YBSolution& r) {
  json labels = json::array();
  for (const Label& l : r.labels)
    labels.push_back(json{{"id", l.id},
                          {"name", l.name},
                          {"color", l.color},
                          {"inverse", l.inverse_id}});
  json map = json::array();
  const int d = r.size();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      auto [u, v] = r.apply(x, y);
      map.push_back(json{x, y, u, v});
    }
  j = json{{"X", labels}, {"map", map}};
}

void from_json(const json& j, YBSolution& r) {
  r = YBSolution{};
  for (const json& lj : j.at("X")) {
    Label l;
    lj.at("id").get_to(l.id);
    lj.at("name").get_to(l.name);
    lj.at("color").get_to(l.color);
    lj.at("inverse").get_to(l.inverse_id);
    r.labels.push_back(l);
  }
  std::sort(r.labels.begin(), r.labels.end(),
            [](const Label& a, const Label& b) { return a.id < b.id; });
  const int d = r.size();
  r.table.assign(static_cast<size_t>(d) * static_cast<size_t>(d), {-1, -1});
  for (const json& mj : j.at("map")) {
    int x = mj[0].get<int>(), y = mj[1].get<int>();
    if (x < 0 || y < 0 || x >= d || y >= d) throw Error("solution JSON: pair out of range");
    r.table[static_cast<size_t>(x) * static_cast<size_t>(d) + static_cast<size_t>(y)] = {
        mj[2].get<int>(), mj[3].get<int>()};
  }
  for (auto [u, v] : r.table)
    if (u == -1 || v == -1) throw Error("solution JSON: map is not total");
  if (!r.is_bijection()) throw Error("solution JSON: map is not a bijection");
}

void to_json(json& j, const AbelianGroup& g) {
  json factors = json::array();
  for (const mpz_class& d : g.factors) factors.push_back(d.get_str());
  j = json{{"rank", g.free_rank}, {"factors", factors}};
}

void to_json(json& j, const LabeledCensus& census) {
  j = json{{"m", census.m},
           {"l", census.l},
           {"labeled_count", census.count_labeled.get_str()},
           {"mass", census.mass.get_str()}};
}

Presentation parse_presentation(const json& j) {
  if (j.contains("presentation")) return j.at("presentation").get<Presentation>();
  return j.get<Presentation>();
}

}  // namespace ybcube
