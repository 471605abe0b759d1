// End-to-end acceptance suite.  Each criterion prints one PASS/FAIL line and
// the binary exits nonzero if any of them fail.  CLI-facing criteria run the
// real binary (path injected at configure time).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ybcube/census.hpp"
#include "ybcube/cli.hpp"
#include "ybcube/complex.hpp"
#include "ybcube/field.hpp"
#include "ybcube/homology.hpp"
#include "ybcube/json_io.hpp"
#include "ybcube/presentation.hpp"
#include "ybcube/ybmap.hpp"

using namespace ybcube;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/ybcube_acceptance_stdout";
  std::string cmd = std::string(YBCUBE_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  CliResult result;
  result.code = (raw == -1) ? -1 : WEXITSTATUS(raw);
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.out = buffer.str();
  return result;
}

int id_of(const Presentation& pres, const std::string& name) {
  for (const Label& l : pres.labels)
    if (l.name == name) return l.id;
  throw Error("no label named " + name);
}

Presentation altered_gamma1() {
  Presentation g1 = fixture("gamma1");
  auto sq = [&](const char* a, const char* b, const char* c, const char* d) {
    return canonical_group_square(
        g1.labels, {id_of(g1, a), id_of(g1, b), id_of(g1, c), id_of(g1, d)});
  };
  std::set<SquareRelation> squares(g1.squares.begin(), g1.squares.end());
  squares.erase(sq("b2", "c3", "b18", "c23"));
  squares.erase(sq("b2", "c23", "b18", "c3"));
  squares.insert(sq("b2", "c3", "b18", "c3"));
  squares.insert(sq("b2", "c23", "b18", "c23"));
  g1.squares.assign(squares.begin(), squares.end());
  g1.name = "gamma1-altered";
  return g1;
}

struct Harness {
  int failures = 0;

  void criterion(int number, const std::string& title, double budget_ms,
                 const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool pass = true;
    try {
      note = body();
    } catch (const std::exception& e) {
      pass = false;
      note = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (pass && ms > budget_ms) {
      pass = false;
      note = "time limit exceeded: " + std::to_string(ms) + " ms > " +
             std::to_string(budget_ms) + " ms";
    }
    if (!pass) ++failures;
    std::printf("%s  criterion %d: %s (%.0f ms)%s%s\n", pass ? "PASS" : "FAIL", number,
                title.c_str(), ms, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
  }
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw Error(message);
}

}  // namespace

int main() {
  Harness h;

  h.criterion(1, "fixture fidelity", 1000, [] {
    CliResult g1 = run_cli("build --fixture gamma1");
    expect(g1.code == 0, "build gamma1 failed");
    Presentation parsed1 = parse_presentation(json::parse(g1.out));
    expect(parsed1.labels.size() == 18, "gamma1: expected 18 generators");
    int pairs = 0;
    for (const Label& l : parsed1.labels)
      if (l.id < l.inverse_id) ++pairs;
    expect(pairs == 9, "gamma1: expected 9 involution pairs");
    expect(parsed1.squares.size() == 27, "gamma1: expected 27 square relators");
    expect(parsed1 == fixture("gamma1"), "gamma1: canonical relator sets differ");

    CliResult g2 = run_cli("build --fixture gamma2");
    expect(g2.code == 0, "build gamma2 failed");
    Presentation parsed2 = parse_presentation(json::parse(g2.out));
    expect(parsed2.squares.size() == 26, "gamma2: expected 26 square relators");
    expect(parsed2 == fixture("gamma2"), "gamma2: canonical relator sets differ");
    return std::string();
  });

  h.criterion(2, "construction match over primitive exponents", 10000, [] {
    Presentation target = fixture("gamma1");
    std::vector<int64_t> matches;
    for (int64_t d = 1; d < 24; ++d) {
      if (std::gcd(d, static_cast<int64_t>(24)) != 1) continue;
      CliResult r = run_cli("build --q 5 --cosets 1,2,3 --delta-exp " + std::to_string(d));
      expect(r.code == 0, "build --q 5 failed for d=" + std::to_string(d));
      if (parse_presentation(json::parse(r.out)) == target) matches.push_back(d);
    }
    expect(!matches.empty(),
           "FINDING: no primitive exponent reproduces the fixture relators");
    std::string note = "matching delta exponents:";
    for (int64_t d : matches) note += " " + std::to_string(d);
    return note;
  });

  h.criterion(3, "YBE/QYBE over 5832 triples with mutation witnesses", 4000, [] {
    for (const char* name : {"gamma1", "gamma2"}) {
      YBSolution r = derive_R(build_complex(fixture(name)));
      expect(r.size() == 18, "expected |X| = 18");
      auto start = std::chrono::steady_clock::now();
      expect(verify_ybe(r).pass, std::string(name) + ": braid identity failed");
      expect(verify_qybe(r).pass, std::string(name) + ": quantum YBE failed");
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      expect(ms < 1000, "single verification exceeded 1 s");
    }
    // removing a square must produce a witnessed failure
    Presentation removed = fixture("gamma1");
    removed.squares.erase(removed.squares.begin() + 5);
    CheckReport vh = check_vh(build_complex(removed));
    expect(!vh.pass && !vh.witnesses.empty(), "square removal went unnoticed");
    // altering squares (links intact) must fail the braid identity
    YBSolution altered = derive_R(build_complex(altered_gamma1()));
    CheckReport ybe = verify_ybe(altered);
    expect(!ybe.pass && !ybe.witnesses.empty(), "square alteration went unnoticed");
    expect(ybe.witnesses.front().labels.size() == 3, "missing witness triple");
    return std::string();
  });

  h.criterion(4, "first homology invariant factors", 1000, [] {
    AbelianGroup h1 = first_homology(fixture("gamma1"));
    expect(h1.to_string() == "Z/2 x Z/10 x Z/10",
           "H1(gamma1) = " + h1.to_string() + ", expected Z/2 x Z/10 x Z/10");
    AbelianGroup h2 = first_homology(fixture("gamma2"));
    expect(h2.to_string() == "Z/2 x Z/2 x Z/4 x Z/4",
           "H1(gamma2) = " + h2.to_string() + ", expected Z/2 x Z/2 x Z/4 x Z/4");

    // all-letters column convention must agree with the identified one
    for (const char* name : {"gamma1", "gamma2"}) {
      Presentation pres = fixture(name);
      const int n = static_cast<int>(pres.labels.size());
      std::vector<std::array<int, 2>> pairs;
      for (const Label& l : pres.labels)
        if (l.id < l.inverse_id) pairs.push_back({l.id, l.inverse_id});
      IntegerMatrix m(static_cast<int>(pres.squares.size() + pairs.size()), n);
      for (size_t r = 0; r < pres.squares.size(); ++r)
        for (int id : pres.squares[r].word) m.at(static_cast<int>(r), id) += 1;
      for (size_t k = 0; k < pairs.size(); ++k) {
        m.at(static_cast<int>(pres.squares.size() + k), pairs[k][0]) += 1;
        m.at(static_cast<int>(pres.squares.size() + k), pairs[k][1]) += 1;
      }
      expect(smith_normal_form(m) == first_homology(pres),
             std::string(name) + ": column conventions disagree");
    }
    return std::string();
  });

  h.criterion(5, "324x324 permutation matrix export, bit-identical", 5000, [] {
    for (const char* name : {"gamma1", "gamma2"}) {
      std::string args = std::string("export --fixture ") + name + " --matrix mm";
      CliResult first = run_cli(args);
      CliResult second = run_cli(args);
      expect(first.code == 0 && second.code == 0, "export failed");
      expect(first.out == second.out, "matrix export is not byte-stable");
      std::istringstream in(first.out);
      std::string header;
      std::getline(in, header);
      expect(header == "%%MatrixMarket matrix coordinate integer general", "bad header");
      int64_t rows, cols, nnz;
      in >> rows >> cols >> nnz;
      expect(rows == 324 && cols == 324 && nnz == 324, "expected a 324x324 permutation");
      std::vector<int> row_hits(325, 0), col_hits(325, 0);
      for (int64_t k = 0; k < nnz; ++k) {
        int64_t r, c, v;
        in >> r >> c >> v;
        expect(v == 1 && r >= 1 && r <= 324 && c >= 1 && c <= 324, "bad entry");
        row_hits[static_cast<size_t>(r)]++;
        col_hits[static_cast<size_t>(c)]++;
      }
      for (int k = 1; k <= 324; ++k)
        expect(row_hits[static_cast<size_t>(k)] == 1 && col_hits[static_cast<size_t>(k)] == 1,
               "not a permutation matrix");
    }
    return std::string();
  });

  h.criterion(6, "solution isomorphism testing", 60000, [] {
    YBSolution r1 = derive_R(build_complex(fixture("gamma1")));
    YBSolution r2 = derive_R(build_complex(fixture("gamma2")));
    IsoResult split = iso_test(r1, r2);
    expect(split.verdict == IsoVerdict::NonIsomorphic, "gamma1 vs gamma2 not separated");
    expect(split.reason.find("H1") != std::string::npos,
           "expected the H1 filter to decide, got: " + split.reason);

    // relabeled copy: conjugate by x -> 5x + 3 mod 18
    const int d = r1.size();
    std::vector<int> pi(static_cast<size_t>(d));
    for (int x = 0; x < d; ++x) pi[static_cast<size_t>(x)] = (5 * x + 3) % d;
    YBSolution moved;
    moved.labels.resize(static_cast<size_t>(d));
    for (int x = 0; x < d; ++x) {
      Label l = r1.labels[static_cast<size_t>(x)];
      l.id = pi[static_cast<size_t>(x)];
      l.inverse_id = pi[static_cast<size_t>(l.inverse_id)];
      moved.labels[static_cast<size_t>(l.id)] = l;
    }
    moved.table.assign(static_cast<size_t>(d) * static_cast<size_t>(d), {-1, -1});
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        auto [u, v] = r1.apply(x, y);
        moved.table[static_cast<size_t>(pi[static_cast<size_t>(x)]) * static_cast<size_t>(d) +
                    static_cast<size_t>(pi[static_cast<size_t>(y)])] = {
            pi[static_cast<size_t>(u)], pi[static_cast<size_t>(v)]};
      }
    IsoResult same = iso_test(r1, moved);
    expect(same.verdict == IsoVerdict::Isomorphic, "relabeled copy not recognized");
    expect(is_isomorphism(r1, moved, same.nu), "returned nu is not an isomorphism");
    return std::string("nu verified on all 324 pairs");
  });

  h.criterion(7, "census mutual oracle and streamed VH checks", 300000, [] {
    std::vector<std::pair<int, int>> sizes = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1},
                                              {1, 4}, {4, 1}, {2, 2}, {1, 5}, {5, 1}};
    std::string note = "counts:";
    for (auto [m, l] : sizes) {
      mpz_class by_enum = enumerate_labeled(m, l);
      mpz_class by_formula = mass_formula_eval(m, l).count_labeled;
      expect(by_enum == by_formula,
             "methods disagree at (" + std::to_string(m) + "," + std::to_string(l) + "): " +
                 by_enum.get_str() + " vs " + by_formula.get_str());
      if (m <= l) note += " F(" + std::to_string(m) + "," + std::to_string(l) + ")=" +
                          by_enum.get_str();
    }
    // every streamed complex passes check_vh
    mpz_class streamed = 0;
    enumerate_labeled(2, 2, [&](const Presentation& pres) {
      ++streamed;
      expect(check_vh(build_complex(pres)).pass, "streamed (2,2) complex is not VH");
    });
    expect(streamed == 541, "stream size mismatch");
    enumerate_labeled(1, 5, [&](const Presentation& pres) {
      expect(check_vh(build_complex(pres)).pass, "streamed (1,5) complex is not VH");
    });
    return note;
  });

  h.criterion(8, "cube condition matches the braid check on tri-colored triples", 1000, [] {
    for (const char* name : {"gamma1", "gamma2"}) {
      OneVertexComplex cx = build_complex(fixture(name));
      expect(check_cube_condition(cx).pass, std::string(name) + ": cube condition failed");
      expect(verify_ybe(derive_R(cx)).pass, std::string(name) + ": braid identity failed");
    }
    // on the altered complex both checks must fail on the same triples
    OneVertexComplex cx = build_complex(altered_gamma1());
    CheckReport cube = check_cube_condition(cx);
    YBSolution r = derive_R(cx);
    int64_t braid_tri_failures = 0;
    std::array<int, 3> first{-1, -1, -1};
    const int d = r.size();
    auto color = [&](int x) { return r.labels[static_cast<size_t>(x)].color; };
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
          if (color(x) == color(y) || color(y) == color(z) || color(x) == color(z)) continue;
          auto p1 = r.apply(x, y);
          auto p2 = r.apply(p1.second, z);
          auto p3 = r.apply(p1.first, p2.first);
          auto q1 = r.apply(y, z);
          auto q2 = r.apply(x, q1.first);
          auto q3 = r.apply(q2.second, q1.second);
          if (p3.first != q2.first || p3.second != q3.first || p2.second != q3.second) {
            if (braid_tri_failures == 0) first = {x, y, z};
            ++braid_tri_failures;
          }
        }
    expect(!cube.pass, "altered complex passed the cube condition");
    expect(cube.failures == braid_tri_failures,
           "failure counts differ: cube " + std::to_string(cube.failures) + " vs braid " +
               std::to_string(braid_tri_failures));
    expect(cube.witnesses.front().labels ==
               std::vector<int>{first[0], first[1], first[2]},
           "first failing triple differs");
    return std::string("both report ") + std::to_string(braid_tri_failures) +
           " open triples on the altered complex";
  });

  h.criterion(9, "commuting extensions of 20 census complexes verify", 30000, [] {
    int taken = 0;
    mpz_class seen = 0;
    enumerate_labeled(2, 2, [&](const Presentation& pres) {
      ++seen;
      if (taken >= 20 || seen % 27 != 1) return;
      ++taken;
      Presentation ext = extend_with_commuting_factor(pres, 2);
      OneVertexComplex cx = build_complex(ext);
      expect(check_vh(cx).pass, "extension fails VH at sample " + seen.get_str());
      expect(check_cube_condition(cx).pass,
             "extension fails the cube condition at sample " + seen.get_str());
    });
    expect(taken == 20, "expected 20 samples, took " + std::to_string(taken));
    return std::string("20 extensions verified");
  });

  if (h.failures == 0) std::printf("all acceptance criteria passed\n");
  else std::printf("%d criteria FAILED\n", h.failures);
  return h.failures == 0 ? 0 : 1;
}
