#include "ybcube/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "ybcube/census.hpp"
#include "ybcube/complex.hpp"
#include "ybcube/homology.hpp"
#include "ybcube/json_io.hpp"
#include "ybcube/ybmap.hpp"

namespace ybcube {

namespace {

using nlohmann::json;

// q = p^e for prime p, or throws
std::pair<int64_t, int> factor_prime_power(int64_t q) {
  if (q < 2) throw Error("cli: q must be >= 2");
  int64_t p = 0;
  for (int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {q, 1};
  int e = 0;
  int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error("cli: q = " + std::to_string(q) + " is not a prime power");
  return {p, e};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cli: cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cli: cannot write " + path);
  out << text;
}

YBSolution solution_for(const Presentation& pres) {
  OneVertexComplex cx = build_complex(pres);
  CheckReport vh = check_vh(cx);
  if (!vh.pass)
    throw Error("cli: the complex fails the VH checks; run `verify --vh` for witnesses");
  return derive_R(cx);
}

YBSolution load_solution_spec(const std::string& spec) {
  if (spec == "gamma1" || spec == "gamma2") return solution_for(fixture(spec));
  json j = read_json_file(spec);
  if (j.contains("map")) return j.get<YBSolution>();
  return solution_for(parse_presentation(j));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const RunConfig& config, std::ostream& out, const json& j) {
  if (config.out_path.empty()) out << dump(j);
  else write_text_file(config.out_path, dump(j));
}

}  // namespace

Presentation load_presentation(const RunConfig& config) {
  Presentation pres;
  if (!config.fixture_name.empty()) {
    pres = fixture(config.fixture_name);
  } else if (!config.input_path.empty()) {
    pres = parse_presentation(read_json_file(config.input_path));
  } else if (config.q > 0 || config.p > 0) {
    int64_t p = config.p;
    int e = config.e;
    if (config.q > 0) std::tie(p, e) = factor_prime_power(config.q);
    FieldSpec spec;
    if (config.modulus.empty()) {
      spec = FieldSpec::with_default_modulus(p, e, config.delta_exponent);
    } else {
      spec.p = p;
      spec.e = e;
      spec.modulus = config.modulus;
      spec.delta_exponent = config.delta_exponent;
    }
    if (config.cosets.empty())
      throw Error("cli: field construction needs --cosets (residues mod q-1)");
    pres = build_gamma(build_field(spec), config.cosets, config.allow_even_q);
  } else {
    throw Error("cli: no input; pass --fixture, --in, or --q/--p with --cosets");
  }
  if (config.extend_k > 0) pres = extend_with_commuting_factor(pres, config.extend_k);
  return pres;
}

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Presentation pres = load_presentation(config);
  OneVertexComplex cx = build_complex(pres);
  json j;
  j["presentation"] = pres;
  j["complex"] = json{{"valency_vector", cx.valency_vector},
                      {"num_squares", cx.squares.size()},
                      {"num_colors", cx.num_colors()}};
  emit(config, out, j);
  if (config.verbosity > 0)
    err << "built " << pres.labels.size() << " generators, " << pres.squares.size()
        << " square classes\n";
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Presentation pres = load_presentation(config);
  OneVertexComplex cx = build_complex(pres);

  bool vh = config.run_vh || config.run_all;
  bool cube = config.run_cube || config.run_all;
  bool ybe = config.run_ybe || config.run_all;
  bool qybe = config.run_qybe || config.run_all;
  if (!vh && !cube && !ybe && !qybe) vh = cube = ybe = qybe = true;

  std::vector<CheckReport> reports;
  if (vh) reports.push_back(check_vh(cx));
  if (cube) reports.push_back(check_cube_condition(cx));
  if (ybe || qybe) {
    try {
      YBSolution r = derive_R(cx);
      if (ybe) reports.push_back(verify_ybe(r));
      if (qybe) reports.push_back(verify_qybe(r));
    } catch (const Error& e) {
      for (const char* name : {"ybe", "qybe"}) {
        if ((name[0] == 'y' && !ybe) || (name[0] == 'q' && !qybe)) continue;
        CheckReport failed;
        failed.check = name;
        failed.pass = false;
        failed.failures = 1;
        failed.witnesses.push_back({"derive_failed", {}, e.what()});
        reports.push_back(std::move(failed));
      }
    }
  }

  bool all_pass = true;
  for (const CheckReport& r : reports) {
    all_pass = all_pass && r.pass;
    err << (r.pass ? "pass" : "FAIL") << "  " << r.check << "\n";
  }
  emit(config, out, json(reports));
  return all_pass ? 0 : 1;
}

int cmd_invariants(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Presentation pres = load_presentation(config);
  AbelianGroup h1 = first_homology(pres);

  json j;
  j["h1"] = h1;
  j["h1"]["pretty"] = h1.to_string();

  OneVertexComplex cx = build_complex(pres);
  if (check_vh(cx).pass) {
    YBSolution r = derive_R(cx);
    std::map<int64_t, int64_t> cycle_counts;
    for (int64_t len : r.cycle_type()) cycle_counts[len]++;
    json cycles = json::object();
    for (auto [len, n] : cycle_counts) cycles[std::to_string(len)] = n;
    j["solution"] = json{{"size", r.size()},
                         {"fixed_pairs", r.fixed_pairs()},
                         {"cycle_counts", cycles}};
  } else {
    err << "complex is not VH; solution invariants skipped\n";
  }

  if (config.json_output) {
    emit(config, out, j);
  } else {
    out << "H1 = " << h1.to_string() << "\n";
    if (j.contains("solution"))
      out << "solution: |X| = " << j["solution"]["size"]
          << ", fixed pairs = " << j["solution"]["fixed_pairs"] << "\n";
  }
  return 0;
}

int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Presentation pres = load_presentation(config);

  if (!config.link_colors.empty()) {
    int i = 0, j = 1;
    std::istringstream in(config.link_colors);
    char comma = 0;
    if (!(in >> i >> comma >> j) || comma != ',')
      throw Error("cli: --link expects two colors like 0,1");
    LinkGraph g = link(build_complex(pres), i, j);
    std::string dot = to_dot(g);
    if (config.out_path.empty()) out << dot;
    else write_text_file(config.out_path, dot);
    if (config.verbosity > 0)
      err << "link(" << i << "," << j << "): " << g.corners.size() << " corners\n";
    return 0;
  }

  YBSolution r = solution_for(pres);
  if (!config.solution_out.empty()) {
    write_text_file(config.solution_out, dump(json(r)));
    if (config.verbosity > 0) err << "solution written to " << config.solution_out << "\n";
  }
  if (!config.matrix_format.empty()) {
    PermutationMatrix matrix = to_matrix(r);
    std::ostringstream text;
    if (config.matrix_format == "mm") write_matrix_market(matrix, text);
    else if (config.matrix_format == "csv") write_matrix_csv(matrix, text);
    else throw Error("cli: unknown matrix format '" + config.matrix_format + "'");
    if (config.out_path.empty()) out << text.str();
    else write_text_file(config.out_path, text.str());
    if (config.verbosity > 0)
      err << "matrix " << matrix.dim << "x" << matrix.dim << " written\n";
  }
  if (config.solution_out.empty() && config.matrix_format.empty())
    throw Error("cli: export needs --matrix, --solution, or --link");
  return 0;
}

int cmd_census(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const int m = config.census_m, l = config.census_l;
  const int guard = config.force_large ? 1 << 20 : kCensusGuard;
  const std::string& method = config.census_method;
  if (method != "enum" && method != "formula" && method != "both")
    throw Error("cli: --method must be enum, formula, or both");

  std::ofstream stream_file;
  ComplexSink sink;
  if (!config.stream_path.empty()) {
    if (method == "formula") throw Error("cli: --stream needs enumeration");
    stream_file.open(config.stream_path, std::ios::binary);
    if (!stream_file) throw Error("cli: cannot write " + config.stream_path);
    sink = [&stream_file](const Presentation& pres) {
      stream_file << json(pres).dump() << "\n";
    };
  }

  json j = json{{"m", m}, {"l", l}};
  mpz_class by_enum, by_formula;
  LabeledCensus census;
  if (method != "formula") {
    by_enum = enumerate_labeled(m, l, sink, guard);
    j["labeled_count_enumeration"] = by_enum.get_str();
  }
  if (method != "enum") {
    census = mass_formula_eval(m, l, guard);
    by_formula = census.count_labeled;
    j["labeled_count_formula"] = by_formula.get_str();
    j["mass"] = census.mass.get_str();
  }
  bool agree = true;
  if (method == "both") {
    agree = (by_enum == by_formula);
    j["agree"] = agree;
  }
  if (config.census_k > 0)
    j["cube_lower_bound"] =
        cube_census_lower_bound(m, l, config.census_k, guard).get_str();
  if (config.census_distinct) {
    if (method == "formula") throw Error("cli: --distinct needs enumeration");
    j["distinct_count"] = count_distinct_complexes(m, l, guard).get_str();
  }

  if (config.json_output) {
    emit(config, out, j);
  } else {
    if (j.contains("labeled_count_enumeration"))
      out << "labeled count (enumeration) = " << by_enum.get_str() << "\n";
    if (j.contains("labeled_count_formula"))
      out << "labeled count (formula)     = " << by_formula.get_str() << "\n";
    if (j.contains("mass")) out << "mass = " << census.mass.get_str() << "\n";
    if (j.contains("cube_lower_bound"))
      out << "cube complex lower bound (k=" << config.census_k
          << ") = " << j["cube_lower_bound"].get<std::string>() << "\n";
    if (j.contains("distinct_count"))
      out << "distinct up to relabeling = " << j["distinct_count"].get<std::string>() << "\n";
    if (method == "both") out << "methods agree: " << (agree ? "yes" : "NO") << "\n";
  }
  if (!agree) err << "census methods disagree; this is a finding, not reconciled\n";
  return agree ? 0 : 1;
}

int cmd_iso(const RunConfig& config, std::ostream& out, std::ostream& err) {
  YBSolution a = load_solution_spec(config.iso_a);
  YBSolution b = load_solution_spec(config.iso_b);
  IsoResult result = iso_test(a, b, config.iso_budget);

  json j;
  switch (result.verdict) {
    case IsoVerdict::Isomorphic: j["verdict"] = "isomorphic"; break;
    case IsoVerdict::NonIsomorphic: j["verdict"] = "non-isomorphic"; break;
    case IsoVerdict::Inconclusive: j["verdict"] = "inconclusive"; break;
  }
  j["reason"] = result.reason;
  j["nodes"] = result.nodes_used;
  if (!result.nu.empty()) {
    json nu = json::array();
    for (size_t x = 0; x < result.nu.size(); ++x) {
      nu.push_back(json{{"from", a.labels[x].name},
                        {"to", b.labels[static_cast<size_t>(result.nu[x])].name}});
    }
    j["nu"] = nu;
  }
  if (config.json_output) {
    emit(config, out, j);
  } else {
    out << j["verdict"].get<std::string>() << " (" << result.reason << ")\n";
    if (!result.nu.empty()) {
      for (size_t x = 0; x < result.nu.size(); ++x)
        out << "  " << a.labels[x].name << " -> "
            << b.labels[static_cast<size_t>(result.nu[x])].name << "\n";
    }
  }
  if (config.verbosity > 0) err << "nodes used: " << result.nodes_used << "\n";
  return 0;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "build") return cmd_build(config, out, err);
    if (config.subcommand == "verify") return cmd_verify(config, out, err);
    if (config.subcommand == "invariants") return cmd_invariants(config, out, err);
    if (config.subcommand == "export") return cmd_export(config, out, err);
    if (config.subcommand == "census") return cmd_census(config, out, err);
    if (config.subcommand == "iso") return cmd_iso(config, out, err);
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ybcube
