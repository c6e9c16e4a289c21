// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 2 validation, format or
// construction failure, 3 capacity exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrcm/io.hpp"
#include "lrcm/lrcm.hpp"

namespace {

using lrcm::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitCapacity = 3;

struct Global {
  uint64_t seed = 1;
  int jobs = 1;
  bool as_json = false;
};

json read_input(const std::string& path) {
  if (path != "-") return lrcm::io::read_json_file(path);
  try {
    return json::parse(std::cin);
  } catch (const json::parse_error& e) {
    throw lrcm::FormatError(std::string("stdin: ") + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw lrcm::FormatError("cannot write " + path);
  out << text;
}

json params_json(const lrcm::LrcParams& p) {
  json j = {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"tuple", p.to_string()}};
  if (p.r) j["r"] = *p.r;
  if (p.delta) j["delta"] = *p.delta;
  return j;
}

// Lattice-backed documents are validated against the full axiom list so
// that every violation is reported, not only the first.
lrcm::Matroid load_matroid(const json& doc) {
  const bool lattice = doc.is_object() && (doc.value("kind", "") == "lattice" ||
                                           (!doc.contains("kind") && doc.contains("members")));
  if (lattice) {
    const auto z = lrcm::io::lattice_from_json(doc);
    const auto report = lrcm::validate(z);
    if (!report.valid) {
      std::cerr << "lattice axioms violated:\n" << report.to_string();
      throw lrcm::ValidationError(report.first()->axiom, "lattice rejected");
    }
    return lrcm::Matroid::from_lattice_unchecked(z);
  }
  return lrcm::io::matroid_from_json(doc);
}

std::optional<int> distance_or_none(const lrcm::Matroid& m) {
  try {
    return lrcm::min_distance(m);
  } catch (const lrcm::DomainError&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// params

struct ParamsOpts {
  std::string input;
  std::optional<int> delta;
  std::optional<int> r;
};

int cmd_params(const Global& g, const ParamsOpts& o) {
  const auto m = load_matroid(read_input(o.input));
  lrcm::LrcParams p;
  p.n = m.ground_size();
  p.k = m.full_rank();
  const auto d = distance_or_none(m);
  json out = {{"n", p.n}, {"k", p.k}};
  out["d"] = d ? json(*d) : json(nullptr);
  bool ok = true;
  if (o.delta) {
    std::optional<int> r;
    if (o.r) {
      if (lrcm::has_locality(m, *o.r, *o.delta)) r = *o.r;
    } else {
      r = lrcm::minimal_r(m, *o.delta);
    }
    out["delta"] = *o.delta;
    out["r"] = r ? json(*r) : json(nullptr);
    if (r) {
      p.r = r;
      p.delta = o.delta;
    } else {
      ok = false;
    }
  }
  if (d) {
    p.d = *d;
    out["tuple"] = p.to_string();
  }
  if (g.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    if (d) {
      std::cout << "(n,k,d" << (p.r ? ",r,delta" : "") << ") = " << p.to_string() << "\n";
    } else {
      std::cout << "n = " << p.n << ", k = " << p.k << ", d undefined (k = 0 or a coloop)\n";
    }
    if (o.delta && !ok) {
      std::cout << "no " << (o.r ? "(" + std::to_string(*o.r) + "," : "(r,") << *o.delta
                << ")-locality assignment\n";
    }
  }
  return ok ? kExitOk : kExitInvalid;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructOpts {
  std::string kind;
  std::string input;
  int n = 0, k = 0, r = 0, delta = 0;
  std::string out;
  std::string dot;
  bool verify = false;
};

struct Built {
  lrcm::SetSystem sys;
  lrcm::Matroid matroid;
  lrcm::LrcParams declared;
  std::optional<lrcm::WeightedGraph> graph;
  json extra = json::object();
};

// Every invariant the construction promises, on whichever scale applies.
json verify_construction(const Built& b) {
  json checks = json::array();
  auto add = [&](const std::string& name, bool passed, const std::string& note = "") {
    json c = {{"check", name}, {"passed", passed}};
    if (!note.empty()) c["note"] = note;
    checks.push_back(c);
  };
  const auto& m = b.matroid;
  const int n = m.ground_size();
  if (const auto* z = m.lattice()) add("lattice_axioms", lrcm::validate(*z).valid);
  add("set_system_conditions", !lrcm::find_violation(b.sys).has_value());
  if (n <= lrcm::kAxiomCheckLimit) add("rank_axioms", lrcm::validate_rank_axioms(m).valid);
  if (n <= 14) add("gammoid_equivalence", lrcm::equivalence_check(b.sys));
  const auto d = distance_or_none(m);
  add("distance_matches_declared", d && *d == b.declared.d,
      d ? "measured " + std::to_string(*d) : "d undefined");
  if (n <= 16 && d) add("distance_brute_force", lrcm::min_distance_bruteforce(m) == *d);
  if (b.declared.r && b.declared.delta) {
    const int r = *b.declared.r;
    const int delta = *b.declared.delta;
    const auto a = lrcm::construction_locality(b.sys);
    add("locality_assignment", lrcm::verify_locality(m, a) && a.r <= r && a.delta >= delta);
    if (d) {
      add("singleton_bound", *d <= lrcm::singleton_bound(n, b.declared.k, r, delta));
      add("delta_at_most_d", delta <= *d);
    }
    add("rank_bound", b.declared.k <= n - lrcm::ceil_div(b.declared.k, r) * (delta - 1));
  }
  return checks;
}

int cmd_construct(const Global& g, const ConstructOpts& o) {
  std::optional<Built> built;
  if (o.kind == "general") {
    auto sys = lrcm::io::set_system_from_json(read_input(o.input));
    auto p = lrcm::construction_params(sys);
    built = Built{sys, lrcm::general_construction(sys), p, std::nullopt};
  } else if (o.kind == "graph") {
    auto graph = lrcm::io::graph_from_json(read_input(o.input));
    auto sys = lrcm::graph_set_system(graph, o.k, o.r, o.delta);
    auto p = lrcm::graph_params(graph, o.k, o.r, o.delta);
    built = Built{sys, lrcm::general_construction(sys), p, graph};
  } else {
    const auto v = lrcm::dmax_decide(o.n, o.k, o.r, o.delta);
    if (!v.witness_system) {
      // r = k: the uniform matroid is the witness.
      lrcm::SetSystem sys{o.n, o.k, {{lrcm::GroundSubset::full(o.n), o.k}}};
      lrcm::LrcParams p{o.n, o.k, v.witness_d, o.r, o.delta};
      built = Built{sys, lrcm::general_construction(sys), p, std::nullopt};
    } else {
      lrcm::LrcParams p{o.n, o.k, v.witness_d, o.r, o.delta};
      built = Built{*v.witness_system, *v.witness, p, v.witness_graph};
    }
    built->extra = {{"verdict", v.tag}, {"perfect", v.perfect()}, {"lower_source", v.lower_source}};
  }
  const auto& b = *built;
  json doc = lrcm::io::to_json(*b.matroid.lattice());
  doc["params"] = params_json(b.declared);
  doc["setsystem"] = lrcm::io::to_json(b.sys);
  if (b.graph) doc["graph"] = lrcm::io::to_json(*b.graph);
  for (auto& [key, value] : b.extra.items()) doc[key] = value;

  bool ok = true;
  if (o.verify) {
    const auto checks = verify_construction(b);
    for (const auto& c : checks) ok = ok && c["passed"].get<bool>();
    doc["verify"] = checks;
    if (!g.as_json) {
      for (const auto& c : checks) {
        std::cerr << (c["passed"].get<bool>() ? "ok   " : "FAIL ") << c["check"].get<std::string>()
                  << (c.contains("note") ? " (" + c["note"].get<std::string>() + ")" : "") << "\n";
      }
    }
  }
  if (!o.dot.empty()) {
    write_output(o.dot, b.graph ? lrcm::io::to_dot(*b.graph) : lrcm::to_dot(lrcm::build_graph(b.sys)));
  }
  write_output(o.out, doc.dump(2) + "\n");
  if (!g.as_json) std::cerr << "constructed " << b.declared.to_string() << "\n";
  return ok ? kExitOk : kExitInvalid;
}

// ---------------------------------------------------------------------------
// decide

int cmd_decide(const Global& g, int n, int k, int r, int delta) {
  const auto v = lrcm::dmax_decide(n, k, r, delta);
  const auto& p = v.params;
  json out = {{"n", n},
              {"k", k},
              {"r", r},
              {"delta", delta},
              {"verdict", v.tag},
              {"perfect", v.perfect()},
              {"nonexistence", v.nonexistence()},
              {"singleton", p.singleton},
              {"d_upper", v.d_upper},
              {"d_lower", v.d_lower},
              {"lower_source", v.lower_source},
              {"witness_d", v.witness_d},
              {"h", p.h},
              {"a", p.a},
              {"b", p.b},
              {"notes", v.notes}};
  if (v.witness_system) out["witness_setsystem"] = lrcm::io::to_json(*v.witness_system);
  if (v.witness_graph) out["witness_graph"] = lrcm::io::to_json(*v.witness_graph);
  if (g.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "(" << n << "," << k << "," << r << "," << delta << "): " << v.tag << "\n"
              << "  a = " << p.a << ", b = " << p.b << ", ceil(k/r) = " << p.h << "\n"
              << "  singleton bound " << p.singleton << ", d in [" << v.d_lower << ", " << v.d_upper << "]\n"
              << "  witness: " << v.lower_source << " with d = " << v.witness_d << "\n";
    for (const auto& note : v.notes) std::cout << "  note: " << note << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gammoid

int cmd_gammoid(const Global& g, const std::string& input, const std::string& out) {
  const auto sys = lrcm::io::set_system_from_json(read_input(input));
  lrcm::require_conditions(sys);
  const auto graph = lrcm::build_graph(sys);
  const auto dot = lrcm::to_dot(graph);
  std::optional<bool> eq;
  if (sys.n <= 14) eq = lrcm::equivalence_check(sys);
  if (g.as_json) {
    json j = {{"dot", dot}, {"middle", graph.middle.size()}, {"private_counts", graph.private_counts}};
    j["equivalence"] = eq ? json(*eq) : json(nullptr);
    write_output(out, j.dump(2) + "\n");
  } else {
    write_output(out, dot);
    std::cerr << "|H| = " << graph.middle.size() << ", equivalence = "
              << (eq ? (*eq ? "true" : "false") : "skipped (n > 14)") << "\n";
  }
  return eq.value_or(true) ? kExitOk : kExitInvalid;
}

// ---------------------------------------------------------------------------
// represent

struct RepresentOpts {
  std::string input;
  std::vector<uint32_t> primes;
  long attempts = 10'000;
  std::string out;
  bool csv = false;
};

int cmd_represent(const Global& g, const RepresentOpts& o) {
  const auto m = load_matroid(read_input(o.input));
  json tried = json::array();
  for (uint32_t p : o.primes) {
    const auto r = lrcm::find_representation(m, p, g.seed, o.attempts, g.jobs);
    tried.push_back({{"p", p}, {"found", r.found}, {"attempts", r.attempts}});
    if (!r.found) continue;
    if (o.csv) {
      write_output(o.out, lrcm::io::matrix_to_csv(*r.matrix));
    } else {
      json doc = lrcm::io::to_json(*r.matrix);
      doc["seed"] = g.seed;
      doc["attempts"] = r.attempts;
      doc["sampler"] = r.sampler;
      doc["code_distance"] = lrcm::code_min_distance(*r.matrix);
      write_output(o.out, doc.dump(2) + "\n");
    }
    std::cerr << "GF(" << p << "): certified after " << r.attempts << " attempts (" << r.sampler << ")\n";
    return kExitOk;
  }
  std::cerr << "no certified representation within " << o.attempts << " attempts per prime:\n"
            << tried.dump() << "\n";
  return kExitInvalid;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Global& g, const std::string& input, std::optional<int> r, std::optional<int> delta) {
  const json doc = read_input(input);
  const auto m = load_matroid(doc);
  json checks = json::array();
  auto add = [&](const std::string& name, bool passed, const std::string& note = "") {
    json c = {{"check", name}, {"passed", passed}};
    if (!note.empty()) c["note"] = note;
    checks.push_back(c);
  };
  const int n = m.ground_size();
  if (const auto* z = m.lattice()) add("lattice_axioms", lrcm::validate(*z).valid);
  if (n <= lrcm::kAxiomCheckLimit) add("rank_axioms", lrcm::validate_rank_axioms(m).valid);
  if (doc.is_object() && doc.contains("setsystem")) {
    const auto sys = lrcm::io::set_system_from_json(doc["setsystem"]);
    add("set_system_conditions", !lrcm::find_violation(sys).has_value());
    if (const auto* z = m.lattice()) {
      add("lattice_matches_set_system", lrcm::construction_lattice(sys).members() == z->members());
    } else if (n <= lrcm::kExhaustiveLimit) {
      add("rank_matches_set_system", lrcm::same_rank_function(m, lrcm::general_construction(sys)));
    }
    if (n <= 14) add("gammoid_equivalence", lrcm::equivalence_check(sys));
  }
  if (!r && doc.is_object() && doc.contains("params") && doc["params"].contains("r")) {
    r = doc["params"]["r"].get<int>();
    delta = doc["params"]["delta"].get<int>();
  }
  const auto d = distance_or_none(m);
  if (d && n <= 16) add("coatom_distance_matches_brute_force", lrcm::min_distance_bruteforce(m) == *d);
  if (d && doc.is_object() && doc.contains("params")) {
    add("distance_matches_declared", doc["params"]["d"].get<int>() == *d, "measured " + std::to_string(*d));
  }
  if (r && delta) {
    const auto a = lrcm::has_locality(m, *r, *delta);
    add("locality", a.has_value());
    if (a && d) {
      const int k = m.full_rank();
      add("singleton_bound", *d <= lrcm::singleton_bound(n, k, *r, *delta));
      add("delta_at_most_d", *delta <= *d);
      add("rank_bound", k <= n - lrcm::ceil_div(k, *r) * (*delta - 1));
      if (lrcm::is_perfect(m, *a)) {
        const auto rep = lrcm::check_structure(m, *a);
        for (const auto& c : rep.checks) add("structure:" + c.name, c.passed, c.first_failure);
      }
    }
  }
  bool ok = true;
  for (const auto& c : checks) ok = ok && c["passed"].get<bool>();
  if (g.as_json) {
    std::cout << json{{"passed", ok}, {"checks", checks}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << (c["passed"].get<bool>() ? "ok   " : "FAIL ") << c["check"].get<std::string>()
                << (c.contains("note") && !c["note"].get<std::string>().empty()
                        ? " (" + c["note"].get<std::string>() + ")"
                        : "")
                << "\n";
    }
  }
  return ok ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid tools for locally repairable codes"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "seed for every randomized step")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for parallel searches")->capture_default_str()->check(
      CLI::PositiveNumber);
  app.add_flag("--json", g.as_json, "machine-readable output");

  ParamsOpts po;
  auto* params = app.add_subcommand("params", "report (n,k,d) and, for a given delta, the minimal r");
  params->add_option("input", po.input, "matroid JSON, or - for stdin")->required();
  params->add_option("--delta", po.delta, "locality distance");
  params->add_option("--r", po.r, "check this r instead of searching for the minimum")->needs("--delta");

  ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "build a matroid and write its lattice JSON");
  construct->add_option("kind", co.kind, "general | graph | dmax-witness")
      ->required()
      ->check(CLI::IsMember({"general", "graph", "dmax-witness"}));
  construct->add_option("input", co.input, "set system (general) or weighted graph (graph)");
  construct->add_option("--n", co.n, "length (dmax-witness)");
  construct->add_option("--k", co.k, "rank");
  construct->add_option("--r", co.r, "locality");
  construct->add_option("--delta", co.delta, "locality distance");
  construct->add_option("-o,--out", co.out, "output path");
  construct->add_option("--dot", co.dot, "also write the graph as DOT");
  construct->add_flag("--verify", co.verify, "re-run the invariant checks");

  int dn = 0, dk = 0, dr = 0, dd = 0;
  auto* decide = app.add_subcommand("decide", "classify (n,k,r,delta) and attach a witness");
  decide->add_option("n", dn)->required();
  decide->add_option("k", dk)->required();
  decide->add_option("r", dr)->required();
  decide->add_option("delta", dd)->required();

  std::string gin, gout;
  auto* gammoid = app.add_subcommand("gammoid", "layered gammoid of a set system as DOT");
  gammoid->add_option("input", gin, "set system JSON")->required();
  gammoid->add_option("-o,--out", gout, "output path");

  RepresentOpts ro;
  auto* represent = app.add_subcommand("represent", "search for a certified matrix over GF(p)");
  represent->add_option("input", ro.input, "matroid JSON")->required();
  represent->add_option("--prime,-p", ro.primes, "prime(s), tried in order")->required();
  represent->add_option("--attempts", ro.attempts, "attempt budget per prime")->capture_default_str();
  represent->add_option("-o,--out", ro.out, "output path");
  represent->add_flag("--csv", ro.csv, "write the matrix as CSV");

  std::string vin;
  std::optional<int> vr, vd;
  auto* verify = app.add_subcommand("verify", "run every applicable check on a matroid document");
  verify->add_option("input", vin, "matroid JSON")->required();
  verify->add_option("--r", vr, "locality");
  verify->add_option("--delta", vd, "locality distance")->needs("--r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*params) return cmd_params(g, po);
    if (*construct) {
      if (co.kind != "dmax-witness" && co.input.empty()) throw lrcm::FormatError(co.kind + " needs an input file");
      if (co.kind != "general" && (co.k <= 0 || co.r <= 0 || co.delta <= 0)) {
        throw lrcm::DomainError(co.kind + " needs --k, --r and --delta");
      }
      if (co.kind == "dmax-witness" && co.n <= 0) throw lrcm::DomainError("dmax-witness needs --n");
      return cmd_construct(g, co);
    }
    if (*decide) return cmd_decide(g, dn, dk, dr, dd);
    if (*gammoid) return cmd_gammoid(g, gin, gout);
    if (*represent) return cmd_represent(g, ro);
    if (*verify) return cmd_verify(g, vin, vr, vd);
  } catch (const lrcm::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const lrcm::ValidationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const lrcm::FormatError& e) {
    std::cerr << "format: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const lrcm::DomainError& e) {
    std::cerr << "domain: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const json::exception& e) {
    std::cerr << "format: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
