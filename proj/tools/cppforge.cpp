/*
 * Copyright 2026 The cppforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// cppforge command line: cyclotomic polynomials, named constructions and the
// verification harness. Exit status 0 pass, 1 a claim failed, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cppforge/construct.hpp"
#include "cppforge/error.hpp"
#include "cppforge/fieldext.hpp"
#include "cppforge/serialize.hpp"
#include "cppforge/verify.hpp"

namespace cf = cppforge;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<cf::Elem> parse_list(const std::string& s) {
  std::vector<cf::Elem> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(static_cast<cf::Elem>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw cf::Error(cf::ErrorKind::ParseError, "bad list entry '" + tok + "'");
    }
  }
  return out;
}

cf::FieldPtr pick_field(const std::string& spec, std::uint64_t q) {
  if (!spec.empty()) return cf::Field::parse(spec);
  if (q) return cf::Field::of_order(q);
  throw cf::Error(cf::ErrorKind::InvalidSpec, "give --q or --field");
}

void print_cycles_text(const cf::CycleStructure& c) {
  std::cout << "fixed " << c.fixed_points;
  for (const auto& [len, count] : c.cycles) std::cout << "; " << len << "-cycles " << count;
  std::cout << '\n';
}

struct ConstructArgs {
  std::string id;
  std::string field;
  std::uint64_t q = 0;
  std::uint32_t r = 0;
  long long m = -1;
  std::uint64_t seed = 42;
  std::string a1;
  std::string a2;
  std::string h;
  std::string matrix = "companion";
  std::string pair = "inverse";
  std::string emit = "cycles";
  std::string format = "json";
};

int run_construct(const ConstructArgs& a) {
  cf::NamedParams p;
  p.field = pick_field(a.field, a.q);
  if (a.r) p.r = a.r;
  if (a.m >= 0) p.m = static_cast<cf::Elem>(a.m);
  if (!a.a1.empty()) p.a1 = parse_list(a.a1);
  if (!a.a2.empty()) p.a2 = parse_list(a.a2);
  if (!a.h.empty()) p.h = cf::parse_poly(a.h, p.field);
  p.matrix = a.matrix == "conjugate" ? cf::MatrixChoice::RandomConjugate : cf::MatrixChoice::Companion;
  p.pair = a.pair == "independent" ? cf::PairMode::Independent : cf::PairMode::Inverse;
  p.seed = a.seed;

  const cf::ConstructionSpec spec = cf::named_construction(a.id, p);
  if (a.emit == "spec") {
    std::cout << cf::to_json(spec).dump() << '\n';
    return 0;
  }
  const cf::PermTable sigma = cf::build(spec);
  const bool json = a.format == "json";
  if (a.emit == "table") {
    if (json) {
      std::cout << cf::to_json(sigma).dump() << '\n';
    } else {
      const auto vs = sigma.space();
      for (cf::Index x = 0; x < sigma.size(); ++x) {
        cf::Json in = vs.coords(x);
        cf::Json out = vs.coords(sigma(x));
        std::cout << in.dump() << " -> " << out.dump() << '\n';
      }
    }
  } else if (a.emit == "cycles") {
    if (!sigma.bijective()) throw cf::Error(cf::ErrorKind::NotBijective, "sigma is not a permutation");
    const auto c = cf::cycle_structure(sigma);
    if (json) {
      std::cout << cf::to_json(c).dump() << '\n';
    } else {
      print_cycles_text(c);
    }
  } else {
    const cf::BasisPair basis(spec.field, spec.dim());
    const cf::Poly f = cf::to_univariate(basis, sigma);
    if (json) {
      std::cout << cf::univariate_to_json(basis, f).dump() << '\n';
    } else {
      std::cout << cf::to_pretty(f) << '\n';
    }
  }
  return 0;
}

struct VerifyArgs {
  std::string pattern;
  std::string profile = "quick";
  std::uint64_t seed = 42;
  std::vector<std::uint64_t> q;
  std::vector<std::uint32_t> r;
  std::vector<std::string> h;
  std::uint64_t cap = 0;
  unsigned jobs = 1;
  bool timing = false;
  std::string format = "json";
};

int run_verify(const VerifyArgs& a) {
  cf::VerifyOptions o;
  o.profile = cf::parse_profile(a.profile);
  o.seed = a.seed;
  o.jobs = a.jobs;
  o.timing = a.timing;
  if (a.cap) o.cap = a.cap;
  o.axes.q = a.q;
  o.axes.r = a.r;
  o.axes.h = a.h;
  const auto reports = cf::verify(a.pattern, o);
  const auto s = cf::summarize(reports);
  if (a.format == "json") {
    for (const auto& r : reports) std::cout << cf::to_json(r).dump() << '\n';
    cf::Json sum;
    sum["schema"] = cf::kSchema;
    sum["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"hypothesis-skipped", s.skipped}};
    std::cout << sum.dump() << '\n';
  } else {
    for (const auto& r : reports) {
      std::cout << cf::to_string(r.verdict) << ' ' << r.claim << ' ' << r.params.dump();
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << '\n';
    }
    std::cout << "pass " << s.pass << ", fail " << s.fail << ", hypothesis-skipped " << s.skipped << '\n';
  }
  return s.fail == 0 ? 0 : kExitFail;
}

// Re-runs every report in a JSON-lines stream and compares verdict and witness.
int run_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cf::Error(cf::ErrorKind::InvalidSpec, "cannot open " + path);
  std::string line;
  std::size_t same = 0;
  std::size_t differ = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const cf::Json j = cf::parse_json(line);
    if (!j.contains("claim")) continue;  // summary line
    auto want = cf::report_from_json(j);
    want.millis.reset();
    const auto got = cf::verify_point(want.claim, want.params);
    if (got == want) {
      ++same;
    } else {
      ++differ;
      std::cout << "differs: " << cf::to_json(got).dump() << '\n';
    }
  }
  std::cout << "replayed " << same + differ << ", identical " << same << ", different " << differ << '\n';
  return differ == 0 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cppforge: regular complete permutation polynomials over F_{q^d}"};
  app.require_subcommand(1);

  std::uint32_t cyc_n = 0;
  std::string cyc_field;
  std::string cyc_format = "text";
  auto* cyc = app.add_subcommand("cyclotomic", "n-th cyclotomic polynomial over a field");
  cyc->add_option("n", cyc_n, "index n")->required();
  cyc->add_option("field", cyc_field, "field spec, e.g. 7^1 or 2^3")->required();
  cyc->add_option("--format", cyc_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  ConstructArgs ca;
  auto* con = app.add_subcommand("construct", "build a named construction");
  con->add_option("id", ca.id, "construction id, e.g. p4.3 or p4.10")->required();
  con->add_option("--field", ca.field, "field spec");
  con->add_option("--q", ca.q, "field order");
  con->add_option("--r", ca.r, "regularity parameter r");
  con->add_option("--m", ca.m, "free matrix entry m (element index)");
  con->add_option("--seed", ca.seed, "seed for random choices")->capture_default_str();
  con->add_option("--a1", ca.a1, "first coordinate permutation as a comma list");
  con->add_option("--a2", ca.a2, "second coordinate permutation as a comma list");
  con->add_option("--charpoly", ca.h, "characteristic polynomial h, e.g. t^3+t+1");
  con->add_option("--matrix", ca.matrix, "companion or conjugate")->check(CLI::IsMember({"companion", "conjugate"}));
  con->add_option("--pair", ca.pair, "inverse or independent")->check(CLI::IsMember({"inverse", "independent"}));
  con->add_option("--emit", ca.emit, "table, cycles, univariate or spec")
      ->check(CLI::IsMember({"table", "cycles", "univariate", "spec"}));
  con->add_option("--format", ca.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "check claims over their parameter grids");
  ver->add_option("claim", va.pattern, "claim id, dotted prefix, or all")->required();
  ver->add_option("--profile", va.profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  ver->add_option("--seed", va.seed, "base seed")->capture_default_str();
  ver->add_option("--q", va.q, "field orders replacing the default grid")->delimiter(',');
  ver->add_option("--r", va.r, "values of r replacing the default grid")->delimiter(',');
  ver->add_option("--charpoly", va.h, "explicit h for the h-driven claims (repeatable)");
  ver->add_option("--cap", va.cap, "largest q^d to evaluate");
  ver->add_option("--jobs", va.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  ver->add_flag("--timing", va.timing, "add per-point milliseconds (output no longer byte-stable)");
  ver->add_option("--format", va.format, "json or text")->check(CLI::IsMember({"text", "json"}));

  std::string replay_path;
  auto* rep = app.add_subcommand("replay", "re-run a saved report stream and compare");
  rep->add_option("reports", replay_path, "JSON-lines file written by verify")->required();

  std::string claims_format = "json";
  auto* cls = app.add_subcommand("claims", "traceability matrix of all registered claims");
  cls->add_option("--format", claims_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::uint32_t ex_r = 5;
  std::uint64_t ex_q = 2;
  unsigned ex_samples = 20;
  std::uint64_t ex_seed = 42;
  auto* exp = app.add_subcommand("explore", "open-question sweep over non-companion M (no claim)");
  exp->add_option("--r", ex_r, "5 or 7 in the open cases")->capture_default_str();
  exp->add_option("--q", ex_q, "field order")->capture_default_str();
  exp->add_option("--samples", ex_samples, "number of random matrices")->capture_default_str();
  exp->add_option("--seed", ex_seed, "seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cyc) {
      const cf::Poly f = cf::cyclotomic(cyc_n, cf::Field::parse(cyc_field));
      if (cyc_format == "json") {
        std::cout << cf::to_json(f).dump() << '\n';
      } else {
        std::cout << cf::to_pretty(f) << '\n';
      }
      return 0;
    }
    if (*con) return run_construct(ca);
    if (*ver) return run_verify(va);
    if (*rep) return run_replay(replay_path);
    if (*cls) {
      const cf::Json t = cf::traceability();
      if (claims_format == "json") {
        std::cout << t.dump(2) << '\n';
      } else {
        for (const auto& row : t["claims"]) {
          std::cout << row["claim"].get<std::string>() << (row["exploratory"].get<bool>() ? " (exploratory)" : "")
                    << "  points=" << row["quick_points"] << "  " << row["statement"].get<std::string>() << '\n';
        }
      }
      return 0;
    }
    if (*exp) {
      std::cout << cf::explore_general_matrix(ex_r, ex_q, ex_samples, ex_seed).dump() << '\n';
      return 0;
    }
  } catch (const cf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
