// Copyright 2026 The amplekit Authors
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

// amplekit command-line driver.
//
// Usage:
//   amplekit check <class>                 key=value summary of the class
//   amplekit graph <class> [--dot]         1-inclusion graph
//   amplekit peel <class> [--algorithm search|antimatroid|twodim]
//   amplekit repmap build <class>          representation map of a maximum class
//   amplekit repmap verify <class> --repmap <file>
//   amplekit isr <class> [--json] [--solve]
//   amplekit tailmatch <class> -x <coord>
//   amplekit compress <class> --repmap <file> --sample "x1=0,x3=1"
//   amplekit decompress --repmap <file> --set "{1,3}"
//   amplekit generate <spec>               e.g. "hamming_ball,n=5,d=2"
//   amplekit batch <files...> [--checks ample,corners,peel,repmap|all]
//   amplekit collapse <class>
//   amplekit shelling <ordering> [--from-facets]
//
// Class arguments are files in the class format; "-" reads standard input.
// Exit codes: 0 pass, 1 a check failed, 2 usage, parse or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "amplekit/amplekit.hpp"

namespace {

using namespace amplekit;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  int threads = 0;
  std::uint64_t budget = 0;  // 0: per-command default
};

ConceptClass load_class(const std::string& path) {
  if (path == "-") return read_class(std::cin);
  return ingest(path);
}

RepMap load_repmap(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open " + path);
  return read_repmap(in);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_ordering(const Ordering& order, int n) {
  for (Concept c : order) std::cout << to_bitstring(c, n) << '\n';
}

int run_check(const std::string& path) {
  auto c = load_class(path);
  auto report = ample_characterization_report(c);
  auto upper = shattered_complex(c);
  auto lower = strongly_shattered_complex(c);
  const int d = upper.dimension();
  std::cout << "n=" << c.n() << '\n'
            << "size=" << c.size() << '\n'
            << "vc_dim=" << d << '\n'
            << "shattered=" << upper.size() << '\n'
            << "strongly_shattered=" << lower.size() << '\n'
            << "sandwich=" << yes_no(lower.size() <= c.size() && c.size() <= upper.size()) << '\n'
            << "sauer=" << yes_no(c.size() <= phi(d, c.n())) << '\n'
            << "ample=" << yes_no(report.ample) << '\n'
            << "maximum=" << yes_no(is_maximum(c)) << '\n'
            << "isometric=" << yes_no(is_isometric(c)) << '\n'
            << "characterizations=" << (report.agree() ? "agree" : "disagree") << '\n';
  if (!report.ample) {
    auto witness = is_ample(c).witness;
    if (witness) std::cout << "ample_witness=" << format_coordset(*witness) << '\n';
  } else {
    std::cout << "corners=" << corners(c).size() << '\n';
  }
  return report.agree() ? kOk : kCheckFailed;
}

int run_graph(const std::string& path, bool dot) {
  auto c = load_class(path);
  if (dot) {
    std::cout << to_dot(c);
    return kOk;
  }
  for (const Edge& e : InclusionGraph(c).edges())
    std::cout << to_bitstring(e.from, c.n()) << ' ' << to_bitstring(e.to, c.n()) << ' ' << e.coord
              << '\n';
  return kOk;
}

int run_peel(const std::string& path, const std::string& algorithm, const Globals& g) {
  auto c = load_class(path);
  Ordering order;
  if (algorithm == "antimatroid") {
    order = antimatroid_peeling(c);
  } else if (algorithm == "twodim") {
    order = two_dim_peeling(c);
  } else {
    auto result = corner_peeling_search(c, g.budget ? g.budget : kDefaultPeelBudget);
    if (result.status == PeelStatus::not_peelable_proven) {
      std::cout << "NOT_PEELABLE proven\n";
      return kCheckFailed;
    }
    if (result.status == PeelStatus::budget_exhausted) {
      std::cout << "NOT_PEELABLE budget\n";
      return kCheckFailed;
    }
    order = result.ordering;
  }
  print_ordering(order, c.n());
  return classify_ordering(c, order).corner_peeling ? kOk : kCheckFailed;
}

VerifyOptions verify_options(const Globals& g) {
  VerifyOptions opts;
  opts.seed = g.seed;
  return opts;
}

int print_report(const RepMapReport& rep, int n) {
  auto pair_text = [n](const std::optional<std::pair<Concept, Concept>>& p) {
    return p ? to_bitstring(p->first, n) + "," + to_bitstring(p->second, n) : std::string("-");
  };
  std::cout << "bijective=" << yes_no(rep.bijective) << '\n'
            << "r1=" << yes_no(rep.r1) << '\n'
            << "r2=" << yes_no(rep.r2) << '\n'
            << "r3=" << yes_no(rep.r3) << '\n'
            << "r4=" << yes_no(rep.r4) << '\n'
            << "c1=" << yes_no(rep.c1) << '\n'
            << "c2=" << yes_no(rep.c2) << '\n'
            << "exhaustive=" << yes_no(rep.exhaustive) << '\n';
  if (rep.bijective_witness) std::cout << "bijective_witness=" << to_bitstring(*rep.bijective_witness, n) << '\n';
  if (rep.r1_witness) std::cout << "r1_witness=" << pair_text(rep.r1_witness) << '\n';
  if (rep.r2_witness)
    std::cout << "r2_witness=" << format_coordset(rep.r2_witness->domain) << ':'
              << to_bitstring(rep.r2_witness->pattern, n) << ':' << rep.r2_witness->candidates
              << '\n';
  if (rep.r3_witness) std::cout << "r3_witness=" << format_cube(*rep.r3_witness, n) << '\n';
  if (rep.r4_witness) std::cout << "r4_witness=" << pair_text(rep.r4_witness) << '\n';
  if (rep.c1_witness) std::cout << "c1_witness=" << to_bitstring(*rep.c1_witness, n) << '\n';
  if (rep.c2_witness) std::cout << "c2_witness=" << format_cube(*rep.c2_witness, n) << '\n';
  return rep.all() ? kOk : kCheckFailed;
}

int run_isr(const std::string& path, bool json, bool solve, const Globals& g) {
  auto c = load_class(path);
  auto inst = isr_instance(c);
  if (json) std::cout << isr_to_json(inst) << '\n';
  if (!solve) {
    if (!json)
      std::cout << "vertices=" << inst.vertices.size() << "\nparts=" << inst.parts.size()
                << "\nedges=" << inst.edges.size() << '\n';
    return kOk;
  }
  auto result = isr_solve(inst, g.budget ? g.budget : kDefaultIsrBudget);
  static const char* names[] = {"found", "infeasible", "unknown"};
  std::cout << "status=" << names[static_cast<int>(result.status)] << "\nnodes=" << result.nodes
            << '\n';
  if (result.status != IsrStatus::found) return kCheckFailed;
  auto r = isr_to_repmap(inst, result);
  write_repmap(std::cout, r);
  return verify_repmap(c, r, verify_options(g)).all() ? kOk : kCheckFailed;
}

int run_tailmatch(const std::string& path, int x) {
  auto c = load_class(path);
  auto rep = tail_matching_analysis(c, x);
  auto concept_list = [&](const std::vector<Concept>& v) {
    std::string out;
    for (Concept k : v) out += (out.empty() ? "" : ",") + to_bitstring(k, c.n());
    return out.empty() ? std::string("-") : out;
  };
  std::cout << "x=" << rep.x << "\nd=" << rep.d << "\ntail=" << rep.tail.size()
            << "\nlabels=" << rep.labels.size() << "\nedges=" << rep.edges.size()
            << "\nmatching=" << to_string(rep.status)
            << "\ndegree_one_tail=" << rep.degree_one_tail.size()
            << "\ndegree_one_labels=" << rep.degree_one_labels.size()
            << "\ncorner_candidates=" << concept_list(rep.corner_candidates)
            << "\nconfirmed_corners=" << concept_list(rep.confirmed_corners) << '\n';
  return kOk;
}

int run_collapse(const std::string& path) {
  auto c = load_class(path);
  auto seq = collapse_sequence(c);
  for (const auto& p : seq.pairs)
    std::cout << format_cube(p.face, c.n()) << " -> " << format_cube(p.coface, c.n()) << '\n';
  std::cout << "survivor " << format_cube(seq.survivor, c.n()) << '\n';
  auto replay = replay_collapse(c, seq);
  if (!replay.valid) {
    std::cerr << "replay failed at step " << replay.failed_step << ": " << replay.reason << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int run_shelling(const std::string& path, bool from_facets) {
  Ordering order;
  int n = 0;
  {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
      file.open(path);
      if (!file) throw ContractError("cannot open " + path);
      in = &file;
    }
    std::stringstream buffer;
    buffer << in->rdbuf();
    std::string text = buffer.str();
    auto eol = text.find('\n');
    std::string first = text.substr(0, eol);
    if (first.rfind("n=", 0) != 0) throw ParseError("missing header n=<int>", 1);
    n = std::stoi(first.substr(2));
    std::istringstream rest(text);
    order = read_ordering(rest);
  }
  if (from_facets) {
    auto back = shelling_to_ordering(ShellingOrder{n, order});
    print_ordering(back, n);
    return kOk;
  }
  auto sh = ordering_to_shelling(n, order);
  for (Concept f : sh.facets) std::cout << format_facet(f, n) << '\n';
  return first_shelling_violation(sh) ? kCheckFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ample and maximum concept classes: recognition, peelings, representation maps"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for generators and sampled checks");
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)");
  app.add_option("--budget", g.budget, "Search budget for peel and isr");

  std::string class_path;
  auto* check = app.add_subcommand("check", "Summary of a class");
  check->add_option("class", class_path)->required();

  bool dot = false;
  auto* graph = app.add_subcommand("graph", "1-inclusion graph");
  graph->add_option("class", class_path)->required();
  graph->add_flag("--dot", dot, "Emit DOT");

  std::string algorithm = "search";
  auto* peel = app.add_subcommand("peel", "Corner peeling");
  peel->add_option("class", class_path)->required();
  peel->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"search", "antimatroid", "twodim"}));

  std::string repmap_path;
  auto* repmap = app.add_subcommand("repmap", "Representation maps");
  repmap->require_subcommand(1);
  auto* build = repmap->add_subcommand("build", "Build the map of a maximum class");
  build->add_option("class", class_path)->required();
  auto* verify = repmap->add_subcommand("verify", "Check R1-R4, C1 and C2");
  verify->add_option("class", class_path)->required();
  verify->add_option("--repmap", repmap_path)->required();

  bool json = false, solve = false;
  auto* isr = app.add_subcommand("isr", "Independent system of representatives");
  isr->add_option("class", class_path)->required();
  isr->add_flag("--json", json, "Emit the instance as JSON");
  isr->add_flag("--solve", solve, "Search for an ISR");

  int x = 0;
  auto* tail = app.add_subcommand("tailmatch", "Tail matching analysis of a maximum class");
  tail->add_option("class", class_path)->required();
  tail->add_option("-x", x, "Coordinate")->required();

  std::string sample_text, set_text;
  auto* comp = app.add_subcommand("compress", "Compress a realizable sample");
  comp->add_option("class", class_path)->required();
  comp->add_option("--repmap", repmap_path)->required();
  comp->add_option("--sample", sample_text)->required();

  auto* decomp = app.add_subcommand("decompress", "Decode a compressed set");
  decomp->add_option("--repmap", repmap_path)->required();
  decomp->add_option("--set", set_text)->required();

  std::string spec_text;
  auto* gen = app.add_subcommand("generate", "Generate a class");
  gen->add_option("spec", spec_text)->required();

  std::vector<std::string> files;
  std::string checks_text = "ample";
  auto* bat = app.add_subcommand("batch", "CSV summary over class files");
  bat->add_option("files", files)->required();
  bat->add_option("--checks", checks_text, "ample,corners,peel,repmap,stats or all");

  auto* col = app.add_subcommand("collapse", "Collapsing sequence of the cube complex");
  col->add_option("class", class_path)->required();

  bool from_facets = false;
  auto* shell = app.add_subcommand("shelling", "Isometric ordering to partial shelling");
  shell->add_option("ordering", class_path)->required();
  shell->add_flag("--from-facets", from_facets, "Input is a facet order; print the ordering");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  set_threads(g.threads);
  try {
    if (*check) return run_check(class_path);
    if (*graph) return run_graph(class_path, dot);
    if (*peel) return run_peel(class_path, algorithm, g);
    if (*build) {
      write_repmap(std::cout, build_maximum_repmap(load_class(class_path)));
      return kOk;
    }
    if (*verify) {
      auto c = load_class(class_path);
      return print_report(verify_repmap(c, load_repmap(repmap_path), verify_options(g)), c.n());
    }
    if (*isr) return run_isr(class_path, json, solve, g);
    if (*tail) return run_tailmatch(class_path, x);
    if (*comp) {
      auto c = load_class(class_path);
      CompressionScheme scheme(c, load_repmap(repmap_path));
      std::cout << format_coordset(scheme.compress(parse_sample(sample_text, c.n()))) << '\n';
      return kOk;
    }
    if (*decomp) {
      auto r = load_repmap(repmap_path);
      std::cout << to_bitstring(decode(r, parse_coordset(set_text, r.n())), r.n()) << '\n';
      return kOk;
    }
    if (*gen) {
      auto spec = parse_generator_spec(spec_text);
      if (app.count("--seed")) spec.seed = g.seed;
      write_class(std::cout, generate(spec));
      return kOk;
    }
    if (*bat)
      return batch(files, parse_batch_checks(checks_text), std::cout,
                   g.budget ? g.budget : kDefaultPeelBudget);
    if (*col) return run_collapse(class_path);
    if (*shell) return run_shelling(class_path, from_facets);
  } catch (const DecodeError& e) {
    std::cerr << "decode error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
