// Copyright 2026 The lgk Authors
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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "lgk/edge_list_io.h"
#include "lgk/errors.h"
#include "lgk/exact_solver.h"
#include "lgk/forbidden_patterns.h"
#include "lgk/instance_gen.h"
#include "lgk/kernelizer.h"
#include "lgk/recognition.h"

namespace lgk::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json witness_json(const CliquePartitionWitness& w) {
  return Json::parse(witness_to_json(w));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw MalformedInput("cannot write " + path);
  file << text;
  if (!file) throw MalformedInput("failed writing " + path);
}

// A timed run: stages are recorded in order and land under "timings_ms".
class Report {
 public:
  explicit Report(std::string subcommand) { doc_["subcommand"] = std::move(subcommand); }
  Json& operator[](const char* key) { return doc_[key]; }
  void lap(const char* stage) {
    timings_[stage] = ms_since(last_);
    last_ = Clock::now();
  }
  void emit(std::ostream& out) {
    doc_["timings_ms"] = timings_;
    out << doc_.dump() << '\n';
  }

 private:
  Json doc_;
  Json timings_ = Json::object();
  Clock::time_point last_ = Clock::now();
};

struct RecognizeArgs {
  std::string input;
  std::string emit_witness;
  std::string emit_root;
};

int cmd_recognize(const RecognizeArgs& a, std::ostream& out, std::ostream& err) {
  Report report("recognize");
  report["input"] = a.input;
  const Graph g = load_edge_list(a.input);
  report.lap("parse");
  auto witness = recognize(g);
  report.lap("recognize");

  Json result;
  result["n"] = g.num_vertices();
  result["m"] = g.num_edges();
  if (witness) {
    result["verdict"] = "line";
    if (!a.emit_witness.empty()) {
      write_text(a.emit_witness, witness_to_json(*witness) + "\n");
      result["witness"] = a.emit_witness;
    }
    if (!a.emit_root.empty()) {
      save_edge_list(a.emit_root, root_graph(g, *witness).root);
      result["root"] = a.emit_root;
    }
    err << "line graph: " << g.num_vertices() << " vertices, " << witness->cliques.size()
        << " witness cliques\n";
  } else {
    VertexSet w = *find_forbidden_subgraph(g);
    report.lap("forbidden");
    result["verdict"] = "not-line";
    result["forbidden"] = w.items();
    auto id = match_pattern(induced_subgraph(g, w).graph);
    result["pattern"] = id ? Json(*id) : Json();
    err << "not a line graph: vertices";
    for (Vertex v : w) err << ' ' << v;
    err << " induce pattern " << (id ? std::to_string(*id) : "?") << '\n';
  }
  report["result"] = result;
  report.emit(out);
  return kExitOk;
}

struct KernelizeArgs {
  std::string input;
  std::size_t k = 0;
  std::string out;
  bool materialize = false;
};

int cmd_kernelize(const KernelizeArgs& a, std::ostream& out, std::ostream& err) {
  Report report("kernelize");
  report["input"] = a.input;
  const Graph g = load_edge_list(a.input);
  report.lap("parse");
  KernelOutcome outcome = kernelize(g, a.k);
  report.lap("kernelize");

  const std::string stats = kernel_stats_to_json(outcome);
  std::optional<std::pair<Graph, std::size_t>> written;
  if (outcome.verdict == Verdict::kReduced) {
    written.emplace(outcome.kernel, a.k);
  } else if (a.materialize) {
    // Constant instances: (empty graph, k) for YES, (claw, 0) for NO.
    written = outcome.verdict == Verdict::kYes
                  ? std::pair{Graph(), a.k}
                  : std::pair{Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}}), std::size_t{0}};
  }
  Json result = Json::parse(stats);
  if (!a.out.empty() && written) {
    save_edge_list(a.out, written->first);
    write_text(a.out + ".json", stats + "\n");
    result["out"] = a.out;
    result["out_k"] = written->second;
  }
  report["result"] = result;
  report.emit(out);
  err << "kernelize: verdict " << verdict_name(outcome.verdict);
  if (outcome.verdict == Verdict::kReduced) {
    err << ", " << g.num_vertices() << " -> " << outcome.kernel.num_vertices()
        << " vertices (bound " << outcome.stats.bound << "), |S| = " << outcome.stats.s_size;
  }
  err << '\n';
  return kExitOk;
}

struct SolveArgs {
  std::string input;
  std::size_t k = 0;
  std::string oracle = "branch";
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Report report("solve");
  report["input"] = a.input;
  const Graph g = load_edge_list(a.input);
  report.lap("parse");
  auto solution = a.oracle == "brute" ? solve_bruteforce(g, a.k) : solve_branching(g, a.k);
  report.lap("solve");

  Json result;
  result["oracle"] = a.oracle;
  result["k"] = a.k;
  result["verdict"] = solution ? "yes" : "no";
  if (solution) {
    result["deleted"] = edges_json(solution->deleted.items());
    result["certificate"] = witness_json(solution->certificate);
  }
  report["result"] = result;
  report.emit(out);
  if (!solution) {
    err << "NO: more than " << a.k << " edge deletions needed\n";
    return kExitNo;
  }
  err << "YES: delete " << solution->deleted.size() << " edge(s)";
  for (const Edge& e : solution->deleted) err << " {" << e.u << ',' << e.v << '}';
  err << '\n';
  return kExitOk;
}

struct GenArgs {
  GenSpec spec;
  std::string kind = "planted";
  std::size_t levels = 1;
  std::size_t k = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  Report report("gen");
  Json spec = Json::parse(gen_spec_to_json(a.spec));
  spec["kind"] = a.kind;
  Graph g;
  if (a.kind == "planted") {
    g = planted_instance(a.spec).first;
  } else if (a.kind == "root") {
    g = random_root(a.spec.n, a.spec.p, a.spec.seed);
  } else {
    g = chain_instance(a.levels, a.k, a.spec.seed);
    spec["levels"] = a.levels;
    spec["k"] = a.k;
  }
  report.lap("generate");
  save_edge_list(a.out, g);
  write_text(a.out + ".json", spec.dump() + "\n");
  report["input"] = spec;
  report["result"] = {{"n", g.num_vertices()}, {"m", g.num_edges()}, {"out", a.out}};
  report.emit(out);
  err << "gen: " << a.kind << " instance with " << g.num_vertices() << " vertices, "
      << g.num_edges() << " edges -> " << a.out << '\n';
  return kExitOk;
}

struct BenchArgs {
  std::string suite;
  std::uint64_t seed = 0;
  std::string csv;
};

struct BenchRow {
  std::size_t index = 0;
  GenSpec spec;
  std::size_t k = 0;
  KernelOutcome outcome;
  double gen_ms = 0;
  double total_ms = 0;
};

constexpr const char* kStages[] = {"recognize", "modulator", "levels", "rr1", "rr2", "rr3"};

std::string csv_header() {
  std::string h =
      "index,n_root,p,r,k,seed,n,m,verdict,s_size,packed,levels,unleveled,"
      "removed_rr1,removed_rr2,removed_rr3,kernel_n,bound,kernel_m,gen_ms";
  for (const char* stage : kStages) h += std::string(",") + stage + "_ms";
  return h + ",total_ms";
}

std::string csv_row(const BenchRow& row) {
  const KernelStats& s = row.outcome.stats;
  std::ostringstream line;
  std::string levels;
  for (std::size_t i = 0; i < s.level_sizes.size(); ++i) {
    levels += (i ? "|" : "") + std::to_string(s.level_sizes[i]);
  }
  line << row.index << ',' << row.spec.n << ',' << row.spec.p << ',' << row.spec.r << ','
       << row.k << ',' << row.spec.seed << ',' << s.n << ',' << s.m << ','
       << verdict_name(row.outcome.verdict) << ',' << s.s_size << ',' << s.packed << ','
       << levels << ',' << s.unleveled << ',' << s.removed_vertices[0] << ','
       << s.removed_vertices[1] << ',' << s.removed_vertices[2] << ',' << s.kernel_n << ','
       << s.bound << ',' << s.kernel_m << ',' << row.gen_ms;
  std::map<std::string, double> stage_ms(s.stage_ms.begin(), s.stage_ms.end());
  for (const char* stage : kStages) {
    line << ',';
    if (auto it = stage_ms.find(stage); it != stage_ms.end()) line << it->second;
  }
  line << ',' << row.total_ms;
  return line.str();
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  Report report("bench");
  const SweepSpec sweep = parse_sweep(a.suite);
  report["input"] = {{"suite", a.suite}, {"seed", a.seed}};

  std::vector<BenchRow> rows;
  for (std::size_t n : sweep.n) {
    for (double p : sweep.p) {
      for (std::size_t r : sweep.r) {
        for (std::size_t k : sweep.k) {
          BenchRow row;
          row.index = rows.size();
          row.spec = GenSpec{n, p, r, a.seed + row.index};
          row.k = k;
          rows.push_back(std::move(row));
        }
      }
    }
  }

  const std::size_t threads = bench_threads(rows.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(rows.size());
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
      BenchRow& row = rows[i];
      try {
        const auto start = Clock::now();
        const Graph g = planted_instance(row.spec).first;
        row.gen_ms = ms_since(start);
        row.outcome = kernelize(g, row.k);
        row.total_ms = ms_since(start);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  report.lap("sweep");

  std::ofstream csv(a.csv);
  if (!csv) throw MalformedInput("cannot write " + a.csv);
  csv << csv_header() << '\n';
  std::size_t over_bound = 0;
  for (const BenchRow& row : rows) {
    csv << csv_row(row) << '\n';
    if (row.outcome.stats.kernel_n > row.outcome.stats.bound) ++over_bound;
  }
  if (!csv) throw MalformedInput("failed writing " + a.csv);

  report["result"] = {{"instances", rows.size()}, {"threads", threads}, {"csv", a.csv}};
  report.emit(out);
  err << "bench: " << rows.size() << " instance(s) on " << threads << " thread(s) -> " << a.csv
      << '\n';
  if (over_bound != 0) {
    throw InternalInvariantError(std::to_string(over_bound) + " kernel(s) exceed the bound");
  }
  return kExitOk;
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw MalformedInput("bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

template <typename T>
std::vector<T> parse_values(std::string_view text, std::string_view key) {
  std::vector<T> out;
  if (text.find(',') != std::string_view::npos) {
    for (std::size_t pos = 0; pos <= text.size();) {
      std::size_t comma = std::min(text.find(',', pos), text.size());
      out.push_back(parse_number<T>(text.substr(pos, comma - pos), key));
      pos = comma + 1;
    }
    return out;
  }
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0; pos <= text.size();) {
    std::size_t colon = std::min(text.find(':', pos), text.size());
    parts.push_back(text.substr(pos, colon - pos));
    pos = colon + 1;
  }
  if (parts.size() == 1) return {parse_number<T>(parts[0], key)};
  if (parts.size() > 3) throw MalformedInput("bad range '" + std::string(text) + "'");
  const T lo = parse_number<T>(parts[0], key);
  const T hi = parse_number<T>(parts[1], key);
  const T step = parts.size() == 3 ? parse_number<T>(parts[2], key) : T{1};
  if (!(step > T{0})) throw MalformedInput("range step must be positive in '" + std::string(text) + "'");
  // Index-based so that fractional steps do not accumulate rounding error.
  for (std::size_t i = 0;; ++i) {
    const T v = static_cast<T>(lo + static_cast<T>(i) * step);
    if (v > hi + (std::is_floating_point_v<T> ? step * T(1e-9) : T{0})) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace

SweepSpec parse_sweep(std::string_view text) {
  SweepSpec sweep{{20}, {0.2}, {1}, {1}};
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t semi = std::min(text.find(';', pos), text.size());
    std::string_view item = text.substr(pos, semi - pos);
    pos = semi + 1;
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw MalformedInput("expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      sweep.n = parse_values<std::size_t>(value, key);
    } else if (key == "p") {
      sweep.p = parse_values<double>(value, key);
    } else if (key == "r") {
      sweep.r = parse_values<std::size_t>(value, key);
    } else if (key == "k") {
      sweep.k = parse_values<std::size_t>(value, key);
    } else {
      throw MalformedInput("unknown sweep key '" + std::string(key) + "'");
    }
  }
  return sweep;
}

std::size_t bench_threads(std::size_t jobs) {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LGK_THREADS")) {
    std::size_t cap = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc() && ptr == text.data() + text.size() && cap > 0) threads = cap;
  }
  return std::max<std::size_t>(1, std::min(threads, jobs));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line-graph recognition and edge-deletion kernelization", "lgk"};
  app.require_subcommand(1);

  RecognizeArgs rec;
  auto* recognize_cmd = app.add_subcommand("recognize", "Decide whether a graph is a line graph");
  recognize_cmd->add_option("--input", rec.input, "Edge-list file")->required();
  recognize_cmd->add_option("--emit-witness", rec.emit_witness, "Write the clique partition JSON");
  recognize_cmd->add_option("--emit-root", rec.emit_root, "Write a root graph edge list");

  KernelizeArgs ker;
  auto* kernelize_cmd = app.add_subcommand("kernelize", "Reduce (G, k) to a small equivalent instance");
  kernelize_cmd->add_option("--input", ker.input, "Edge-list file")->required();
  kernelize_cmd->add_option("--k", ker.k, "Deletion budget")->required();
  kernelize_cmd->add_option("--out", ker.out, "Kernel edge list; stats go to OUT.json");
  kernelize_cmd->add_flag("--materialize", ker.materialize,
                          "Write (empty graph, k) or (claw, 0) for yes / no verdicts");

  SolveArgs sol;
  auto* solve_cmd = app.add_subcommand("solve", "Exact answer for (G, k)");
  solve_cmd->add_option("--input", sol.input, "Edge-list file")->required();
  solve_cmd->add_option("--k", sol.k, "Deletion budget")->required();
  solve_cmd->add_option("--oracle", sol.oracle, "brute or branch")
      ->check(CLI::IsMember({"brute", "branch"}));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
  gen_cmd->add_option("--n", gen.spec.n, "Root graph vertices")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen.spec.p, "Root edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--r", gen.spec.r, "Planted noise edges");
  gen_cmd->add_option("--seed", gen.spec.seed, "64-bit seed");
  gen_cmd->add_option("--kind", gen.kind, "planted, root or chain")
      ->check(CLI::IsMember({"planted", "root", "chain"}));
  gen_cmd->add_option("--levels", gen.levels, "Chain length (chain only)")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--k", gen.k, "Budget that bounds chain clique sizes (chain only)");
  gen_cmd->add_option("--out", gen.out, "Edge-list file; the spec goes to OUT.json")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Kernelize a sweep of planted instances");
  bench_cmd->add_option("--suite", bench.suite, "Sweep such as \"n=40;p=0.1;r=0:3;k=1:5\"")
      ->required();
  bench_cmd->add_option("--seed", bench.seed, "Base seed; instance i uses seed + i")->required();
  bench_cmd->add_option("--csv", bench.csv, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (recognize_cmd->parsed()) return cmd_recognize(rec, out, err);
    if (kernelize_cmd->parsed()) return cmd_kernelize(ker, out, err);
    if (solve_cmd->parsed()) return cmd_solve(sol, out, err);
    if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
    return cmd_bench(bench, out, err);
  } catch (const InternalInvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace lgk::cli
