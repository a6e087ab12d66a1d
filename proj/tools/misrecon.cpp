// misrecon: command-line front end over the reconfiguration library.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "misrecon/analysis.hpp"
#include "misrecon/const_length.hpp"
#include "misrecon/const_rounds.hpp"
#include "misrecon/errors.hpp"
#include "misrecon/io.hpp"

using namespace misrecon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string graph, alpha, beta, schedule, coloring, out, out_prefix;
  std::string subroutine = "deterministic-id";
  std::string family, algo = "const-length";
  std::string n_list;
  std::uint64_t seed = 0;
  int round_cap = 100000;
  int d = 4;
  std::uint64_t cap = 2'000'000;
  int k = 0;
  double p = 0.1;
  bool distributed = false;
  long step = -1;
};

ReconfigInstance load_instance(const Options& o) {
  ReconfigInstance inst;
  inst.graph = parse_graph(read_file(o.graph));
  inst.alpha = parse_vertex_set(read_file(o.alpha));
  inst.beta = parse_vertex_set(read_file(o.beta));
  check_instance(inst);
  return inst;
}

Subroutine subroutine_of(const Options& o) {
  Subroutine s;
  s.mode = parse_mis_mode(o.subroutine);
  s.seed = o.seed;
  s.round_cap = o.round_cap;
  return s;
}

// schedule goes to --out when given, otherwise to stdout
void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_file(o.out, text);
}

int cmd_const_length(const Options& o) {
  auto inst = load_instance(o);
  auto sub = subroutine_of(o);
  auto res = o.distributed ? schedule_theorem2_distributed(inst, sub) : schedule_theorem2(inst, sub);
  if (!res.schedule) {
    std::cerr << "no schedule: " << check_blocker(inst).witness << "\n";
    return kExitNegative;
  }
  emit(o, format_schedule(*res.schedule));
  if (o.distributed) std::cout << res.report.to_text();
  return kExitOk;
}

int cmd_const_rounds(const Options& o) {
  auto inst = load_instance(o);
  if (!o.coloring.empty()) {
    auto sched = schedule_corollary8(inst, parse_coloring(read_file(o.coloring)));
    emit(o, format_schedule(sched));
    return kExitOk;
  }
  auto res = schedule_theorem3(inst);
  emit(o, format_schedule(res.schedule));
  std::cout << res.report.to_text();
  return kExitOk;
}

int cmd_oracle(const Options& o) {
  auto inst = load_instance(o);
  if (o.d < 1) throw InputError("--d must be >= 1");
  auto res = brute_force_oracle(inst, PropertySpec{o.d}, o.cap);
  std::cout << res.to_text();
  return res.exists || res.inconclusive ? kExitOk : kExitNegative;
}

int cmd_check(const Options& o) {
  auto rep = check_blocker(load_instance(o));
  std::cout << rep.to_text();
  return rep.blocked ? kExitNegative : kExitOk;
}

std::vector<int> parse_n_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw InputError("bad --n entry '" + tok + "'");
    }
  }
  if (out.empty()) throw InputError("bench needs --n");
  return out;
}

int cmd_gen(const Options& o) {
  GadgetParams gp;
  gp.n = o.n_list.empty() ? 0 : parse_n_list(o.n_list).front();
  gp.k = o.k;
  gp.p = o.p;
  gp.seed = o.seed;
  auto inst = gen_gadget(o.family, gp);
  if (o.out_prefix.empty()) throw InputError("gen needs --out-prefix");
  write_file(o.out_prefix + ".graph", format_graph(inst.graph));
  write_file(o.out_prefix + ".alpha", format_vertex_set(inst.alpha));
  write_file(o.out_prefix + ".beta", format_vertex_set(inst.beta));
  return kExitOk;
}

int cmd_validate(const Options& o) {
  auto inst = load_instance(o);
  if (o.d < 1) throw InputError("--d must be >= 1");
  auto sched = parse_schedule(read_file(o.schedule));
  auto rep = validate(inst, sched, PropertySpec{o.d});
  std::cout << rep.describe() << "\n";
  return rep.valid ? kExitOk : kExitNegative;
}

int cmd_bench(const Options& o) {
  if (o.algo != "const-length" && o.algo != "const-rounds") throw InputError("unknown --algo '" + o.algo + "'");
  auto ns = parse_n_list(o.n_list);
  auto sub = subroutine_of(o);
  std::cout << "# misrecon bench seed=" << o.seed << " family=" << o.family << " n=" << o.n_list << " k=" << o.k
            << " p=" << o.p << " algo=" << o.algo << " subroutine=" << o.subroutine << " round_cap=" << o.round_cap
            << "\n";
  std::cout << "family,n,k,schedule_length,rounds_used,messages\n";
  for (int n : ns) {
    GadgetParams gp{n, o.k, o.p, o.seed};
    auto inst = gen_gadget(o.family, gp);
    std::size_t len = 0;
    SimReport rep;
    if (o.algo == "const-length") {
      auto res = schedule_theorem2_distributed(inst, sub);
      if (res.schedule) len = res.schedule->length();
      rep = res.report;
    } else {
      auto res = schedule_theorem3(inst);
      len = res.schedule.length();
      rep = res.report;
    }
    std::cout << o.family << "," << n << "," << o.k << "," << len << "," << rep.rounds_used << ","
              << rep.messages_sent << "\n";
  }
  return kExitOk;
}

int cmd_dot(const Options& o) {
  Graph g = parse_graph(read_file(o.graph));
  VertexSet a, b;
  Schedule s;
  DotOptions opt;
  if (!o.alpha.empty()) {
    a = parse_vertex_set(read_file(o.alpha));
    opt.alpha = &a;
  }
  if (!o.beta.empty()) {
    b = parse_vertex_set(read_file(o.beta));
    opt.beta = &b;
  }
  if (!o.schedule.empty()) {
    s = parse_schedule(read_file(o.schedule));
    opt.schedule = &s;
  }
  if (o.step >= 0) opt.step = static_cast<std::size_t>(o.step);
  emit(o, export_dot(g, opt));
  return kExitOk;
}

void add_instance(CLI::App* c, Options& o) {
  c->add_option("--graph", o.graph, "graph file")->required()->check(CLI::ExistingFile);
  c->add_option("--alpha", o.alpha, "source MIS file")->required()->check(CLI::ExistingFile);
  c->add_option("--beta", o.beta, "target MIS file")->required()->check(CLI::ExistingFile);
}

void add_sim(CLI::App* c, Options& o) {
  c->add_option("--subroutine", o.subroutine, "MIS subroutine")
      ->check(CLI::IsMember({"deterministic-id", "luby"}));
  c->add_option("--seed", o.seed, "seed (default $MISRECON_SEED or 0)");
  c->add_option("--round-cap", o.round_cap, "simulator round cap")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("MISRECON_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: MISRECON_SEED is not an unsigned integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"MIS reconfiguration schedules, oracle and gadgets"};
  app.require_subcommand(1);

  auto* cl = app.add_subcommand("const-length", "28-step schedule");
  add_instance(cl, o);
  add_sim(cl, o);
  cl->add_flag("--distributed", o.distributed, "run the simulated node programs");
  cl->add_option("--out", o.out, "schedule file");

  auto* cr = app.add_subcommand("const-rounds", "constant-round schedule");
  add_instance(cr, o);
  cr->add_option("--coloring", o.coloring, "distance-10 coloring file")->check(CLI::ExistingFile);
  cr->add_option("--out", o.out, "schedule file");

  auto* orc = app.add_subcommand("oracle", "exhaustive search");
  add_instance(orc, o);
  orc->add_option("--d", o.d, "domination distance");
  orc->add_option("--cap", o.cap, "state cap");

  auto* chk = app.add_subcommand("check", "existence characterization");
  add_instance(chk, o);

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--family", o.family, "family")->required();
  gen->add_option("--n", o.n_list, "size");
  gen->add_option("--k", o.k, "degree / leaves");
  gen->add_option("--p", o.p, "edge probability");
  gen->add_option("--seed", o.seed, "seed (default $MISRECON_SEED or 0)");
  gen->add_option("--out-prefix", o.out_prefix, "writes <prefix>.graph/.alpha/.beta")->required();

  auto* val = app.add_subcommand("validate", "check a schedule");
  add_instance(val, o);
  val->add_option("--schedule", o.schedule, "schedule file")->required()->check(CLI::ExistingFile);
  val->add_option("--d", o.d, "domination distance");

  auto* bench = app.add_subcommand("bench", "CSV over generated instances");
  bench->add_option("--family", o.family, "family")->required();
  bench->add_option("--n", o.n_list, "comma-separated sizes")->required();
  bench->add_option("--k", o.k, "degree / leaves");
  bench->add_option("--p", o.p, "edge probability");
  bench->add_option("--algo", o.algo, "const-length | const-rounds");
  add_sim(bench, o);

  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("--graph", o.graph, "graph file")->required()->check(CLI::ExistingFile);
  dot->add_option("--alpha", o.alpha, "alpha file")->check(CLI::ExistingFile);
  dot->add_option("--beta", o.beta, "beta file")->check(CLI::ExistingFile);
  dot->add_option("--schedule", o.schedule, "schedule file")->check(CLI::ExistingFile);
  dot->add_option("--step", o.step, "highlighted step");
  dot->add_option("--out", o.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cl) return cmd_const_length(o);
    if (*cr) return cmd_const_rounds(o);
    if (*orc) return cmd_oracle(o);
    if (*chk) return cmd_check(o);
    if (*gen) return cmd_gen(o);
    if (*val) return cmd_validate(o);
    if (*bench) return cmd_bench(o);
    if (*dot) return cmd_dot(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SimTimeout& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
