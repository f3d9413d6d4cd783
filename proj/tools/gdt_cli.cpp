#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gdt/codec.hpp"
#include "gdt/generate.hpp"
#include "gdt/json_io.hpp"
#include "gdt/pipeline.hpp"
#include "gdt/prime.hpp"

namespace {

constexpr const char* kSchema = "gdt-report/1";

enum ExitCode { kOk = 0, kVerifyFail = 1, kInputError = 2, kBudgetExhausted = 3 };

struct InputOpts {
  std::string path = "-";
  std::string format = "auto";
};

void add_input_opts(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("-i,--input", in.path, "input file, '-' for standard input");
  cmd->add_option("-f,--format", in.format, "graph6 | edges | auto")
      ->check(CLI::IsMember({"graph6", "edges", "auto"}));
}

gdt::Graph read_graph(const InputOpts& in) {
  std::string data;
  if (in.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    data = ss.str();
  } else {
    std::ifstream f(in.path, std::ios::binary);
    if (!f) throw gdt::InputError("cannot open " + in.path);
    std::ostringstream ss;
    ss << f.rdbuf();
    data = ss.str();
  }
  // Trim trailing newline noise for graph6.
  while (!data.empty() && (data.back() == '\n' || data.back() == '\r')) data.pop_back();
  if (in.format == "graph6") return gdt::graph6_read(data);
  if (in.format == "edges") return gdt::edge_list_read(data);
  return gdt::codec_read_auto(data);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("GDT_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw gdt::InputError("GDT_BUDGET must be a positive integer");
  }
  return gdt::Budget{}.limit;
}

void emit(const gdt::json& body, const std::string& command) {
  gdt::json j{{"schema", kSchema}, {"command", command}};
  j["report"] = body;
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph decomposition toolkit: cutsets, closures, prime decomposition,\n"
               "exact treewidth/rankwidth, structure detectors and pipelines"};
  app.require_subcommand(1);

  InputOpts in;
  std::uint64_t budget_limit = 0;
  app.add_option("-b,--budget", budget_limit,
                 "work budget in elementary steps (default: GDT_BUDGET or 50000000)");

  auto* c_tw = app.add_subcommand("treewidth", "exact treewidth with a tree decomposition");
  add_input_opts(c_tw, in);
  auto* c_rw = app.add_subcommand("rankwidth", "exact rankwidth with a rank decomposition");
  add_input_opts(c_rw, in);

  auto* c_dec = app.add_subcommand("decompose", "prime decomposition trace");
  add_input_opts(c_dec, in);
  std::string dec_class = "all";
  bool one_cutsets_only = false;
  c_dec->add_option("--class", dec_class, "class filter: all | isk4 | unique-chord")
      ->check(CLI::IsMember({"all", "isk4", "unique-chord"}));
  c_dec->add_flag("--one-cutsets-only", one_cutsets_only,
                  "odd steps split on 1-cutsets instead of all clique cutsets");

  auto* c_det = app.add_subcommand("detect", "forbidden-structure detectors");
  add_input_opts(c_det, in);
  std::string pattern;
  int det_t = 3;
  c_det->add_option("pattern", pattern,
                    "isk4 | wheel | unique-chord-cycle | clique | biclique | clean")
      ->required()
      ->check(CLI::IsMember({"isk4", "wheel", "unique-chord-cycle", "clique", "biclique",
                             "clean"}));
  c_det->add_option("-t", det_t, "size parameter for clique / biclique / clean");

  auto* c_rec = app.add_subcommand("recognize", "basic-class recognizers");
  add_input_opts(c_rec, in);
  std::string theorem;
  c_rec->add_option("theorem", theorem, "isk4 | unique-chord")
      ->required()
      ->check(CLI::IsMember({"isk4", "unique-chord"}));

  auto* c_ver = app.add_subcommand("verify", "lemma verification suites");
  std::string lemma = "all";
  int trials = 100;
  std::uint64_t vseed = 1;
  c_ver->add_option("lemma", lemma, "lemma name or 'all'");
  c_ver->add_option("--trials", trials, "trials per lemma");
  c_ver->add_option("--seed", vseed, "suite seed");

  auto* c_gen = app.add_subcommand("generate", "graph family generators");
  gdt::GeneratorSpec spec;
  std::string out_format = "graph6";
  c_gen->add_option("family", spec.family, "family name")->required();
  c_gen->add_option("-n", spec.n, "order parameter");
  c_gen->add_option("-m", spec.m, "secondary size parameter");
  c_gen->add_option("-t", spec.t, "wall parameter");
  c_gen->add_option("-p,--percent", spec.percent, "edge probability in percent");
  c_gen->add_option("--seed", spec.seed, "generator seed");
  c_gen->add_option("--lengths", spec.lengths, "attachment path lengths");
  c_gen->add_option("-o,--output-format", out_format, "graph6 | edges")
      ->check(CLI::IsMember({"graph6", "edges"}));

  auto* c_pipe = app.add_subcommand("pipeline", "end-to-end bounded-treewidth pipelines");
  add_input_opts(c_pipe, in);
  std::string which;
  int pipe_t = 3;
  c_pipe->add_option("which", which, "isk4 | unique-chord")
      ->required()
      ->check(CLI::IsMember({"isk4", "unique-chord"}));
  c_pipe->add_option("-t", pipe_t, "cleanliness parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    gdt::Budget budget;
    if (budget_limit > 0)
      budget.limit = budget_limit;
    else
      budget.limit = default_budget();

    if (*c_tw) {
      gdt::Graph g = read_graph(in);
      auto r = gdt::treewidth_exact(g, budget);
      emit(gdt::to_json(g, r), "treewidth");
      return r.exact ? kOk : kBudgetExhausted;
    }
    if (*c_rw) {
      gdt::Graph g = read_graph(in);
      auto r = gdt::rankwidth_exact(g, budget);
      emit(gdt::to_json(g, r), "rankwidth");
      return r.exact ? kOk : kBudgetExhausted;
    }
    if (*c_dec) {
      gdt::Graph g = read_graph(in);
      gdt::GraphClass cls = dec_class == "isk4"         ? gdt::GraphClass::kIsk4WheelFree
                            : dec_class == "unique-chord" ? gdt::GraphClass::kUniqueChordFree
                                                          : gdt::GraphClass::kAllGraphs;
      auto trace = gdt::prime_decompose(g, cls, budget, one_cutsets_only);
      emit(gdt::to_json(trace), "decompose");
      return trace.complete ? kOk : kBudgetExhausted;
    }
    if (*c_det) {
      gdt::Graph g = read_graph(in);
      gdt::json body;
      bool exhaustive = true;
      if (pattern == "isk4") {
        auto d = gdt::detect_isk4(g, budget);
        exhaustive = d.exhaustive;
        body = {{"pattern", pattern}, {"found", d.found()}};
        if (d.witness) body["witness"] = gdt::to_json(*d.witness);
      } else if (pattern == "wheel") {
        auto d = gdt::detect_wheel(g, budget);
        exhaustive = d.exhaustive;
        body = {{"pattern", pattern}, {"found", d.found()}};
        if (d.witness) body["witness"] = gdt::to_json(*d.witness);
      } else if (pattern == "unique-chord-cycle") {
        auto d = gdt::detect_unique_chord_cycle(g, budget);
        exhaustive = d.exhaustive;
        body = {{"pattern", pattern}, {"found", d.found()}};
        if (d.witness) body["witness"] = gdt::to_json(*d.witness);
      } else if (pattern == "clique") {
        auto w = gdt::detect_clique(g, det_t);
        body = {{"pattern", pattern}, {"t", det_t}, {"found", w.has_value()}};
        if (w) body["witness"] = gdt::to_json(*w);
      } else if (pattern == "biclique") {
        auto w = gdt::detect_biclique(g, det_t);
        body = {{"pattern", pattern}, {"t", det_t}, {"found", w.has_value()}};
        if (w) body["witness"] = {{"a", gdt::to_json(w->first)}, {"b", gdt::to_json(w->second)}};
      } else {  // clean
        auto r = gdt::is_t_clean(g, det_t, budget);
        exhaustive = r.clean != gdt::Tri::kUnknown;
        body = gdt::to_json(r);
        body["t"] = det_t;
      }
      body["exhaustive"] = exhaustive;
      emit(body, "detect");
      return exhaustive ? kOk : kBudgetExhausted;
    }
    if (*c_rec) {
      gdt::Graph g = read_graph(in);
      auto label = theorem == "isk4" ? gdt::recognize_basic_isk4(g, budget)
                                     : gdt::recognize_basic_unique_chord(g, budget);
      emit(gdt::to_json(label), "recognize");
      return label.exhaustive ? kOk : kBudgetExhausted;
    }
    if (*c_ver) {
      std::vector<std::string> names =
          lemma == "all" ? gdt::lemma_names() : std::vector<std::string>{lemma};
      gdt::json reports = gdt::json::array();
      bool all_ok = true;
      for (const std::string& name : names) {
        auto rep = gdt::verify_lemma(name, trials, vseed, budget);
        all_ok = all_ok && rep.ok();
        reports.push_back(gdt::to_json(rep));
      }
      emit(reports, "verify");
      return all_ok ? kOk : kVerifyFail;
    }
    if (*c_gen) {
      gdt::Graph g = gdt::generate(spec);
      std::cout << (out_format == "graph6" ? gdt::graph6_write(g) + "\n"
                                           : gdt::edge_list_write(g));
      return kOk;
    }
    if (*c_pipe) {
      gdt::Graph g = read_graph(in);
      auto rep = which == "isk4" ? gdt::pipeline_isk4(g, pipe_t, budget)
                                 : gdt::pipeline_unique_chord(g, pipe_t, budget);
      emit(gdt::to_json(rep), "pipeline");
      if (!rep.ok()) return kVerifyFail;
      return rep.budget_ok ? kOk : kBudgetExhausted;
    }
  } catch (const gdt::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const gdt::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFail;
  }
  return kOk;
}
