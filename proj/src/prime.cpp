#include "gdt/prime.hpp"

#include <algorithm>

#include "gdt/codec.hpp"
#include "gdt/treewidth.hpp"

namespace gdt {

std::string to_string(TraceRule r) {
  switch (r) {
    case TraceRule::kInitial: return "initial";
    case TraceRule::kCliqueCutsetAtom: return "clique-cutset-atom";
    case TraceRule::kTwoCutsetClosure: return "two-cutset-closure";
    case TraceRule::kTwoCutsetStrongClosure: return "two-cutset-strong-closure";
  }
  return "?";
}

bool canonical_less(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return graph6_write(a) < graph6_write(b);
}

bool is_prime(const Graph& g, Budget budget) {
  if (!is_connected(g)) throw InputError("is_prime: graph must be connected");
  if (find_clique_cutset(g, budget)) return false;
  return find_proper_two_cutsets(g).empty();
}

namespace {

void collect_atoms(const Graph& g, std::vector<int> labels, Budget budget,
                   std::vector<Atom>& out) {
  auto cut = find_clique_cutset(g, budget);
  if (!cut) {
    out.push_back({g, std::move(labels)});
    return;
  }
  for (VSet comp : cut->side_components) {
    std::vector<int> sub_old;
    Graph block = induced_subgraph(g, comp | cut->witness, &sub_old);
    std::vector<int> sub_labels(sub_old.size());
    for (size_t i = 0; i < sub_old.size(); ++i) sub_labels[i] = labels[sub_old[i]];
    collect_atoms(block, std::move(sub_labels), budget, out);
  }
}

}  // namespace

std::vector<Atom> clique_cutset_atoms(const Graph& g, Budget budget) {
  if (!is_connected(g)) throw InputError("clique_cutset_atoms: graph must be connected");
  std::vector<int> labels(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) labels[v] = v;
  std::vector<Atom> out;
  collect_atoms(g, std::move(labels), budget, out);
  return out;
}

Atom clique_cutset_atom_of_max_tw(const Graph& g, Budget budget) {
  auto atoms = clique_cutset_atoms(g, budget);
  const Atom* best = nullptr;
  int best_tw = -2;
  for (const Atom& a : atoms) {
    int tw = treewidth_exact(a.graph, budget).width();
    if (tw > best_tw || (tw == best_tw && canonical_less(a.graph, best->graph))) {
      best = &a;
      best_tw = tw;
    }
  }
  return *best;
}

namespace {

std::vector<Atom> one_cutset_blocks(const Graph& g) {
  std::vector<Atom> out;
  for (VSet blk : biconnected_blocks(g)) {
    std::vector<int> labels;
    Graph b = induced_subgraph(g, blk, &labels);
    out.push_back({std::move(b), std::move(labels)});
  }
  if (out.empty()) {  // single vertex, no edges
    std::vector<int> labels(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) labels[v] = v;
    out.push_back({g, std::move(labels)});
  }
  return out;
}

}  // namespace

DecompositionTrace prime_decompose(const Graph& g, GraphClass filter, Budget budget,
                                   bool one_cutsets_only) {
  if (!is_connected(g)) throw InputError("prime_decompose: graph must be connected");
  DecompositionTrace trace;
  TraceStep init;
  init.graph = g;
  init.rule = TraceRule::kInitial;
  init.old_labels.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) init.old_labels[v] = v;
  trace.steps.push_back(std::move(init));

  // In 1-cutset mode (the section 4 variant) the sequence ends when no
  // 1-cutset and no proper 2-cutset remain; the base may keep larger
  // clique cutsets.
  auto done = [&](const Graph& h) {
    return one_cutsets_only
               ? find_one_cutsets(h).empty() && find_proper_two_cutsets(h).empty()
               : is_prime(h, budget);
  };

  int max_steps = 2 * g.vertex_count() + 2;
  for (int i = 1; (int)trace.steps.size() <= max_steps; ++i) {
    const TraceStep& cur = trace.steps.back();
    if (done(cur.graph)) break;

    if (i % 2 == 1) {
      // Odd: extract the atom of maximum treewidth.
      auto atoms = one_cutsets_only ? one_cutset_blocks(cur.graph)
                                    : clique_cutset_atoms(cur.graph, budget);
      const Atom* best = nullptr;
      int best_tw = -2;
      for (const Atom& a : atoms) {
        int tw = treewidth_exact(a.graph, budget).width();
        if (best == nullptr || tw > best_tw ||
            (tw == best_tw && canonical_less(a.graph, best->graph))) {
          best = &a;
          best_tw = tw;
        }
      }
      if ((int)best->graph.vertex_count() == cur.graph.vertex_count()) continue;  // identity
      TraceStep step;
      step.graph = best->graph;
      step.rule = TraceRule::kCliqueCutsetAtom;
      step.old_labels.resize(best->old_labels.size());
      for (size_t j = 0; j < best->old_labels.size(); ++j)
        step.old_labels[j] = cur.old_labels[best->old_labels[j]];
      step.width = best_tw;
      trace.steps.push_back(std::move(step));
    } else {
      // Even: no clique cutset but not prime, so a proper 2-cutset exists.
      auto cuts = find_proper_two_cutsets(cur.graph);
      if (cuts.empty()) throw std::logic_error("non-prime graph without proper 2-cutset");
      const CutsetFinding& cut = cuts.front();
      int u = lowest_vertex(cut.witness);
      int v = lowest_vertex(cut.witness & ~bit(u));
      struct Candidate {
        Closure c;
        bool strong;
        int tw;
      };
      std::optional<Candidate> best;
      for (VSet comp : cut.side_components) {
        for (bool strong : {false, true}) {
          Closure c = strong ? strong_closure(cur.graph, u, v, comp)
                             : closure(cur.graph, u, v, comp);
          if (filter != GraphClass::kAllGraphs) {
            Tri m = in_class(c.graph, filter, budget);
            if (m == Tri::kUnknown) {
              trace.complete = false;
              return trace;
            }
            if (m == Tri::kNo) continue;
          }
          int tw = treewidth_exact(c.graph, budget).width();
          // Tie-break: strong closures first, then smaller canonical form.
          bool better = !best || tw > best->tw ||
                        (tw == best->tw && strong && !best->strong) ||
                        (tw == best->tw && strong == best->strong &&
                         canonical_less(c.graph, best->c.graph));
          if (better) best = Candidate{std::move(c), strong, tw};
        }
      }
      if (!best)
        throw NotTwoCutsetSafe("no closure of any component belongs to class " +
                               to_string(filter));
      TraceStep step;
      step.graph = best->c.graph;
      step.rule = best->strong ? TraceRule::kTwoCutsetStrongClosure
                               : TraceRule::kTwoCutsetClosure;
      step.cutset = cut.witness;
      step.old_labels.resize(best->c.old_labels.size());
      for (size_t j = 0; j < best->c.old_labels.size(); ++j) {
        int lbl = best->c.old_labels[j];
        step.old_labels[j] = lbl < 0 ? -1 : cur.old_labels[lbl];
      }
      step.width = best->tw;
      trace.steps.push_back(std::move(step));
    }
  }
  if (trace.complete && !done(trace.base()))
    throw std::logic_error("prime decomposition did not terminate at a prime base");
  return trace;
}

PrimeBaseReport verify_prime_base_theorem(const Graph& g, GraphClass filter, Budget budget) {
  auto trace = prime_decompose(g, filter, budget);
  PrimeBaseReport rep;
  rep.trace_length = trace.steps.size();
  int prev = -2;
  for (const TraceStep& s : trace.steps) {
    int tw = treewidth_exact(s.graph, budget).width();
    if (prev != -2 && tw != prev) rep.stepwise_equal = false;
    prev = tw;
    if (&s == &trace.steps.front()) rep.input_tw = tw;
    if (&s == &trace.steps.back()) rep.base_tw = tw;
  }
  rep.equal = rep.stepwise_equal && rep.input_tw == rep.base_tw;
  return rep;
}

}  // namespace gdt
