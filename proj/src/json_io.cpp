#include "gdt/json_io.hpp"

#include "gdt/codec.hpp"

namespace gdt {

json to_json(VSet s) { return to_vertex_list(s); }

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}, {"graph6", graph6_write(g)}};
}

json to_json(const TreeDecomposition& td) {
  json bags = json::array();
  for (VSet b : td.bags) bags.push_back(to_json(b));
  json edges = json::array();
  for (auto [u, v] : td.tree.edges()) edges.push_back({u, v});
  return {{"bags", bags}, {"tree_edges", edges}, {"width", td.width()}};
}

json to_json(const TdValidation& v) {
  json j{{"valid", v.valid()},
         {"covers_vertices", v.covers_vertices},
         {"covers_edges", v.covers_edges},
         {"subtrees_connected", v.subtrees_connected},
         {"width", v.width}};
  if (!v.covers_vertices) j["missing_vertex"] = v.missing_vertex;
  if (!v.covers_edges) j["missing_edge"] = {v.missing_edge.first, v.missing_edge.second};
  if (!v.subtrees_connected) j["broken_vertex"] = v.broken_vertex;
  return j;
}

json to_json(const Graph& g, const WidthResult& r) {
  json j{{"graph", to_json(g)}, {"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper}};
  if (r.exact) j["treewidth"] = r.width();
  if (r.witness) j["decomposition"] = to_json(*r.witness);
  return j;
}

json to_json(const RankDecomposition& rd) {
  json edges = json::array();
  for (auto [u, v] : rd.tree.edges()) edges.push_back({u, v});
  return {{"tree_edges", edges}, {"leaf_of_vertex", rd.leaf_of_vertex}, {"width", rd.width}};
}

json to_json(const Graph& g, const RankwidthResult& r) {
  json j{{"graph", to_json(g)}, {"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper}};
  if (r.exact) j["rankwidth"] = r.width();
  if (r.witness) j["decomposition"] = to_json(*r.witness);
  return j;
}

json to_json(const CutsetFinding& f) {
  json j{{"kind", to_string(f.kind)}};
  if (f.kind == CutKind::kOneJoin || f.kind == CutKind::kProperOneJoin) {
    j["x"] = to_json(f.x);
    j["y"] = to_json(f.y);
    j["a"] = to_json(f.a);
    j["b"] = to_json(f.b);
  } else {
    j["witness"] = to_json(f.witness);
    json comps = json::array();
    for (VSet c : f.side_components) comps.push_back(to_json(c));
    j["side_components"] = comps;
    if (f.kind == CutKind::kProperTwoCutset) {
      j["side_x"] = to_json(f.side_x);
      j["side_y"] = to_json(f.side_y);
    }
  }
  return j;
}

json to_json(const SubdivisionWitness& w) {
  return {{"branch_vertices", w.branch}, {"paths", w.paths}, {"vertices", to_json(w.vertices)}};
}

json to_json(const WheelWitness& w) { return {{"hole", w.hole}, {"hub", w.hub}}; }

json to_json(const UniqueChordWitness& w) {
  return {{"cycle", w.cycle}, {"chord", {w.chord.first, w.chord.second}}};
}

json to_json(const CleanlinessReport& r) {
  json j{{"clean", r.clean == Tri::kYes ? "yes" : r.clean == Tri::kNo ? "no" : "unknown"}};
  if (r.clean == Tri::kNo) {
    j["violation"] = r.violation;
    j["witness"] = to_json(r.witness);
  }
  return j;
}

json to_json(const ClassLabel& l) {
  json j{{"class", to_string(l.kind)}, {"exhaustive", l.exhaustive}};
  if (l.root) j["root"] = to_json(*l.root);
  if (l.central_square) j["central_square"] = to_json(l.central_square);
  if (l.side_x || l.side_y) {
    j["side_x"] = to_json(l.side_x);
    j["side_y"] = to_json(l.side_y);
  }
  if (!l.embedding.empty()) j["embedding"] = l.embedding;
  return j;
}

json to_json(const DecompositionTrace& t) {
  json steps = json::array();
  for (const TraceStep& s : t.steps) {
    json step{{"rule", to_string(s.rule)},
              {"graph", to_json(s.graph)},
              {"original_labels", s.old_labels}};
    if (s.rule == TraceRule::kTwoCutsetClosure || s.rule == TraceRule::kTwoCutsetStrongClosure)
      step["cutset"] = to_json(s.cutset);
    if (s.width) step["treewidth"] = *s.width;
    steps.push_back(std::move(step));
  }
  return {{"steps", steps}, {"complete", t.complete}};
}

json to_json(const LemmaReport& r) {
  json failing = json::array();
  for (const TrialFailure& f : r.failing)
    failing.push_back({{"seed", f.seed}, {"detail", f.detail}});
  return {{"lemma", r.name},     {"trials", r.trials},   {"passes", r.passes},
          {"failures", r.failures}, {"skipped", r.skipped}, {"failing", failing},
          {"ok", r.ok()}};
}

json to_json(const BoundReport& r) {
  json j{{"class", to_string(r.which)},
         {"t", r.t},
         {"base_label", to_json(r.base_label)},
         {"base", to_json(r.base)},
         {"symbolic_bound", r.symbolic_bound},
         {"trace_steps", r.trace_steps},
         {"structure_ok", r.structure_ok},
         {"widths_ok", r.widths_ok},
         {"budget_ok", r.budget_ok},
         {"verdict", r.verdict},
         {"ok", r.ok()}};
  if (r.base_tw >= 0) j["base_treewidth"] = r.base_tw;
  if (r.input_tw) j["input_treewidth"] = *r.input_tw;
  if (r.concrete_bound) j["concrete_bound"] = *r.concrete_bound;
  if (r.which == GraphClass::kUniqueChordFree) {
    j["join_reductions"] = r.join_reductions;
    if (r.input_rw) j["input_rankwidth"] = *r.input_rw;
    if (r.reduced_rw) j["reduced_rankwidth"] = *r.reduced_rw;
  }
  return j;
}

}  // namespace gdt
