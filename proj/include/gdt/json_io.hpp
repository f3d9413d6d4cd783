#pragma once

#include <json.hpp>

#include "gdt/cutsets.hpp"
#include "gdt/detect.hpp"
#include "gdt/pipeline.hpp"
#include "gdt/prime.hpp"
#include "gdt/rankwidth.hpp"
#include "gdt/recognize.hpp"
#include "gdt/treewidth.hpp"
#include "gdt/verify.hpp"

namespace gdt {

using nlohmann::json;

json to_json(const Graph& g);
json to_json(VSet s);  // as a sorted vertex list

json to_json(const TreeDecomposition& td);
json to_json(const TdValidation& v);
json to_json(const Graph& g, const WidthResult& r);       // treewidth report
json to_json(const Graph& g, const RankwidthResult& r);   // rankwidth report
json to_json(const RankDecomposition& rd);
json to_json(const CutsetFinding& f);
json to_json(const SubdivisionWitness& w);
json to_json(const WheelWitness& w);
json to_json(const UniqueChordWitness& w);
json to_json(const CleanlinessReport& r);
json to_json(const ClassLabel& l);
json to_json(const DecompositionTrace& t);
json to_json(const LemmaReport& r);
json to_json(const BoundReport& r);

}  // namespace gdt
