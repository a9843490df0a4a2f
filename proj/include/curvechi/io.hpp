#pragma once

// JSON family files, coloring files, and machine-readable reduction traces.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvechi/burling.hpp"
#include "curvechi/families.hpp"
#include "curvechi/graph.hpp"
#include "curvechi/reductions.hpp"

namespace curvechi {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kMaxVerticesPerCurve = 10'000;

struct FamilyFile {
    CurveFamily family;
    std::vector<Probe> probes;
    std::optional<int> burling_k;
};

Json family_to_json(const CurveFamily& family, const std::vector<Probe>& probes = {},
                    std::optional<int> burling_k = std::nullopt);
FamilyFile family_from_json(const Json& j);

Json burling_to_json(const BurlingInstance& inst);
BurlingInstance burling_from_file(const FamilyFile& file);

Json coloring_to_json(const CurveFamily& family, const Coloring& coloring);
Coloring coloring_from_json(const Json& j, const CurveFamily& family);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
Json read_json(const std::filesystem::path& path);
Json parse_json(const std::string& text);
std::string dump_json(const Json& j);

FamilyFile load_family(const std::filesystem::path& path);
void save_family(const std::filesystem::path& path, const Json& j);

Json trace_json(const ComponentSplit& split);
Json trace_json(const ComponentSplit& split, const CrossComponentColoring& coloring);
Json trace_json(const RewireResult& result);
Json trace_json(const Split2t& split);
Json trace_json(const ProductColoringPlan& plan);
Json trace_json(const CurveFamily& family, const TwoTColoring& result);
Json trace_json(const McGuinnessResult& result);
Json trace_json(const BurlingReport& report);
Json trace_json(const BurlingInstance& inst, const AuditResult& audit);
Json trace_json(const LrReport& report);

}  // namespace curvechi
