#include "curvechi/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace curvechi {

namespace {

Coord json_coord(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) throw FormatError(where + ": coordinates must be integers");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t(kMaxCoordinate)) {
        throw CoordinateRangeError(where + ": coordinate out of range");
    }
    const auto c = v.get<std::int64_t>();
    if (c > kMaxCoordinate || c < -kMaxCoordinate) throw CoordinateRangeError(where + ": coordinate out of range");
    return c;
}

Polyline json_polyline(const Json& pts, const std::string& id) {
    if (!pts.is_array()) throw FormatError("curve " + id + ": points must be an array");
    if (pts.size() > kMaxVerticesPerCurve) {
        throw FormatError("curve " + id + " has " + std::to_string(pts.size()) + " vertices, limit is " +
                          std::to_string(kMaxVerticesPerCurve));
    }
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        if (!p.is_array() || p.size() != 2) throw FormatError("curve " + id + ": each point is [x, y]");
        out.push_back(Point{json_coord(p[0], "curve " + id), json_coord(p[1], "curve " + id)});
    }
    return Polyline(std::move(out), id);
}

Json points_json(const Polyline& c) {
    Json pts = Json::array();
    for (const auto& p : c.points()) pts.push_back({p.x, p.y});
    return pts;
}

Json rational_json(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) return Json(static_cast<std::int64_t>(boost::multiprecision::numerator(r)));
    return Json(to_string(r));
}

Json point_json(const ExactPoint& p) { return Json::array({rational_json(p.x), rational_json(p.y)}); }

Json coloring_array(const Coloring& c) {
    return Json{{"palette", c.palette}, {"used", c.used_colors()}, {"colors", c.colors}};
}

template <typename T>
T required(const Json& j, const char* key) {
    if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("field \"") + key + "\": " + e.what());
    }
}

}  // namespace

Json family_to_json(const CurveFamily& family, const std::vector<Probe>& probes, std::optional<int> burling_k) {
    Json j;
    j["format"] = "curvechi-family";
    j["version"] = 1;
    j["kind"] = to_string(family.kind());
    if (family.kind() == FamilyKind::TwoT) j["t"] = family.t();
    j["scale"] = family.scale();
    Json curves = Json::array();
    for (const auto& m : family.members()) {
        Json c;
        c["id"] = m.id();
        if (m.shape() == MemberShape::Double) {
            c["L"] = points_json(m.strands()[0]);
            c["R"] = points_json(m.strands()[1]);
        } else {
            c["points"] = points_json(m.strands()[0]);
        }
        if (!m.level().empty()) c["level"] = m.level();
        curves.push_back(std::move(c));
    }
    j["curves"] = std::move(curves);
    if (!probes.empty()) {
        Json ps = Json::array();
        for (const auto& p : probes) ps.push_back({{"id", p.id}, {"x_lo", p.x_lo}, {"x_hi", p.x_hi}});
        j["probes"] = std::move(ps);
    }
    if (burling_k) j["burling"] = {{"k", *burling_k}};
    return j;
}

FamilyFile family_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("family file must be a JSON object");
    const FamilyKind kind = family_kind_from_string(required<std::string>(j, "kind"));
    const int t = j.contains("t") ? required<int>(j, "t") : (kind == FamilyKind::LR2 ? 1 : 0);
    const std::int64_t scale = j.contains("scale") ? required<std::int64_t>(j, "scale") : 1;
    if (!j.contains("curves") || !j["curves"].is_array()) throw FormatError("missing array \"curves\"");

    std::vector<Member> members;
    std::size_t index = 0;
    for (const auto& c : j["curves"]) {
        const std::string id = c.contains("id") ? required<std::string>(c, "id") : "c" + std::to_string(index);
        ++index;
        Member m = [&] {
            if (kind == FamilyKind::Double) {
                if (!c.contains("L") || !c.contains("R")) throw FormatError("double-curve " + id + " needs L and R");
                return Member::double_curve(id, json_polyline(c["L"], id + ".L"), json_polyline(c["R"], id + ".R"));
            }
            if (!c.contains("points")) throw FormatError("curve " + id + " needs points");
            Polyline poly = json_polyline(c["points"], id);
            return kind == FamilyKind::OneCurve ? Member::one_curve(std::move(poly)) : Member::even(std::move(poly));
        }();
        if (c.contains("level")) m.set_level(required<std::string>(c, "level"));
        members.push_back(std::move(m));
    }
    FamilyFile out;
    out.family = CurveFamily(kind, std::move(members), scale, t);
    if (j.contains("probes")) {
        for (const auto& p : j["probes"]) {
            Probe probe{json_coord(p.at("x_lo"), "probe"), json_coord(p.at("x_hi"), "probe"),
                        p.contains("id") ? p["id"].get<std::string>() : "P" + std::to_string(out.probes.size())};
            out.probes.push_back(std::move(probe));
        }
    }
    if (j.contains("burling")) out.burling_k = required<int>(j["burling"], "k");
    return out;
}

Json burling_to_json(const BurlingInstance& inst) { return family_to_json(inst.family, inst.probes, inst.k); }

BurlingInstance burling_from_file(const FamilyFile& file) {
    if (!file.burling_k) throw FormatError("file carries no burling section");
    BurlingInstance inst;
    inst.k = *file.burling_k;
    inst.family = file.family;
    inst.probes = file.probes;
    inst.scale = file.family.scale();
    return inst;
}

Json coloring_to_json(const CurveFamily& family, const Coloring& coloring) {
    Json colors = Json::object();
    for (std::size_t i = 0; i < family.size(); ++i) colors[family[i].id()] = coloring.colors.at(i);
    return Json{{"palette", coloring.palette}, {"colors", std::move(colors)}};
}

Coloring coloring_from_json(const Json& j, const CurveFamily& family) {
    if (!j.is_object() || !j.contains("colors")) throw FormatError("coloring file needs a \"colors\" field");
    Coloring out;
    const Json& colors = j["colors"];
    if (colors.is_array()) {
        out.colors = colors.get<std::vector<int>>();
        if (out.colors.size() != family.size()) throw FormatError("coloring length does not match the family");
    } else {
        out.colors.resize(family.size());
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (!colors.contains(family[i].id())) throw FormatError("coloring misses curve " + family[i].id());
            out.colors[i] = colors[family[i].id()].get<int>();
        }
    }
    for (int c : out.colors) {
        if (c < 0) throw FormatError("colors must be non-negative");
        out.palette = std::max(out.palette, c + 1);
    }
    if (j.contains("palette")) out.palette = std::max(out.palette, j["palette"].get<int>());
    return out;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json(const std::filesystem::path& path) { return parse_json(read_text(path)); }

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

FamilyFile load_family(const std::filesystem::path& path) { return family_from_json(read_json(path)); }

void save_family(const std::filesystem::path& path, const Json& j) { write_text(path, dump_json(j)); }

Json trace_json(const ComponentSplit& split) {
    Json comps = Json::array();
    std::vector<std::vector<std::string>> pieces(split.component_count);
    for (std::size_t p = 0; p < split.component.size(); ++p) {
        const auto& m = split.family[p / 2];
        pieces[split.component[p]].push_back((p % 2 == 0 ? "L(" : "R(") + m.id() + ")");
    }
    for (auto& c : pieces) comps.push_back(std::move(c));
    auto ids = [&](const std::vector<std::size_t>& v) {
        Json a = Json::array();
        for (auto i : v) a.push_back(split.family[i].id());
        return a;
    };
    Json steps = Json::array();
    steps.push_back({{"step", "union-find"}, {"links", split.links.size()}, {"components", split.component_count}});
    steps.push_back({{"step", "classify"}, {"same", split.same.size()}, {"diff", split.diff.size()}});
    return Json{{"operation", "component-split"}, {"steps", std::move(steps)},       {"components", std::move(comps)},
                {"F_same", ids(split.same)},     {"F_diff", ids(split.diff)}};
}

Json trace_json(const ComponentSplit& split, const CrossComponentColoring& coloring) {
    Json j = trace_json(split);
    j["operation"] = "color-cross-component";
    j["steps"].push_back({{"step", "auxiliary-graph"},
                          {"vertices", coloring.auxiliary.size()},
                          {"edges", coloring.auxiliary.edge_count()},
                          {"chi", coloring.auxiliary_chi}});
    Json colors = Json::object();
    for (std::size_t i = 0; i < split.diff.size(); ++i) colors[split.family[split.diff[i]].id()] = coloring.coloring.colors[i];
    const CurveFamily diff = split.family.subset(split.diff);
    const bool proper = is_proper(build_graph(diff), coloring.coloring);
    j["steps"].push_back({{"step", "lift"}, {"rule", "color of the component of L(c)"}, {"proper", proper}});
    j["coloring"] = Json{{"palette", coloring.coloring.palette}, {"colors", std::move(colors)}};
    return j;
}

Json trace_json(const RewireResult& result) {
    Json depths = Json::object();
    for (std::size_t i = 0; i < result.family.size(); ++i) depths[result.family[i].id()] = result.depth[i];
    Json steps = Json::array();
    steps.push_back({{"step", "refine"}, {"factor", result.factor}});
    steps.push_back({{"step", "dips"}, {"depths", std::move(depths)}});
    steps.push_back({{"step", "validate-lr"}, {"certified", true}});
    return Json{{"operation", "rewire"}, {"steps", std::move(steps)}, {"family", family_to_json(result.family)}};
}

Json trace_json(const Split2t& split) {
    const auto& a = split.accounting;
    Json steps = Json::array();
    steps.push_back({{"step", "scale"}, {"factor", split.factor}});
    steps.push_back({{"step", "accounting"},
                     {"total", a.total},
                     {"in_first", a.in_first},
                     {"in_second", a.in_second},
                     {"lr_only", a.lr_only},
                     {"missing", a.missing}});
    return Json{{"operation", "split-2t"},
                {"steps", std::move(steps)},
                {"first", family_to_json(split.first)},
                {"second", family_to_json(split.second)}};
}

Json trace_json(const ProductColoringPlan& plan) {
    Json cells = Json::array();
    for (const auto& c : plan.cells) {
        cells.push_back({{"key", {c.first_color, c.second_color}},
                         {"members", c.members},
                         {"lr_certified", c.lr_certified},
                         {"coloring", coloring_array(c.coloring)}});
    }
    return Json{{"operation", "product-color"},
                {"first", coloring_array(plan.first)},
                {"second", coloring_array(plan.second)},
                {"cell_palette", plan.cell_palette},
                {"cells", std::move(cells)},
                {"combined", coloring_array(plan.combined)}};
}

Json trace_json(const CurveFamily& family, const TwoTColoring& result) {
    Json steps = Json::array();
    for (std::size_t i = 0; i < result.splits.size(); ++i) {
        Json s = trace_json(result.splits[i]);
        s.erase("first");
        s.erase("second");
        steps.push_back(std::move(s));
    }
    for (const auto& p : result.plans) {
        Json s = trace_json(p);
        s.erase("cells");
        s["cells"] = p.cells.size();
        steps.push_back(std::move(s));
    }
    const bool proper = is_proper(build_graph(family), result.coloring);
    return Json{{"operation", "product-color"},
                {"steps", std::move(steps)},
                {"proper", proper},
                {"coloring", coloring_to_json(family, result.coloring)}};
}

Json trace_json(const McGuinnessResult& r) {
    Json blocks = Json::array();
    for (std::size_t i = 0; i < r.blocks.size(); ++i) {
        blocks.push_back({{"vertices", r.blocks[i]}, {"coloring", r.block_colorings[i].colors}});
    }
    Json edges = Json::array();
    for (const auto& e : r.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"between", e.between}, {"chi", e.chi}});
    return Json{{"operation", "mcguinness"},
                {"blocks", std::move(blocks)},
                {"class_chi", r.class_chi},
                {"class", r.chosen_class},
                {"parity", r.even_parity ? "even" : "odd"},
                {"H", r.vertices},
                {"chi_H", r.chi_h},
                {"edges", std::move(edges)}};
}

Json trace_json(const BurlingReport& r) {
    return Json{{"operation", "verify-burling"},
                {"sizes", r.sizes_ok},
                {"probes", r.probes_ok},
                {"probes_avoid_L", r.probes_avoid_left},
                {"crossing_sets_disjoint", r.crossing_sets_disjoint},
                {"triangle_free", r.triangle_free},
                {"lr", r.lr_ok},
                {"matches_construction", r.matches_construction},
                {"violations", r.violations},
                {"passed", r.passed()}};
}

Json trace_json(const BurlingInstance& inst, const AuditResult& audit) {
    const Probe& p = inst.probes.at(audit.probe);
    return Json{{"operation", "audit"},
                {"k", inst.k},
                {"probe", {{"id", p.id}, {"x_lo", p.x_lo}, {"x_hi", p.x_hi}}},
                {"path", std::string(audit.path.begin(), audit.path.end())},
                {"members", audit.members},
                {"colors", std::vector<int>(audit.colors.begin(), audit.colors.end())},
                {"distinct", audit.colors.size()}};
}

Json trace_json(const LrReport& report) {
    Json v = Json::array();
    for (const auto& x : report.violations) {
        v.push_back({{"a", x.a},
                     {"b", x.b},
                     {"point", point_json(x.point)},
                     {"parts", std::string(to_string(x.part_a)) + "-" + to_string(x.part_b)}});
    }
    return Json{{"certified", report.certified()},
                {"pairs", report.intersecting_pairs},
                {"incidences", report.incidences},
                {"violations", std::move(v)}};
}

}  // namespace curvechi
