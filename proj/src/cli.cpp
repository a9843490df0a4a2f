#include "curvechi/cli.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "curvechi/burling.hpp"
#include "curvechi/io.hpp"
#include "curvechi/reductions.hpp"
#include "curvechi/svg.hpp"

namespace curvechi {

namespace {

struct Options {
    RunConfig config;
    int k = 0;
    bool allow_large = false;
    bool exact = false;
    bool greedy = false;
    bool json = false;
    std::string coloring_path;
    std::optional<std::uint64_t> greedy_seed;
    int alpha = 1;
    int beta = 1;
    std::string order = "natural";
    bool labels = false;
    std::int64_t budget_ms = 0;
    std::uint64_t nodes = 0;
};

class Runner {
public:
    Runner(Options opts, std::ostream& out) : o_(std::move(opts)), out_(out) {}

    int dispatch() {
        const auto& cmd = o_.config.subcommand;
        if (cmd == "gen-burling") return gen_burling();
        if (cmd == "verify-family") return verify_family();
        if (cmd == "color") return color();
        if (cmd == "omega") return omega();
        if (cmd == "reduce") return reduce();
        if (cmd == "audit-burling") return audit();
        if (cmd == "render") return render();
        throw FormatError("unknown subcommand " + cmd);
    }

private:
    void emit(const std::string& text) {
        if (o_.config.output.empty()) {
            out_ << text;
        } else {
            write_text(o_.config.output, text);
        }
    }

    bool is_json_input(const std::string& text) const {
        const auto pos = text.find_first_not_of(" \t\r\n");
        return pos != std::string::npos && text[pos] == '{';
    }

    struct GraphInput {
        IntersectionGraph graph;
        std::optional<FamilyFile> file;
    };

    GraphInput load_graph() {
        const std::string text = read_text(o_.config.input);
        if (is_json_input(text)) {
            FamilyFile f = family_from_json(parse_json(text));
            IntersectionGraph g = build_graph(f.family);
            return GraphInput{std::move(g), std::move(f)};
        }
        return GraphInput{parse_edge_list(text), std::nullopt};
    }

    int gen_burling() {
        const BurlingInstance inst = generate_burling(o_.k, o_.allow_large);
        emit(dump_json(burling_to_json(inst)));
        return kExitOk;
    }

    int verify_family() {
        const FamilyFile f = load_family(o_.config.input);
        if (f.burling_k) {
            const BurlingReport report = verify_properties(burling_from_file(f));
            emit(o_.json ? dump_json(trace_json(report)) : format_burling_report(report));
            return report.passed() ? kExitOk : kExitValidation;
        }
        if (f.family.kind() == FamilyKind::LR || f.family.kind() == FamilyKind::LR2 ||
            f.family.kind() == FamilyKind::Double) {
            const LrReport report = validate_lr(f.family);
            emit(o_.json ? dump_json(trace_json(report)) : format_lr_report(report));
            const bool must_be_lr = f.family.kind() != FamilyKind::Double;
            return report.certified() || !must_be_lr ? kExitOk : kExitValidation;
        }
        const FamilyCertificate cert = validate_family(f.family);
        std::string line = std::string("ok kind=") + to_string(cert.kind) + " members=" + std::to_string(cert.members);
        if (cert.kind == FamilyKind::TwoT) line += " t=" + std::to_string(cert.t);
        emit(line + "\n");
        return kExitOk;
    }

    int color() {
        if (o_.exact == o_.greedy) throw FormatError("color needs exactly one of --exact or --greedy");
        GraphInput in = load_graph();
        Coloring c;
        if (o_.exact) {
            c = chromatic_number(in.graph, std::nullopt, o_.config.budget).witness;
        } else if (o_.config.seed) {
            std::vector<std::size_t> order(in.graph.size());
            std::iota(order.begin(), order.end(), 0);
            std::mt19937_64 rng(*o_.config.seed);
            std::shuffle(order.begin(), order.end(), rng);
            c = greedy_coloring(in.graph, order);
        } else {
            c = dsatur_coloring(in.graph);
        }
        const int count = o_.exact ? c.palette : c.used_colors();
        out_ << count << '\n';
        if (!o_.config.output.empty()) {
            Json j = in.file ? coloring_to_json(in.file->family, c) : Json{{"palette", c.palette}, {"colors", c.colors}};
            write_text(o_.config.output, dump_json(j));
        }
        return kExitOk;
    }

    int omega() {
        GraphInput in = load_graph();
        const CliqueResult r = max_clique(in.graph, o_.config.budget);
        out_ << r.omega << '\n';
        return kExitOk;
    }

    int reduce() {
        const std::string& op = o_.config.operation;
        if (op == "mcguinness") return mcguinness();
        const FamilyFile f = load_family(o_.config.input);
        if (op == "component-split") {
            const ComponentSplit split = component_split(f.family);
            const CrossComponentColoring coloring = color_cross_component(split, o_.config.budget);
            emit(dump_json(trace_json(split, coloring)));
        } else if (op == "rewire") {
            const ComponentSplit split = component_split(f.family);
            const RewireResult r = rewire_semicircles(f.family.subset(split.same));
            emit(dump_json(trace_json(r)));
        } else if (op == "split-2t") {
            emit(dump_json(trace_json(split_2t(f.family))));
        } else if (op == "product-color") {
            emit(dump_json(trace_json(f.family, color_2t_family(f.family, o_.config.budget))));
        } else {
            throw FormatError("unknown reduction " + op);
        }
        return kExitOk;
    }

    int mcguinness() {
        GraphInput in = load_graph();
        std::vector<std::size_t> order(in.graph.size());
        std::iota(order.begin(), order.end(), 0);
        if (o_.order == "basepoint") {
            if (!in.file) throw FormatError("--order basepoint needs a family file");
            const auto& fam = in.file->family;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return fam[a].left_basepoint() < fam[b].left_basepoint(); });
        } else if (o_.order != "natural") {
            throw FormatError("unknown order " + o_.order);
        }
        const McGuinnessResult r = mcguinness_subgraph(in.graph, order, o_.alpha, o_.beta, o_.config.budget);
        emit(dump_json(trace_json(r)));
        return kExitOk;
    }

    int audit() {
        const FamilyFile f = load_family(o_.config.input);
        const BurlingInstance inst = burling_from_file(f);
        Coloring c;
        if (!o_.coloring_path.empty() == o_.greedy_seed.has_value()) {
            throw FormatError("audit needs exactly one of --coloring or --greedy-seed");
        }
        if (!o_.coloring_path.empty()) {
            c = coloring_from_json(read_json(o_.coloring_path), inst.family);
        } else {
            std::vector<std::size_t> order(inst.family.size());
            std::iota(order.begin(), order.end(), 0);
            std::mt19937_64 rng(*o_.greedy_seed);
            std::shuffle(order.begin(), order.end(), rng);
            c = greedy_coloring(burling_graph(inst.k), order);
        }
        const AuditResult r = audit_coloring(inst, c);
        emit(dump_json(trace_json(inst, r)));
        return r.colors.size() >= std::size_t(inst.k) ? kExitOk : kExitValidation;
    }

    int render() {
        const FamilyFile f = load_family(o_.config.input);
        SvgOptions opts;
        opts.labels = o_.labels;
        emit(render_svg(f.family, f.probes, opts));
        return kExitOk;
    }

    Options o_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tools for curve families anchored on a baseline", "curvechi"};
    app.require_subcommand(1);
    Options o;
    std::uint64_t seed = 0;
    app.add_option("--budget-ms", o.budget_ms, "Solver time budget in milliseconds")->check(CLI::PositiveNumber);
    app.add_option("--nodes", o.nodes, "Solver node budget")->check(CLI::PositiveNumber);
    auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized modes");

    auto* gen = app.add_subcommand("gen-burling", "Generate the Burling-type instance X_k");
    gen->alias("generate");
    gen->add_option("--k", o.k, "Recursion depth")->required();
    gen->add_option("--out", o.config.output, "Output family file");
    gen->add_flag("--allow-large", o.allow_large, "Permit depths above the default cap");

    auto* verify = app.add_subcommand("verify-family", "Validate a family file");
    verify->alias("verify");
    verify->add_option("file", o.config.input)->required();
    verify->add_flag("--json", o.json, "Print the report as JSON");

    auto* color = app.add_subcommand("color", "Color the intersection graph of a family or edge list");
    color->add_option("file", o.config.input)->required();
    color->add_flag("--exact", o.exact, "Exact chromatic number");
    color->add_flag("--greedy", o.greedy, "Greedy coloring (DSATUR, or first-fit in seeded random order)");
    color->add_option("--out", o.config.output, "Write the coloring as JSON");

    auto* omega = app.add_subcommand("omega", "Exact clique number");
    omega->add_option("file", o.config.input)->required();

    auto* reduce = app.add_subcommand("reduce", "Run one reduction and print its trace");
    reduce->add_option("operation", o.config.operation)
        ->required()
        ->check(CLI::IsMember({"component-split", "rewire", "split-2t", "product-color", "mcguinness"}));
    reduce->add_option("file", o.config.input)->required();
    reduce->add_option("--out", o.config.output, "Write the trace to a file");
    reduce->add_option("--alpha", o.alpha, "alpha for mcguinness")->check(CLI::PositiveNumber);
    reduce->add_option("--beta", o.beta, "beta for mcguinness")->check(CLI::NonNegativeNumber);
    reduce->add_option("--order", o.order, "Vertex order for mcguinness: natural or basepoint");

    auto* audit = app.add_subcommand("audit-burling", "Find a probe carrying at least k colors");
    audit->alias("audit");
    audit->add_option("file", o.config.input)->required();
    auto* col = audit->add_option("--coloring", o.coloring_path, "Coloring file");
    auto* gs = audit->add_option("--greedy-seed", o.greedy_seed, "Greedy coloring in a seeded random order");
    col->excludes(gs);
    audit->add_option("--out", o.config.output, "Write the trace to a file");

    auto* render = app.add_subcommand("render", "Render a family as SVG");
    render->add_option("file", o.config.input)->required();
    render->add_option("--out", o.config.output, "SVG output file");
    render->add_flag("--labels", o.labels, "Label curves with their ids");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }
    for (auto* sub : app.get_subcommands()) o.config.subcommand = sub->get_name();
    if (*seed_opt) o.config.seed = seed;
    if (o.budget_ms > 0) o.config.budget.time_limit = std::chrono::milliseconds(o.budget_ms);
    if (o.nodes > 0) o.config.budget.node_limit = o.nodes;

    try {
        Runner runner(std::move(o), out);
        return runner.dispatch();
    } catch (const SolverBudgetExceeded& e) {
        err << "error: " << e.kind() << ": " << e.what() << " (bounds " << e.lower_bound() << ".." << e.upper_bound()
            << ")\n";
        return kExitBudget;
    } catch (const IoError& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        err << "error: InvalidArgument: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        err << "error: OutOfRange: " << e.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace curvechi
