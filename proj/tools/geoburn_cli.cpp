// geoburn: command-line front end for the geoburn library.
//
// Exit codes: 0 success, 1 invalid input, 2 infeasible or failed validation,
// 3 internal error.

#include "geoburn/geoburn.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace {

using namespace geoburn;

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kInfeasible = 2;
constexpr int kInternal = 3;

/// Thrown by command handlers to select the exit code.
struct Exit
{
    int code;
};

std::string slurp(const std::string& path)
{
    if (path == "-")
        return read_text(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw PreconditionError("cannot open '" + path + "'");
    return read_text(in);
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw PreconditionError("cannot write '" + path + "'");
    out << text;
}

Instance load_instance(const std::string& path)
{
    InstanceFile f = parse_instance(slurp(path));
    for (const auto& w : f.warnings)
        std::cerr << "warning: " << w << "\n";
    return f.instance;
}

BurnModel parse_model(const std::string& s)
{
    if (s == "point")
        return BurnModel::Point;
    if (s == "anywhere")
        return BurnModel::Anywhere;
    throw PreconditionError("unknown model '" + s + "'");
}

std::string comment_block(const std::vector<std::string>& lines)
{
    std::string out;
    for (const auto& l : lines)
        out += "# " + l + "\n";
    return out;
}

std::string trace_lines(const GuessTrace& tr)
{
    std::vector<std::string> lines;
    for (const GuessRecord& g : tr.guesses) {
        std::ostringstream os;
        os << "guess delta=" << g.delta << " cover=" << g.cover_size << " scaled=" << g.scaled_size
           << " bound=" << g.bound << (g.accepted ? " accept" : " reject");
        lines.push_back(os.str());
    }
    lines.insert(lines.end(), tr.arithmetic.begin(), tr.arithmetic.end());
    if (tr.fallback)
        lines.push_back("WARNING: fallback schedule used");
    return comment_block(lines);
}

int report_validation(const Instance& inst, const BurnSchedule& s)
{
    const ValidationReport rep = validate_schedule(inst, s);
    for (const Violation& v : rep.violations)
        std::cout << "violation " << v.rule << ": " << v.message << "\n";
    for (const Violation& v : rep.warnings)
        std::cout << "warning " << v.rule << ": " << v.message << "\n";
    for (std::size_t i : rep.unburned)
        std::cout << "unburned " << i << " " << to_string(inst.points[i]) << "\n";
    std::cout << (rep.valid ? "valid" : "invalid") << "\n";
    return rep.valid ? kOk : kInfeasible;
}

struct SolveArgs
{
    std::string model = "point";
    int dim = 0;
    double eps = 0.5;
    bool rates = false;
    int k = 1;
    bool strict = false;
    std::string input;
    std::string output;
    std::string svg;
};

int run_solve(const SolveArgs& a)
{
    Instance inst = load_instance(a.input);
    const BurnModel model = parse_model(a.model);
    if (a.dim == 1 && inst.dimension != 1) {
        for (const Point& p : inst.points)
            if (p.y != 0.0)
                throw PreconditionError("--dim 1 given but the instance has points off the x-axis");
        inst.dimension = 1;
    }
    if (a.dim == 2)
        inst.dimension = 2;

    BurnSchedule sched;
    std::string trace;
    if (a.rates || a.k > 1 || !inst.uniform_rates()) {
        if (model != BurnModel::Point)
            throw PreconditionError("non-uniform rates and k-burning are supported for the point model only");
        Instance planar = inst;
        planar.dimension = 2;
        const auto res = k_burning_nonuniform(planar, a.k, {a.eps, a.strict, {}});
        sched = res.schedule;
        trace = trace_lines(res.trace);
    } else if (inst.dimension == 1) {
        const auto res = ptas_burning_1d(inst, model, a.eps);
        sched = res.schedule;
        std::vector<std::string> lines;
        for (int d : res.rejected)
            lines.push_back("guess delta=" + std::to_string(d) + " reject");
        lines.push_back("guess delta=" + std::to_string(res.delta) + " accept, t=" + std::to_string(res.t) +
                        ", extra steps=" + std::to_string(res.groups.extra_steps) +
                        (res.groups.exact ? " (exact radii)" : ""));
        trace = comment_block(lines);
    } else {
        const Burn2dOptions opt{a.eps, a.strict, {}};
        const auto res = model == BurnModel::Anywhere ? anywhere_burning_2d(inst, opt) : point_burning_2d(inst, opt);
        sched = res.schedule;
        trace = trace_lines(res.trace);
    }
    emit(a.output, write_schedule(sched) + trace);
    if (!a.svg.empty())
        emit(a.svg, render_svg(inst, sched));
    return validate_schedule(inst, sched).valid ? kOk : kInternal;
}

int run_oracle(const std::string& model, int k, int max_steps, const std::string& input)
{
    const Instance inst = load_instance(input);
    const int limit = max_steps > 0 ? max_steps : static_cast<int>(inst.size());
    const auto res = exact_burning_number(inst, {parse_model(model), k}, limit);
    if (!res) {
        std::cout << "# no schedule within " << limit << " steps\n";
        return kInfeasible;
    }
    std::cout << write_schedule(res->schedule) << "# burning number " << res->burning_number << "\n";
    return kOk;
}

int run_maxburn(int q, const std::vector<std::size_t>& sources, const std::string& input)
{
    const Instance inst = load_instance(input);
    std::vector<std::size_t> S = sources;
    if (S.empty())
        S = inst.sources;
    if (S.empty()) {
        S.resize(inst.size());
        std::iota(S.begin(), S.end(), std::size_t{0});
    }
    const auto res = max_burn_schedule(inst, S, q);
    std::cout << write_schedule(res.schedule) << "# burned " << res.burned << " of " << inst.size() << "\n";
    return kOk;
}

struct GenArgs
{
    std::string kind = "uniform-square";
    std::uint64_t seed = 1;
    GenParams params;
    std::string formula;
    std::string output;
};

int run_gen(const GenArgs& a)
{
    const GenKind kind = parse_gen_kind(a.kind);
    InstanceFile f;
    f.name = a.kind;
    f.seed = a.seed;
    if (kind == GenKind::LsatReduction && !a.formula.empty())
        f.instance = build_reduction(parse_lsat(slurp(a.formula))).instance;
    else
        f.instance = generate(kind, a.params, a.seed);
    emit(a.output, write_instance(f));
    return kOk;
}

std::vector<bool> parse_assignment(const std::string& text, int n)
{
    std::vector<bool> a;
    for (char c : text) {
        if (c == '0' || c == '1')
            a.push_back(c == '1');
        else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',')
            throw PreconditionError("assignment must consist of 0/1 values");
    }
    if (a.size() != static_cast<std::size_t>(n))
        throw PreconditionError("assignment needs " + std::to_string(n) + " values");
    return a;
}

std::string format_assignment(const std::vector<bool>& a)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? " " : "") + std::string(a[i] ? "1" : "0");
    return s;
}

int run_verify_templates(double resolution)
{
    const FiveDiskTemplate t = five_disk_template();
    const std::vector<Point> centers(t.centers.begin(), t.centers.end());
    const TemplateCertificate cert = certify_template(centers, t.radius, resolution);
    std::cout << "five-disk template radius " << t.radius << ": " << (cert.covered ? "certified" : "FAILED") << "\n";
    std::cout << "  worst sampled distance " << std::setprecision(10) << cert.worst_sample << ", sample margin "
              << t.radius - cert.worst_sample << "\n";
    std::cout << "  cells " << cert.cells << ", refined " << cert.refined << ", min cell slack " << cert.min_cell_slack
              << "\n";
    const AnnulusZones z = annulus_zones();
    const double diam = z.zone_diameter(0);
    std::cout << "13-zone diameter " << diam << " (2 sin(pi/13) = " << 2 * std::sin(std::numbers::pi / 13)
              << "), cover radius 13/27 = " << kZoneCoverRadius << ", margin " << kZoneCoverRadius - diam << "\n";
    const bool ok = cert.covered && diam <= kZoneCoverRadius - 1e-3;
    std::cout << (ok ? "ok" : "FAILED") << "\n";
    return ok ? kOk : kInternal;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Geometric burning: exact and approximate burning schedules"};
    app.require_subcommand(1);
    int code = kOk;

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "approximate burning schedule");
    s->add_option("--model", solve.model, "point or anywhere")->check(CLI::IsMember({"point", "anywhere"}));
    s->add_option("--dim", solve.dim, "force dimension 1 or 2")->check(CLI::IsMember({1, 2}));
    s->add_option("--eps", solve.eps, "approximation parameter")->check(CLI::PositiveNumber);
    s->add_flag("--rates", solve.rates, "use the non-uniform-rate pipeline");
    s->add_option("--k", solve.k, "sources per step")->check(CLI::PositiveNumber);
    s->add_flag("--strict-oracle", solve.strict, "exact covers instead of local search");
    s->add_option("-o,--output", solve.output, "schedule file (default stdout)");
    s->add_option("--svg", solve.svg, "also render the schedule to this file");
    s->add_option("input", solve.input, "instance file or -")->required();
    s->callback([&] { code = run_solve(solve); });

    std::string o_model = "point", o_input;
    int o_k = 1, o_max = 0;
    auto* o = app.add_subcommand("oracle", "exact burning number");
    o->add_option("--model", o_model)->check(CLI::IsMember({"point", "anywhere"}));
    o->add_option("--k", o_k)->check(CLI::PositiveNumber);
    o->add_option("--max-steps", o_max, "search limit (default n)");
    o->add_option("input", o_input)->required();
    o->callback([&] { code = run_oracle(o_model, o_k, o_max, o_input); });

    std::string v_input, v_sched;
    auto* v = app.add_subcommand("validate", "check a schedule against an instance");
    v->add_option("input", v_input)->required();
    v->add_option("schedule", v_sched)->required();
    v->callback([&] { code = report_validation(load_instance(v_input), parse_schedule(slurp(v_sched))); });

    int m_q = 1;
    std::vector<std::size_t> m_sources;
    std::string m_input;
    auto* m = app.add_subcommand("maxburn", "burn many points in q rounds from a source set");
    m->add_option("--q", m_q)->required()->check(CLI::PositiveNumber);
    m->add_option("--sources", m_sources, "source point indices (default: instance sources, else all)")->delimiter(',');
    m->add_option("input", m_input)->required();
    m->callback([&] { code = run_maxburn(m_q, m_sources, m_input); });

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "generate an instance");
    g->add_option("--kind", gen.kind)->check(CLI::IsMember({"uniform-square", "clustered", "collinear", "lsat-reduction"}));
    g->add_option("--seed", gen.seed);
    g->add_option("--n", gen.params.n);
    g->add_option("--side", gen.params.side);
    g->add_option("--clusters", gen.params.clusters);
    g->add_option("--spread", gen.params.spread);
    g->add_option("--grid", gen.params.grid, "snap coordinates to this grid");
    g->add_option("--max-rate", gen.params.max_rate, "random integer rates 1..R");
    g->add_option("--variables", gen.params.variables, "lsat-reduction: variables of the random formula");
    g->add_option("--formula", gen.formula, "lsat-reduction: use this formula file");
    g->add_option("-o,--output", gen.output);
    g->callback([&] { code = run_gen(gen); });

    auto* h = app.add_subcommand("hardness", "LSAT reduction tools");
    h->require_subcommand(1);
    std::string h_formula, h_roles, h_assign, h_sched, h_out;
    int h_steps = 0;
    auto* hb = h->add_subcommand("build", "reduction instance for a formula");
    hb->add_option("formula", h_formula)->required();
    hb->add_option("--roles", h_roles, "write point roles to this file");
    hb->callback([&] {
        const ReductionLayout L = build_reduction(parse_lsat(slurp(h_formula)));
        InstanceFile f{L.instance, "lsat-reduction", {}, {}};
        std::cout << write_instance(f);
        if (!h_roles.empty())
            emit(h_roles, write_roles(L));
    });
    auto* hc = h->add_subcommand("check", "validate a formula and its layout");
    hc->add_option("formula", h_formula)->required();
    hc->callback([&] {
        const LsatFormula f = parse_lsat(slurp(h_formula));
        const LsatDiagnostics d = validate_lsat(f);
        if (!d) {
            std::cout << "invalid LSAT (" << d.rule << "): " << d.message << "\n";
            throw Exit{kBadInput};
        }
        const ReductionLayout L = build_reduction(f);
        const Remark2Report rep = check_remark2(L);
        std::cout << "valid LSAT, n=" << f.variable_count << " m=" << f.clause_count() << ", points "
                  << L.instance.size() << ", sources " << L.instance.sources.size() << "\n";
        std::cout << "separation " << (rep.ok ? "ok" : "FAILED") << ", pairs " << rep.pairs << ", min slack "
                  << rep.min_slack << " (" << rep.worst << ")\n";
        if (!rep.ok)
            throw Exit{kInternal};
    });
    auto* ha = h->add_subcommand("assign2sched", "schedule for a truth assignment");
    ha->add_option("formula", h_formula)->required();
    ha->add_option("--assignment", h_assign, "0/1 per variable, e.g. \"1 0 1\"")->required();
    ha->add_option("-o,--output", h_out, "schedule file (default stdout)");
    ha->callback([&] {
        const ReductionLayout L = build_reduction(parse_lsat(slurp(h_formula)));
        const BurnSchedule sched = assignment_to_schedule(L, parse_assignment(h_assign, L.n()));
        const bool valid = validate_schedule(L.instance, sched).valid;
        emit(h_out, write_schedule(sched) + "# " + (valid ? "valid" : "invalid") + "\n");
    });
    auto* hs = h->add_subcommand("sched2assign", "truth assignment encoded by a schedule");
    hs->add_option("formula", h_formula)->required();
    hs->add_option("schedule", h_sched)->required();
    hs->callback([&] {
        const ReductionLayout L = build_reduction(parse_lsat(slurp(h_formula)));
        const auto a = schedule_to_assignment(L, parse_schedule(slurp(h_sched)));
        std::cout << format_assignment(a) << "\n";
        std::cout << "# " << (satisfies(L.formula, a) ? "satisfying" : "not satisfying") << "\n";
    });
    auto* hx = h->add_subcommand("bruteforce", "exhaustive search over source orders");
    hx->add_option("formula", h_formula)->required();
    hx->add_option("--steps", h_steps, "step budget (default 2n)");
    hx->callback([&] {
        const ReductionLayout L = build_reduction(parse_lsat(slurp(h_formula)));
        const auto found = brute_force_burnable(L, h_steps > 0 ? std::optional<int>(h_steps) : std::nullopt);
        if (!found) {
            std::cout << "# not burnable with the sources\n";
            throw Exit{kInfeasible};
        }
        std::cout << write_schedule(*found);
    });

    std::string b_suite = "ptas1d";
    BenchOptions bopt;
    auto* b = app.add_subcommand("bench", "approximation ratio tables");
    b->add_option("--suite", b_suite)->check(CLI::IsMember({"ptas1d", "burn2d", "nonuniform", "maxburn"}));
    b->add_option("--trials", bopt.trials);
    b->add_option("--seed", bopt.seed);
    b->add_option("--eps", bopt.epsilon)->check(CLI::PositiveNumber);
    b->callback([&] {
        const auto rows = run_bench(b_suite, bopt);
        std::cout << format_bench(rows);
        if (!std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.ok; }))
            throw Exit{kInfeasible};
    });

    double t_res = 1e-3;
    auto* t = app.add_subcommand("verify-templates", "certify the covering templates");
    t->add_option("--resolution", t_res)->check(CLI::PositiveNumber);
    t->callback([&] { code = run_verify_templates(t_res); });

    std::string r_input, r_sched, r_out;
    int r_step = -1;
    auto* r = app.add_subcommand("render", "SVG picture of an instance and schedule");
    r->add_option("input", r_input)->required();
    r->add_option("schedule", r_sched);
    r->add_option("--step", r_step, "displayed step (default: last)");
    r->add_option("-o,--output", r_out);
    r->callback([&] {
        const Instance inst = load_instance(r_input);
        std::optional<BurnSchedule> sched;
        if (!r_sched.empty())
            sched = parse_schedule(slurp(r_sched));
        emit(r_out, render_svg(inst, sched, r_step >= 0 ? std::optional<int>(r_step) : std::nullopt));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    } catch (const Exit& e) {
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return code;
}
