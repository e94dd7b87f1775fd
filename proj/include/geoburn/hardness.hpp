#ifndef GEOBURN_HARDNESS_HPP
#define GEOBURN_HARDNESS_HPP

/// \file
/// \brief Reduction from linear 3-SAT (LSAT) to point burning restricted to
/// a designated source set.
///
/// Every variable gets a label r = 1..n and a distance d_r = 2n - 2r. Each
/// literal of label r is a source at distance d_r + 1 from the clause points
/// containing it, with a private tail point at distance d_r. Within T = 2n
/// steps the two literals of label r must be ignited at steps 2r-1 and 2r;
/// the one lit first (radius d_r + 1) is the true literal and is the only one
/// that reaches its clauses.

#include "geoburn/core.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace geoburn {

struct Literal
{
    /// 0-based variable index.
    int var = 0;
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;

    Literal operator!() const { return {var, !positive}; }
    /// 2*var for the positive literal, 2*var+1 for the negative one.
    std::size_t id() const { return 2 * static_cast<std::size_t>(var) + (positive ? 0 : 1); }
    /// DIMACS-style signed 1-based value.
    int signed_value() const { return positive ? var + 1 : -(var + 1); }
};

struct LsatFormula
{
    int variable_count = 0;
    std::vector<std::vector<Literal>> clauses;

    std::size_t clause_count() const { return clauses.size(); }
};

struct LsatDiagnostics
{
    bool valid = true;
    std::string rule;
    std::string message;

    explicit operator bool() const { return valid; }
};

namespace detail {

inline std::vector<Literal> shared_literals(const std::vector<Literal>& a, const std::vector<Literal>& b)
{
    std::vector<Literal> out;
    for (const Literal& l : a)
        if (std::find(b.begin(), b.end(), l) != b.end())
            out.push_back(l);
    return out;
}

/// partner[i] = index of the clause intersecting clause i, if any.
/// Assumes a valid formula.
inline std::vector<std::optional<std::size_t>> clause_partners(const LsatFormula& f)
{
    std::vector<std::optional<std::size_t>> partner(f.clauses.size());
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
        for (std::size_t j = i + 1; j < f.clauses.size(); ++j)
            if (!shared_literals(f.clauses[i], f.clauses[j]).empty()) {
                partner[i] = j;
                partner[j] = i;
            }
    return partner;
}

} // namespace detail

/// Checks the LSAT invariants and reports the first one violated.
inline LsatDiagnostics validate_lsat(const LsatFormula& f)
{
    auto fail = [](std::string rule, std::string msg) { return LsatDiagnostics{false, std::move(rule), std::move(msg)}; };
    if (f.variable_count < 1)
        return fail("variable-count", "formula needs at least one variable");
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& c = f.clauses[i];
        const std::string name = "clause " + std::to_string(i + 1);
        if (c.empty() || c.size() > 3)
            return fail("clause-size", name + " has " + std::to_string(c.size()) + " literals (1..3 allowed)");
        for (const Literal& l : c)
            if (l.var < 0 || l.var >= f.variable_count)
                return fail("variable-range", name + " uses variable " + std::to_string(l.var + 1) +
                                                  " outside 1.." + std::to_string(f.variable_count));
        std::set<Literal> uniq(c.begin(), c.end());
        if (uniq.size() != c.size())
            return fail("repeated-literal", name + " repeats a literal");
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        std::optional<std::size_t> partner;
        for (std::size_t j = 0; j < f.clauses.size(); ++j) {
            if (j == i)
                continue;
            const auto common = detail::shared_literals(f.clauses[i], f.clauses[j]);
            if (common.empty())
                continue;
            if (common.size() > 1)
                return fail("shared-literals", "clauses " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                   " share " + std::to_string(common.size()) + " literals");
            if (partner)
                return fail("multiple-intersections", "clause " + std::to_string(i + 1) + " intersects clauses " +
                                                          std::to_string(*partner + 1) + " and " +
                                                          std::to_string(j + 1));
            partner = j;
        }
    }
    return {};
}

struct LabelMap
{
    /// label_of[var] in 1..n.
    std::vector<int> label_of;
    /// var_of_label[r-1] = variable with label r.
    std::vector<int> var_of_label;
    /// Heavy intersection literals (shared by two 3-literal clauses).
    std::vector<Literal> heavy;
};

/// Variables of heavy intersection literals get the smallest labels; the
/// rest keep input order.
inline LabelMap relabel_variables(const LsatFormula& f)
{
    if (auto diag = validate_lsat(f); !diag)
        throw PreconditionError("relabel_variables: " + diag.message);
    LabelMap map;
    const auto partner = detail::clause_partners(f);
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        if (!partner[i] || *partner[i] < i)
            continue;
        const auto& a = f.clauses[i];
        const auto& b = f.clauses[*partner[i]];
        if (a.size() == 3 && b.size() == 3)
            map.heavy.push_back(detail::shared_literals(a, b).front());
    }
    const std::size_t n = static_cast<std::size_t>(f.variable_count);
    if (5 * map.heavy.size() > 2 * n)
        throw Error("relabel_variables: " + std::to_string(map.heavy.size()) + " heavy literals exceed 2n/5");
    std::vector<bool> placed(n, false);
    for (const Literal& l : map.heavy)
        if (!placed[static_cast<std::size_t>(l.var)]) {
            placed[static_cast<std::size_t>(l.var)] = true;
            map.var_of_label.push_back(l.var);
        }
    for (std::size_t v = 0; v < n; ++v)
        if (!placed[v])
            map.var_of_label.push_back(static_cast<int>(v));
    map.label_of.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r)
        map.label_of[static_cast<std::size_t>(map.var_of_label[r])] = static_cast<int>(r) + 1;
    return map;
}

enum class PointRole
{
    Clause,
    Literal,
    Tail
};

inline const char* to_string(PointRole r)
{
    switch (r) {
    case PointRole::Clause:
        return "clause";
    case PointRole::Literal:
        return "literal";
    case PointRole::Tail:
        return "tail";
    }
    return "?";
}

struct PointTag
{
    PointRole role = PointRole::Clause;
    /// Clause index for clause points.
    std::size_t clause = 0;
    /// Literal for literal and tail points.
    Literal literal;
    /// Index of the independent element holding the point.
    std::size_t element = 0;
};

struct ReductionLayout
{
    LsatFormula formula;
    LabelMap labels;
    /// 4n + m points; sources hold the 2n literal points.
    Instance instance;
    std::vector<PointTag> tags;
    /// Indexed by Literal::id().
    std::vector<std::size_t> literal_point;
    std::vector<std::size_t> tail_point;
    std::vector<std::size_t> clause_point;
    std::size_t element_count = 0;

    int n() const { return formula.variable_count; }
    int label(const Literal& l) const { return labels.label_of.at(static_cast<std::size_t>(l.var)); }
    /// d = 2n - 2r for a literal of label r.
    int d(const Literal& l) const { return 2 * n() - 2 * label(l); }
};

struct Remark2Report
{
    bool ok = true;
    /// Smallest (distance - bound) over all checked pairs.
    double min_slack = 0.0;
    std::string worst;
    std::size_t pairs = 0;
};

/// Verifies the separation properties the reduction relies on:
///  - a tail of label r and a foreign literal of label k are farther apart
///    than 2n - 2 min(k, r) + 1 (so a tail is only reachable from its own
///    literal in time, and a literal does not reach foreign tails early);
///  - a clause point and a literal not in that clause are farther apart than
///    the literal's largest fire radius 2n - 2k + 1.
inline Remark2Report check_remark2(const ReductionLayout& L)
{
    Remark2Report rep;
    rep.min_slack = std::numeric_limits<double>::infinity();
    const int n = L.n();
    auto consider = [&](double slack, const std::string& what) {
        ++rep.pairs;
        if (slack < rep.min_slack) {
            rep.min_slack = slack;
            rep.worst = what;
        }
        if (!(slack > kTolerance))
            rep.ok = false;
    };
    const auto& pts = L.instance.points;
    for (std::size_t z = 0; z < pts.size(); ++z) {
        if (L.tags[z].role != PointRole::Literal)
            continue;
        const Literal lz = L.tags[z].literal;
        const int k = L.label(lz);
        for (std::size_t t = 0; t < pts.size(); ++t) {
            const PointTag& tag = L.tags[t];
            if (tag.role == PointRole::Tail && !(tag.literal == lz)) {
                const int r = L.label(tag.literal);
                const double bound = 2.0 * n - 2.0 * std::min(k, r) + 1.0;
                consider(distance(pts[z], pts[t]) - bound, "literal " + std::to_string(lz.signed_value()) +
                                                               " vs tail of " +
                                                               std::to_string(tag.literal.signed_value()));
            } else if (tag.role == PointRole::Clause) {
                const auto& c = L.formula.clauses[tag.clause];
                if (std::find(c.begin(), c.end(), lz) != c.end())
                    continue;
                consider(distance(pts[z], pts[t]) - (2.0 * n - 2.0 * k + 1.0),
                         "literal " + std::to_string(lz.signed_value()) + " vs clause " +
                             std::to_string(tag.clause + 1));
            }
        }
    }
    if (rep.pairs == 0)
        rep.min_slack = 0.0;
    return rep;
}

namespace detail {

struct ElementBuilder
{
    ReductionLayout& L;
    std::size_t element;
    std::vector<Point> local;
    std::vector<PointTag> tags;

    void add(Point p, PointTag tag)
    {
        tag.element = element;
        local.push_back(p);
        tags.push_back(tag);
    }

    void literal(const Literal& lit, Point at, Point outward)
    {
        add(at, {PointRole::Literal, 0, lit, 0});
        add(at + static_cast<double>(L.d(lit)) * outward, {PointRole::Tail, 0, lit, 0});
    }
};

} // namespace detail

/// Builds the point set. Elements (a lone clause, or two clauses sharing a
/// literal) are laid out left to right with a gap of n^2 + 1 between their
/// bounding boxes. In an element clause u sits at its origin with literal
/// slots left (-(d+1), 0), right (d+1, 0) and below (0, -(d+1)); a partner v
/// sits at (2(d_c+1), 0) beyond the shared literal c, whose tail points up.
/// A literal that occurs in no clause gets an element of its own.
inline ReductionLayout build_reduction(const LsatFormula& f)
{
    if (auto diag = validate_lsat(f); !diag)
        throw PreconditionError("build_reduction: " + diag.message);
    if (f.variable_count < 2)
        throw PreconditionError("build_reduction needs n >= 2");

    ReductionLayout L;
    L.formula = f;
    L.labels = relabel_variables(f);
    const int n = f.variable_count;
    const auto partner = detail::clause_partners(f);
    const std::size_t lits = 2 * static_cast<std::size_t>(n);
    const std::size_t none = static_cast<std::size_t>(-1);
    L.literal_point.assign(lits, none);
    L.tail_point.assign(lits, none);
    L.clause_point.assign(f.clauses.size(), none);

    const Point left{-1, 0}, right{1, 0}, down{0, -1}, up{0, 1};
    const double gap = static_cast<double>(n) * n + 1.0;
    double cursor = 0.0;
    auto place = [&](const detail::ElementBuilder& b) {
        double lo = 0.0, hi = 0.0;
        for (const Point& p : b.local) {
            lo = std::min(lo, p.x);
            hi = std::max(hi, p.x);
        }
        const double shift = (L.element_count == 1 ? 0.0 : cursor + gap) - lo;
        cursor = shift + hi;
        for (std::size_t k = 0; k < b.local.size(); ++k) {
            const std::size_t idx = L.instance.points.size();
            L.instance.points.push_back(b.local[k] + Point{shift, 0});
            L.tags.push_back(b.tags[k]);
            switch (b.tags[k].role) {
            case PointRole::Clause:
                L.clause_point[b.tags[k].clause] = idx;
                break;
            case PointRole::Literal:
                L.literal_point[b.tags[k].literal.id()] = idx;
                break;
            case PointRole::Tail:
                L.tail_point[b.tags[k].literal.id()] = idx;
                break;
            }
        }
    };
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        if (partner[i] && *partner[i] < i)
            continue;
        detail::ElementBuilder b{L, L.element_count++, {}, {}};
        auto slot = [&](const Literal& lit, Point origin, Point dir) {
            b.literal(lit, origin + static_cast<double>(L.d(lit) + 1) * dir, dir);
        };
        const auto& u = f.clauses[i];
        b.add({0, 0}, {PointRole::Clause, i, {}, 0});
        if (!partner[i]) {
            const Point dirs[3] = {left, right, down};
            for (std::size_t q = 0; q < u.size(); ++q)
                slot(u[q], {0, 0}, dirs[q]);
        } else {
            const std::size_t j = *partner[i];
            const auto& v = f.clauses[j];
            const Literal c = detail::shared_literals(u, v).front();
            const double reach = L.d(c) + 1.0;
            b.literal(c, {reach, 0}, up);
            const Point vpos{2 * reach, 0};
            b.add(vpos, {PointRole::Clause, j, {}, 0});
            const Point udirs[2] = {left, down};
            const Point vdirs[2] = {right, down};
            std::size_t q = 0;
            for (const Literal& l : u)
                if (!(l == c))
                    slot(l, {0, 0}, udirs[q++]);
            q = 0;
            for (const Literal& l : v)
                if (!(l == c))
                    slot(l, vpos, vdirs[q++]);
        }
        place(b);
    }
    // A literal absent from every clause still needs its point and tail.
    for (std::size_t id = 0; id < lits; ++id) {
        if (L.literal_point[id] != none)
            continue;
        detail::ElementBuilder b{L, L.element_count++, {}, {}};
        b.literal({static_cast<int>(id / 2), id % 2 == 0}, {0, 0}, right);
        place(b);
    }

    // Sources in label order, positive literal first.
    for (int r = 1; r <= n; ++r)
        for (bool pos : {true, false})
            L.instance.sources.push_back(L.literal_point[Literal{L.labels.var_of_label[static_cast<std::size_t>(r - 1)], pos}.id()]);

    const std::size_t expected = 4 * static_cast<std::size_t>(n) + f.clauses.size();
    if (L.instance.size() != expected)
        throw Error("build_reduction: produced " + std::to_string(L.instance.size()) + " points, expected " +
                    std::to_string(expected));
    for (std::size_t id = 0; id < lits; ++id) {
        const Literal lit{static_cast<int>(id / 2), id % 2 == 0};
        const double dz = distance(L.instance.points[L.literal_point[id]], L.instance.points[L.tail_point[id]]);
        if (std::abs(dz - L.d(lit)) > kTolerance)
            throw Error("build_reduction: tail of literal " + std::to_string(lit.signed_value()) + " misplaced");
    }
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci)
        for (const Literal& lit : f.clauses[ci]) {
            const double dz = distance(L.instance.points[L.clause_point[ci]], L.instance.points[L.literal_point[lit.id()]]);
            if (std::abs(dz - (L.d(lit) + 1)) > kTolerance)
                throw Error("build_reduction: literal " + std::to_string(lit.signed_value()) + " misplaced");
        }
    if (auto rep = check_remark2(L); !rep.ok)
        throw Error("build_reduction: separation check failed at " + rep.worst + " (slack " +
                    std::to_string(rep.min_slack) + ")");
    return L;
}

/// Literal of label r ignited at step 2r-1 when true under the assignment,
/// at step 2r otherwise. T = 2n.
inline BurnSchedule assignment_to_schedule(const ReductionLayout& L, const std::vector<bool>& assignment)
{
    const int n = L.n();
    if (assignment.size() != static_cast<std::size_t>(n))
        throw PreconditionError("assignment has " + std::to_string(assignment.size()) + " values, expected " +
                                std::to_string(n));
    BurnSchedule s{{BurnModel::Point, 1}, 2 * n, {}};
    for (int r = 1; r <= n; ++r) {
        const int var = L.labels.var_of_label[static_cast<std::size_t>(r - 1)];
        const bool value = assignment[static_cast<std::size_t>(var)];
        for (bool pos : {true, false}) {
            const bool is_true = pos == value;
            const Point& at = L.instance.points[L.literal_point[Literal{var, pos}.id()]];
            s.sources.push_back({at, is_true ? 2 * r - 1 : 2 * r, 1.0});
        }
    }
    std::stable_sort(s.sources.begin(), s.sources.end(),
                     [](const BurnSource& a, const BurnSource& b) { return a.ignition_step < b.ignition_step; });
    return s;
}

/// Reads the assignment off a schedule over the literal points: a literal lit
/// at an odd step is true. Throws when a source is not a literal point, when
/// a literal is ignited twice, or when the two literals of label r are not
/// ignited at steps 2r-1 and 2r.
inline std::vector<bool> schedule_to_assignment(const ReductionLayout& L, const BurnSchedule& s)
{
    const int n = L.n();
    std::vector<int> step_of(2 * static_cast<std::size_t>(n), 0);
    for (const BurnSource& src : s.sources) {
        std::optional<std::size_t> lit;
        for (std::size_t id = 0; id < step_of.size(); ++id)
            if (same_point(src.center, L.instance.points[L.literal_point[id]]))
                lit = id;
        if (!lit)
            throw PreconditionError("source at " + to_string(src.center) + " is not a literal point");
        if (step_of[*lit] != 0)
            throw PreconditionError("literal point at " + to_string(src.center) + " ignited twice");
        step_of[*lit] = src.ignition_step;
    }
    std::vector<bool> value(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        const int r = L.labels.label_of[static_cast<std::size_t>(v)];
        const int sp = step_of[Literal{v, true}.id()];
        const int sn = step_of[Literal{v, false}.id()];
        const std::set<int> got{sp, sn};
        if (got != std::set<int>{2 * r - 1, 2 * r})
            throw PreconditionError("literals of label " + std::to_string(r) + " ignited at steps " +
                                    std::to_string(sp) + " and " + std::to_string(sn) + ", expected " +
                                    std::to_string(2 * r - 1) + " and " + std::to_string(2 * r));
        value[static_cast<std::size_t>(v)] = sp % 2 == 1;
    }
    return value;
}

/// Visits every valid schedule that ignites distinct layout sources, one per
/// step at steps 1..min(T, |S|). The visitor returns false to stop early.
/// Returns the number of valid schedules visited.
inline std::size_t enumerate_burning_schedules(const ReductionLayout& L, int T,
                                               const std::function<bool(const BurnSchedule&)>& visit)
{
    const auto& S = L.instance.sources;
    if (S.size() > 10)
        throw CapacityError("exhaustive schedule search is limited to 10 sources");
    if (T < 0)
        throw PreconditionError("T must be non-negative");
    const std::size_t slots = std::min(static_cast<std::size_t>(T), S.size());
    std::vector<std::size_t> order(S.begin(), S.end());
    std::sort(order.begin(), order.end());
    std::size_t found = 0;
    std::set<std::vector<std::size_t>> seen;
    do {
        std::vector<std::size_t> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(slots));
        if (slots < order.size() && !seen.insert(prefix).second)
            continue;
        BurnSchedule s{{BurnModel::Point, 1}, T, {}};
        for (std::size_t i = 0; i < slots; ++i)
            s.sources.push_back({L.instance.points[prefix[i]], static_cast<int>(i) + 1, L.instance.rate(prefix[i])});
        if (!validate_schedule(L.instance, s).valid)
            continue;
        ++found;
        if (!visit(s))
            break;
    } while (std::next_permutation(order.begin(), order.end()));
    return found;
}

/// First valid schedule using only the sources within T steps, if any.
inline std::optional<BurnSchedule> brute_force_burnable(const ReductionLayout& L, std::optional<int> T = std::nullopt)
{
    std::optional<BurnSchedule> out;
    enumerate_burning_schedules(L, T.value_or(2 * L.n()), [&](const BurnSchedule& s) {
        out = s;
        return false;
    });
    return out;
}

inline bool satisfies(const LsatFormula& f, const std::vector<bool>& a)
{
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
            return a.at(static_cast<std::size_t>(l.var)) == l.positive;
        });
    });
}

} // namespace geoburn

#endif // GEOBURN_HARDNESS_HPP
