#ifndef GEOBURN_IO_HPP
#define GEOBURN_IO_HPP

/// \file
/// \brief Line-oriented text formats for instances, schedules and LSAT
/// formulas.
///
/// Instance:
///
///     geoburn instance
///     dimension 2
///     name example        (optional)
///     seed 7              (optional)
///     points 3
///     0 0
///     1 0
///     2.5 -1
///     rates 3             (optional, one value per point)
///     1 2 1
///     sources 2           (optional, point indices)
///     0 2
///     end
///
/// Schedule:
///
///     geoburn schedule
///     model point         (point | anywhere)
///     k 1
///     total_steps 4
///     sources 2           (x y step rate per source)
///     0 0 1 1
///     2.5 -1 2 1
///     end
///
/// LSAT formulas use DIMACS clause lines with a "p lsat n m" header.
/// Tokens are whitespace separated; "#" (or "c" lines in DIMACS) start
/// comments. Numbers are written with 17 significant digits. Repeated points
/// are merged on load (first occurrence wins) and reported as a warning.

#include "geoburn/core.hpp"
#include "geoburn/hardness.hpp"

#include <charconv>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace geoburn {

class ParseError : public Error
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what), line_(line),
          column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct InstanceFile
{
    Instance instance;
    std::string name;
    std::optional<std::uint64_t> seed;
    /// Non-fatal findings while loading (repeated points are merged).
    std::vector<std::string> warnings;
};

namespace detail {

struct Token
{
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
};

class Tokenizer
{
public:
    Tokenizer(std::string_view text, char comment) { split(text, comment); }

    bool done() const { return pos_ >= toks_.size(); }

    const Token& peek() const
    {
        if (done())
            throw ParseError(end_line_, end_col_, "unexpected end of input");
        return toks_[pos_];
    }

    Token next()
    {
        const Token& t = peek();
        ++pos_;
        return t;
    }

    void expect(std::string_view word)
    {
        Token t = next();
        if (t.text != word)
            throw ParseError(t.line, t.column, "expected '" + std::string(word) + "', found '" + t.text + "'");
    }

    double number()
    {
        Token t = next();
        double v = 0.0;
        std::istringstream is(t.text);
        is.imbue(std::locale::classic());
        if (!(is >> v) || !is.eof() || !std::isfinite(v))
            throw ParseError(t.line, t.column, "expected a finite number, found '" + t.text + "'");
        return v;
    }

    long long integer(long long lo, long long hi)
    {
        Token t = next();
        long long v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size())
            throw ParseError(t.line, t.column, "expected an integer, found '" + t.text + "'");
        if (v < lo || v > hi)
            throw ParseError(t.line, t.column,
                             "value " + t.text + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
        return v;
    }

    std::uint64_t unsigned_integer()
    {
        Token t = next();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size())
            throw ParseError(t.line, t.column, "expected an unsigned integer, found '" + t.text + "'");
        return v;
    }

    /// Rest of the current token's line, joined by single spaces.
    std::string rest_of_line()
    {
        const std::size_t line = peek().line;
        std::string out;
        while (!done() && toks_[pos_].line == line) {
            if (!out.empty())
                out += ' ';
            out += toks_[pos_++].text;
        }
        return out;
    }

private:
    void split(std::string_view text, char comment)
    {
        std::size_t line = 1, col = 1;
        std::size_t i = 0;
        while (i < text.size()) {
            const char ch = text[i];
            if (ch == '\n') {
                ++line;
                col = 1;
                ++i;
            } else if (ch == comment) {
                while (i < text.size() && text[i] != '\n')
                    ++i;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++col;
                ++i;
            } else {
                Token t{{}, line, col};
                while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != comment) {
                    t.text += text[i++];
                    ++col;
                }
                toks_.push_back(std::move(t));
            }
        }
        end_line_ = line;
        end_col_ = col;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t end_line_ = 1;
    std::size_t end_col_ = 1;
};

inline std::string num(double v)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(17) << v;
    return os.str();
}

constexpr long long kMaxCount = 100'000'000;

} // namespace detail

inline InstanceFile parse_instance(std::string_view text)
{
    detail::Tokenizer tk(text, '#');
    tk.expect("geoburn");
    tk.expect("instance");
    InstanceFile f;
    bool have_points = false;
    for (;;) {
        const detail::Token key = tk.next();
        if (key.text == "end")
            break;
        if (key.text == "dimension") {
            f.instance.dimension = static_cast<int>(tk.integer(1, 2));
        } else if (key.text == "name") {
            f.name = tk.rest_of_line();
        } else if (key.text == "seed") {
            f.seed = tk.unsigned_integer();
        } else if (key.text == "points") {
            const auto n = static_cast<std::size_t>(tk.integer(0, detail::kMaxCount));
            for (std::size_t i = 0; i < n; ++i) {
                const detail::Token at = tk.peek();
                Point p;
                p.x = tk.number();
                p.y = tk.number();
                if (f.instance.dimension == 1 && p.y != 0.0)
                    throw ParseError(at.line, at.column, "1D instance point with y != 0");
                f.instance.points.push_back(p);
            }
            have_points = true;
        } else if (key.text == "rates") {
            const auto n = static_cast<std::size_t>(tk.integer(0, detail::kMaxCount));
            if (!have_points || n != f.instance.points.size())
                throw ParseError(key.line, key.column, "rates must follow points and match their count");
            for (std::size_t i = 0; i < n; ++i) {
                const detail::Token at = tk.peek();
                const double r = tk.number();
                if (!(r > 0.0))
                    throw ParseError(at.line, at.column, "rate must be positive");
                f.instance.rates.push_back(r);
            }
        } else if (key.text == "sources") {
            const auto n = static_cast<std::size_t>(tk.integer(0, detail::kMaxCount));
            if (!have_points)
                throw ParseError(key.line, key.column, "sources must follow points");
            for (std::size_t i = 0; i < n; ++i) {
                const detail::Token at = tk.peek();
                const auto s = tk.integer(0, static_cast<long long>(f.instance.points.size()) - 1);
                if (std::find(f.instance.sources.begin(), f.instance.sources.end(), static_cast<std::size_t>(s)) !=
                    f.instance.sources.end())
                    throw ParseError(at.line, at.column, "source index repeated");
                f.instance.sources.push_back(static_cast<std::size_t>(s));
            }
        } else {
            throw ParseError(key.line, key.column, "unknown key '" + key.text + "'");
        }
    }
    if (!tk.done()) {
        const auto& t = tk.peek();
        throw ParseError(t.line, t.column, "trailing content after 'end'");
    }
    check_instance(f.instance);
    if (const std::size_t removed = deduplicate(f.instance))
        f.warnings.push_back("merged " + std::to_string(removed) + " repeated point(s)");
    return f;
}

inline std::string write_instance(const InstanceFile& f)
{
    std::ostringstream os;
    const Instance& in = f.instance;
    os << "geoburn instance\n";
    os << "dimension " << in.dimension << "\n";
    if (!f.name.empty())
        os << "name " << f.name << "\n";
    if (f.seed)
        os << "seed " << *f.seed << "\n";
    os << "points " << in.points.size() << "\n";
    for (const Point& p : in.points)
        os << detail::num(p.x) << ' ' << detail::num(p.y) << "\n";
    if (!in.rates.empty()) {
        os << "rates " << in.rates.size() << "\n";
        for (double r : in.rates)
            os << detail::num(r) << "\n";
    }
    if (!in.sources.empty()) {
        os << "sources " << in.sources.size() << "\n";
        for (std::size_t i = 0; i < in.sources.size(); ++i)
            os << in.sources[i] << (i + 1 == in.sources.size() ? "\n" : " ");
    }
    os << "end\n";
    return os.str();
}

inline std::string write_instance(const Instance& in)
{
    return write_instance(InstanceFile{in, {}, {}, {}});
}

inline BurnSchedule parse_schedule(std::string_view text)
{
    detail::Tokenizer tk(text, '#');
    tk.expect("geoburn");
    tk.expect("schedule");
    BurnSchedule s;
    for (;;) {
        const detail::Token key = tk.next();
        if (key.text == "end")
            break;
        if (key.text == "model") {
            const detail::Token v = tk.next();
            if (v.text == "point")
                s.model.tag = BurnModel::Point;
            else if (v.text == "anywhere")
                s.model.tag = BurnModel::Anywhere;
            else
                throw ParseError(v.line, v.column, "unknown model '" + v.text + "'");
        } else if (key.text == "k") {
            s.model.k = static_cast<int>(tk.integer(1, std::numeric_limits<int>::max()));
        } else if (key.text == "total_steps") {
            s.total_steps = static_cast<int>(tk.integer(0, std::numeric_limits<int>::max()));
        } else if (key.text == "sources") {
            const auto n = static_cast<std::size_t>(tk.integer(0, detail::kMaxCount));
            for (std::size_t i = 0; i < n; ++i) {
                BurnSource src;
                src.center.x = tk.number();
                src.center.y = tk.number();
                src.ignition_step = static_cast<int>(tk.integer(1, std::numeric_limits<int>::max()));
                const detail::Token at = tk.peek();
                src.rate = tk.number();
                if (!(src.rate > 0.0))
                    throw ParseError(at.line, at.column, "rate must be positive");
                s.sources.push_back(src);
            }
        } else {
            throw ParseError(key.line, key.column, "unknown key '" + key.text + "'");
        }
    }
    if (!tk.done()) {
        const auto& t = tk.peek();
        throw ParseError(t.line, t.column, "trailing content after 'end'");
    }
    return s;
}

inline std::string write_schedule(const BurnSchedule& s)
{
    std::ostringstream os;
    os << "geoburn schedule\n";
    os << "model " << to_string(s.model.tag) << "\n";
    os << "k " << s.model.k << "\n";
    os << "total_steps " << s.total_steps << "\n";
    os << "sources " << s.sources.size() << "\n";
    for (const BurnSource& b : s.sources)
        os << detail::num(b.center.x) << ' ' << detail::num(b.center.y) << ' ' << b.ignition_step << ' '
           << detail::num(b.rate) << "\n";
    os << "end\n";
    return os.str();
}

/// DIMACS-style LSAT: optional "c" comment lines, header "p lsat n m", then m
/// zero-terminated clauses of signed 1-based variable indices.
inline LsatFormula parse_lsat(std::string_view text)
{
    // Drop comment lines but keep line numbering.
    std::string cleaned;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] != 'c')
            cleaned.append(line);
        cleaned += '\n';
        start = end + 1;
    }
    detail::Tokenizer tk(cleaned, '%');
    tk.expect("p");
    const detail::Token kind = tk.next();
    if (kind.text != "lsat")
        throw ParseError(kind.line, kind.column, "expected format 'lsat', found '" + kind.text + "'");
    LsatFormula f;
    f.variable_count = static_cast<int>(tk.integer(0, 1'000'000));
    const auto m = static_cast<std::size_t>(tk.integer(0, detail::kMaxCount));
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Literal> clause;
        for (;;) {
            const detail::Token at = tk.peek();
            const long long v = tk.integer(-f.variable_count, f.variable_count);
            if (v == 0)
                break;
            if (clause.size() == 3)
                throw ParseError(at.line, at.column, "clause has more than 3 literals");
            clause.push_back({static_cast<int>(std::llabs(v)) - 1, v > 0});
        }
        f.clauses.push_back(std::move(clause));
    }
    if (!tk.done()) {
        const auto& t = tk.peek();
        throw ParseError(t.line, t.column, "more clauses than announced in the header");
    }
    return f;
}

inline std::string write_lsat(const LsatFormula& f)
{
    std::ostringstream os;
    os << "p lsat " << f.variable_count << ' ' << f.clauses.size() << "\n";
    for (const auto& c : f.clauses) {
        for (const Literal& l : c)
            os << l.signed_value() << ' ';
        os << "0\n";
    }
    return os.str();
}

/// Per-point role labels of a reduction layout, one "index role literal" line
/// each (clause points carry their 1-based clause number instead).
inline std::string write_roles(const ReductionLayout& L)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < L.tags.size(); ++i) {
        const PointTag& t = L.tags[i];
        os << i << ' ' << to_string(t.role) << ' ';
        if (t.role == PointRole::Clause)
            os << t.clause + 1;
        else
            os << t.literal.signed_value() << " label " << L.label(t.literal);
        os << "\n";
    }
    return os.str();
}

inline std::string read_text(std::istream& in)
{
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace geoburn

#endif // GEOBURN_IO_HPP
