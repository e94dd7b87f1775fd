#ifndef GEOBURN_SVG_HPP
#define GEOBURN_SVG_HPP

#include "geoburn/core.hpp"
#include "geoburn/io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>

namespace geoburn {

struct SvgOptions
{
    double width = 640.0;
    double margin = 24.0;
};

/// Points as dots, sources as crosses labelled with their ignition step, fire
/// fronts as circles of radius rate * (step - ignition) at the displayed step
/// (default: the schedule's last step). Output bytes depend only on the input.
inline std::string render_svg(const Instance& inst, const std::optional<BurnSchedule>& sched = std::nullopt,
                              std::optional<int> step = std::nullopt, const SvgOptions& opt = {})
{
    const int shown = sched ? step.value_or(sched->total_steps) : 0;
    double lo_x = 0, lo_y = 0, hi_x = 1, hi_y = 1;
    bool first = true;
    auto grow = [&](double x0, double y0, double x1, double y1) {
        if (first) {
            lo_x = x0, lo_y = y0, hi_x = x1, hi_y = y1;
            first = false;
            return;
        }
        lo_x = std::min(lo_x, x0), lo_y = std::min(lo_y, y0);
        hi_x = std::max(hi_x, x1), hi_y = std::max(hi_y, y1);
    };
    for (const Point& p : inst.points)
        grow(p.x, p.y, p.x, p.y);
    auto radius_at = [&](const BurnSource& s) { return s.rate * std::max(0, shown - s.ignition_step); };
    if (sched)
        for (const BurnSource& s : sched->sources) {
            const double r = radius_at(s);
            grow(s.center.x - r, s.center.y - r, s.center.x + r, s.center.y + r);
        }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double scale = (opt.width - 2 * opt.margin) / span;
    const double height = (hi_y - lo_y) * scale + 2 * opt.margin;
    auto sx = [&](double x) { return detail::num(opt.margin + (x - lo_x) * scale); };
    auto sy = [&](double y) { return detail::num(opt.margin + (hi_y - y) * scale); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::num(opt.width) << "\" height=\""
       << detail::num(height) << "\" viewBox=\"0 0 " << detail::num(opt.width) << ' ' << detail::num(height)
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (sched)
        for (const BurnSource& s : sched->sources) {
            if (s.ignition_step > shown)
                continue;
            os << "<circle class=\"front\" cx=\"" << sx(s.center.x) << "\" cy=\"" << sy(s.center.y) << "\" r=\""
               << detail::num(radius_at(s) * scale) << "\" fill=\"#ff8c0033\" stroke=\"#d2691e\"/>\n";
        }
    for (const Point& p : inst.points)
        os << "<circle class=\"point\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3\" fill=\"black\"/>\n";
    if (sched)
        for (const BurnSource& s : sched->sources) {
            const std::string x = sx(s.center.x), y = sy(s.center.y);
            os << "<path class=\"source\" d=\"M " << x << ' ' << y << " m -5 -5 l 10 10 m 0 -10 l -10 10\" "
               << "stroke=\"#b22222\" stroke-width=\"2\"/>\n";
            os << "<text x=\"" << x << "\" y=\"" << y << "\" dx=\"6\" dy=\"-6\" font-size=\"11\">"
               << s.ignition_step << "</text>\n";
        }
    os << "</svg>\n";
    return os.str();
}

} // namespace geoburn

#endif // GEOBURN_SVG_HPP
