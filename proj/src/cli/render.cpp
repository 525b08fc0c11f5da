#include "stabmod/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace stabmod::cli {

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 36;

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + v[i];
    return out;
}

struct Panel
{
    int x_min, x_max, s_min, s_max;
    int width() const { return (x_max - x_min + 1) * kCell + 2 * kMargin; }
    int height() const { return (s_max - s_min + 1) * kCell + 2 * kMargin; }
};

Panel panel_for(const stable::ChartWindow& w)
{
    return {w.t_min - w.s_max, w.t_max - w.s_min, w.s_min, w.s_max};
}

/// Draws one chart with its lower-left grid corner placed by ox, oy (panel origin at top-left).
void draw_panel(std::ostringstream& out, const stable::BigradedChart& c, const Panel& p, int ox, const std::string& title, bool labels)
{
    const int gx = ox + kMargin, gy = kMargin;
    const int cols = p.x_max - p.x_min + 1, rows = p.s_max - p.s_min + 1;
    out << "<text x=\"" << gx << "\" y=\"" << gy - 14 << "\" font-size=\"12\">" << xml_escape(title) << "</text>\n";
    out << "<g stroke=\"#ddd\" stroke-width=\"1\">\n";
    for (int i = 0; i <= cols; ++i)
        out << "<line x1=\"" << gx + i * kCell << "\" y1=\"" << gy << "\" x2=\"" << gx + i * kCell << "\" y2=\"" << gy + rows * kCell << "\"/>\n";
    for (int j = 0; j <= rows; ++j)
        out << "<line x1=\"" << gx << "\" y1=\"" << gy + j * kCell << "\" x2=\"" << gx + cols * kCell << "\" y2=\"" << gy + j * kCell << "\"/>\n";
    out << "</g>\n<g font-size=\"9\" fill=\"#555\">\n";
    for (int x = p.x_min; x <= p.x_max; ++x)
        if (x % 2 == 0)
            out << "<text x=\"" << gx + (x - p.x_min) * kCell + kCell / 2 - 3 << "\" y=\"" << gy + rows * kCell + 12 << "\">" << x << "</text>\n";
    for (int s = p.s_min; s <= p.s_max; ++s)
        out << "<text x=\"" << gx - 20 << "\" y=\"" << gy + (p.s_max - s) * kCell + kCell / 2 + 3 << "\">" << s << "</text>\n";
    out << "</g>\n";
    for (const auto& [st, d] : c.dims) {
        const auto [s, t] = st;
        const int x = t - s;
        if (x < p.x_min || x > p.x_max || s < p.s_min || s > p.s_max || d <= 0)
            continue;
        const int cx = gx + (x - p.x_min) * kCell + kCell / 2;
        const int top = gy + (p.s_max - s) * kCell;
        auto lab = c.labels.find(st);
        for (int k = 0; k < d; ++k) {
            const int cy = top + (k + 1) * kCell / (d + 1);
            out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\"/>\n";
            if (labels && lab != c.labels.end() && k < static_cast<int>(lab->second.size()))
                out << "<text x=\"" << cx + 4 << "\" y=\"" << cy - 2 << "\" font-size=\"7\">" << xml_escape(lab->second[static_cast<std::size_t>(k)])
                    << "</text>\n";
        }
    }
}

std::string svg_document(int width, int height, const std::string& body)
{
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\" font-family=\"monospace\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body << "</svg>\n";
    return out.str();
}

} // namespace

std::string render_chart_text(const stable::BigradedChart& c, const std::string& title)
{
    const auto& w = c.window;
    std::ostringstream out;
    out << "chart " << title << "\n";
    out << "window " << w.s_min << " " << w.s_max << " " << w.t_min << " " << w.t_max << "\n";
    out << "total " << c.total() << "\n";
    for (const auto& [st, d] : c.dims) {
        if (d == 0)
            continue;
        out << "entry " << st.first << " " << st.second << " " << d;
        auto it = c.labels.find(st);
        if (it != c.labels.end())
            out << " " << join(it->second, ",");
        out << "\n";
    }
    // Adams orientation grid: rows s from top, columns t - s.
    const auto p = panel_for(w);
    for (int s = p.s_max; s >= p.s_min; --s) {
        out << "# " << (s < 0 ? "" : " ") << (std::abs(s) < 10 ? " " : "") << s << " |";
        for (int x = p.x_min; x <= p.x_max; ++x) {
            const int d = c.dim(s, x + s);
            out << (d == 0 ? '.' : d > 9 ? '+' : static_cast<char>('0' + d));
        }
        out << "\n";
    }
    out << "#     x = t - s from " << p.x_min << " to " << p.x_max << "\n";
    return out.str();
}

std::pair<stable::BigradedChart, std::string> parse_chart_text(const std::string& text, const std::string& source)
{
    stable::BigradedChart c;
    std::string title;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool have_window = false;
    int total = -1;
    while (std::getline(in, raw)) {
        ++line;
        if (raw.empty() || raw[0] == '#')
            continue;
        std::istringstream ls(raw);
        std::string kind;
        ls >> kind;
        auto bad = [&](const std::string& why) { return InputError(source + ":" + std::to_string(line) + ": " + why); };
        if (kind == "chart") {
            std::getline(ls >> std::ws, title);
        } else if (kind == "window") {
            auto& w = c.window;
            if (!(ls >> w.s_min >> w.s_max >> w.t_min >> w.t_max))
                throw bad("window needs four integers");
            have_window = true;
        } else if (kind == "total") {
            if (!(ls >> total))
                throw bad("total needs an integer");
        } else if (kind == "entry") {
            int s = 0, t = 0, d = 0;
            if (!(ls >> s >> t >> d) || d <= 0)
                throw bad("entry needs s t dim with dim > 0");
            c.dims[{s, t}] = d;
            std::string labs;
            if (ls >> labs) {
                std::vector<std::string> v;
                std::istringstream ss(labs);
                std::string l;
                while (std::getline(ss, l, ','))
                    v.push_back(l);
                c.labels[{s, t}] = v;
            }
        } else {
            throw bad("unknown record '" + kind + "'");
        }
    }
    if (!have_window)
        throw InputError(source + ": chart has no window");
    if (total >= 0 && total != c.total())
        throw InputError(source + ": total " + std::to_string(total) + " does not match entries (" + std::to_string(c.total()) + ")");
    return {c, title};
}

std::string render_chart_svg(const stable::BigradedChart& c, const std::string& title, bool labels)
{
    const auto p = panel_for(c.window);
    std::ostringstream body;
    draw_panel(body, c, p, 0, title, labels);
    return svg_document(p.width(), p.height(), body.str());
}

std::string render_page_text(const descent::SSPage& p)
{
    const auto& w = p.window;
    std::ostringstream out;
    out << "page " << p.label << "\n";
    out << "r " << p.r << "\n";
    out << "window s " << w.s_min << " " << w.s_max << " t " << w.t_min << " " << w.t_max << " n " << w.n_min << " " << w.n_max << "\n";
    out << "d1 " << (p.d1_determined ? "determined" : "undetermined") << "\n";
    out << "total " << p.total() << "\n";
    for (const auto& [d, k] : p.dims) {
        if (k == 0)
            continue;
        out << "entry " << d.n << " " << d.s << " " << d.t << " " << k;
        auto it = p.labels.find(d);
        if (it != p.labels.end())
            out << " " << join(it->second, ",");
        out << "\n";
    }
    for (const auto& wmsg : p.warnings)
        out << "warning " << wmsg << "\n";
    return out.str();
}

std::string render_page_svg(const descent::SSPage& p, bool labels)
{
    const stable::ChartWindow cw{p.window.s_min, p.window.s_max, p.window.t_min, p.window.t_max};
    const auto panel = panel_for(cw);
    std::ostringstream body;
    int ox = 0;
    for (int n = p.window.n_min; n <= p.window.n_max; ++n) {
        stable::BigradedChart c;
        c.window = cw;
        for (const auto& [d, k] : p.dims)
            if (d.n == n && k > 0) {
                c.dims[{d.s, d.t}] = k;
                auto it = p.labels.find(d);
                if (it != p.labels.end())
                    c.labels[{d.s, d.t}] = it->second;
            }
        draw_panel(body, c, panel, ox, p.label + " n=" + std::to_string(n) + (p.d1_determined ? "" : " (d1 undetermined)"), labels);
        ox += panel.width();
    }
    return svg_document(std::max(ox, 1), panel.height(), body.str());
}

} // namespace stabmod::cli
