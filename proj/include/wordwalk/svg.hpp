#ifndef WORDWALK_SVG_HPP
#define WORDWALK_SVG_HPP

#include <string>

#include "wordwalk/format.hpp"
#include "wordwalk/walk.hpp"
#include "wordwalk/word.hpp"

namespace wordwalk {

// A walk as a single polyline on a unit grid: the generated word runs along
// the abscissa, the generating word up the ordinate. Output is plain
// SVG 1.1 assembled with integer coordinates, so identical inputs give
// byte-identical files.
inline std::string render_walk_svg(const Word& u, const Walk& f) {
    const int cell = 28;
    const int margin = 46;
    int n = u.size();
    int m = f.domain_length();
    Word w = apply(u, f);

    int width = margin * 2 + cell * (m > 1 ? m - 1 : 1);
    int height = margin * 2 + cell * (n > 1 ? n - 1 : 1);
    auto x_of = [&](int i) { return margin + cell * (i - 1); };
    auto y_of = [&](int p) { return margin + cell * (n - p); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // grid
    for (int p = 1; p <= n; ++p) {
        svg += "<line x1=\"" + std::to_string(x_of(1)) + "\" y1=\"" + std::to_string(y_of(p)) +
               "\" x2=\"" + std::to_string(x_of(std::max(m, 1))) + "\" y2=\"" +
               std::to_string(y_of(p)) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
    for (int i = 1; i <= m; ++i) {
        svg += "<line x1=\"" + std::to_string(x_of(i)) + "\" y1=\"" + std::to_string(y_of(n)) +
               "\" x2=\"" + std::to_string(x_of(i)) + "\" y2=\"" + std::to_string(y_of(1)) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }

    // ordinate labels: the letters of u
    for (int p = 1; p <= n; ++p) {
        svg += "<text x=\"" + std::to_string(margin - 18) + "\" y=\"" +
               std::to_string(y_of(p) + 4) +
               "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">" +
               letter_label(u.at(p)) + "</text>\n";
    }
    // abscissa labels: the letters of u^f
    for (int i = 1; i <= m; ++i) {
        svg += "<text x=\"" + std::to_string(x_of(i)) + "\" y=\"" +
               std::to_string(y_of(1) + 22) +
               "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">" +
               letter_label(w.at(i)) + "</text>\n";
    }

    // the course of values
    std::string points;
    for (int i = 1; i <= m; ++i) {
        if (!points.empty()) points += ' ';
        points += std::to_string(x_of(i)) + "," + std::to_string(y_of(f.at(i)));
    }
    svg += "<polyline points=\"" + points +
           "\" fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"2\"/>\n";
    for (int i = 1; i <= m; ++i) {
        svg += "<circle cx=\"" + std::to_string(x_of(i)) + "\" cy=\"" +
               std::to_string(y_of(f.at(i))) + "\" r=\"3\" fill=\"#1f4e99\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace wordwalk

#endif
