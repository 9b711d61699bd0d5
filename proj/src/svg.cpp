#include "mixres/svg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mixres/errors.hpp"
#include "mixres/fan.hpp"
#include "mixres/newton.hpp"

namespace mixres {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << v;
    std::string s = os.str();
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string emit_svg(const MixedPolynomial& f) {
    if (f.n() != 2) throw UnsupportedDimension("diagram emission");
    NewtonBoundary boundary = newton_boundary(f);  // validates convenience
    auto sup = support(f);
    ConeSubdivision subdivision = canonical_subdivision(f);
    auto rays = subdivision.rays();

    const double panel = 260.0, height = 300.0, margin = 44.0;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(2 * panel + 60)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(2 * panel + 60) << " "
        << fmt(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Left panel: the staircase.
    int max_coord = 1;
    for (const auto& s : sup) max_coord = std::max({max_coord, s.point[0], s.point[1]});
    const double scale = (panel - 2 * margin) / max_coord;
    auto sx = [&](double x) { return margin + x * scale; };
    auto sy = [&](double y) { return height - margin - y * scale; };

    svg << "<g id=\"staircase\">\n";
    svg << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\""
        << fmt(sx(max_coord + 0.6)) << "\" y2=\"" << fmt(sy(0))
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(sx(0))
        << "\" y2=\"" << fmt(sy(max_coord + 0.6)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    std::string path;
    for (std::size_t i = 0; i < boundary.vertices.size(); ++i) {
        const auto& v = boundary.vertices[i];
        path += (i ? " L " : "M ") + fmt(sx(v[0])) + " " + fmt(sy(v[1]));
    }
    svg << "<path d=\"" << path << "\" fill=\"none\" stroke=\"#205090\" stroke-width=\"2\"/>\n";
    // Unbounded parts of the polyhedron boundary, dashed.
    const auto& first = boundary.vertices.front();
    const auto& last = boundary.vertices.back();
    svg << "<line x1=\"" << fmt(sx(first[0])) << "\" y1=\"" << fmt(sy(first[1])) << "\" x2=\""
        << fmt(sx(first[0] + 0.8)) << "\" y2=\"" << fmt(sy(first[1]))
        << "\" stroke=\"#205090\" stroke-width=\"2\" stroke-dasharray=\"4 3\"/>\n";
    svg << "<line x1=\"" << fmt(sx(last[0])) << "\" y1=\"" << fmt(sy(last[1])) << "\" x2=\""
        << fmt(sx(last[0])) << "\" y2=\"" << fmt(sy(last[1] + 0.8))
        << "\" stroke=\"#205090\" stroke-width=\"2\" stroke-dasharray=\"4 3\"/>\n";

    std::set<std::vector<int>> on_boundary(boundary.vertices.begin(), boundary.vertices.end());
    for (const auto& s : sup) {
        bool vertex = on_boundary.count(s.point) != 0;
        svg << "<circle class=\"support\" cx=\"" << fmt(sx(s.point[0])) << "\" cy=\""
            << fmt(sy(s.point[1])) << "\" r=\"" << (vertex ? "4" : "3") << "\" fill=\""
            << (vertex ? "#205090" : "white") << "\" stroke=\"#205090\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << fmt(sx(s.point[0]) + 6) << "\" y=\"" << fmt(sy(s.point[1]) - 6)
            << "\" font-size=\"10\" font-family=\"sans-serif\">(" << s.point[0] << ","
            << s.point[1] << ")</text>\n";
    }
    svg << "<text x=\"" << fmt(margin) << "\" y=\"20\" font-size=\"12\" "
        << "font-family=\"sans-serif\">staircase " << esc(render(f)) << "</text>\n";
    svg << "</g>\n";

    // Right panel: the subdivided fan.
    const double ox = panel + 60 + margin, oy = height - margin, len = panel - 2 * margin;
    svg << "<g id=\"fan\">\n";
    for (const auto& ray : rays) {
        double a = static_cast<double>(ray[0]), b = static_cast<double>(ray[1]);
        double norm = std::sqrt(a * a + b * b);
        double ex = ox + len * a / norm, ey = oy - len * b / norm;
        svg << "<line class=\"ray\" x1=\"" << fmt(ox) << "\" y1=\"" << fmt(oy) << "\" x2=\""
            << fmt(ex) << "\" y2=\"" << fmt(ey) << "\" stroke=\"#803020\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << fmt(ox + (len + 14) * a / norm - 10) << "\" y=\""
            << fmt(oy - (len + 14) * b / norm + 4) << "\" font-size=\"10\" "
            << "font-family=\"sans-serif\">(" << ray[0] << "," << ray[1] << ")</text>\n";
    }
    svg << "<text x=\"" << fmt(panel + 60 + margin) << "\" y=\"20\" font-size=\"12\" "
        << "font-family=\"sans-serif\">canonical subdivision, " << subdivision.max_cones.size()
        << " maximal cones</text>\n";
    svg << "</g>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace mixres
