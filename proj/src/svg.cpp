#include "rkp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace rkp {

namespace {

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string points_attr(const std::vector<std::pair<double, double>>& pts) {
    std::string out;
    for (const auto& [x, y] : pts) {
        if (!out.empty()) out += ' ';
        out += fmt6(x) + "," + fmt6(y);
    }
    return out;
}

}  // namespace

void write_profile_svg(std::ostream& os, const std::vector<DomainProfile>& profiles) {
    // the frame hugs the sampled data; the default sampling range already
    // extends 20% past the outermost corner
    double ext = 0.1;
    for (const auto& pr : profiles)
        for (const auto& [t, g] : pr.samples) ext = std::max({ext, t, std::fabs(g)});

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
          "width=\"480\" height=\"960\" viewBox=\"0 " << fmt6(-ext) << ' ' << fmt6(ext)
       << ' ' << fmt6(2.0 * ext) << "\">\n";
    // flip the vertical axis so larger ordinates render upward
    os << "  <g transform=\"scale(1,-1)\" stroke-width=\"" << fmt6(ext / 200.0) << "\">\n";
    os << "    <line x1=\"0\" y1=\"0\" x2=\"" << fmt6(ext) << "\" y2=\"" << fmt6(ext)
       << "\" stroke=\"#bbbbbb\"/>\n";
    os << "    <line x1=\"0\" y1=\"0\" x2=\"" << fmt6(ext) << "\" y2=\"" << fmt6(-ext)
       << "\" stroke=\"#bbbbbb\"/>\n";

    bool critical = false;
    for (const auto& pr : profiles) {
        std::vector<std::pair<double, double>> pts;
        pts.emplace_back(0.0, 0.0);
        pts.insert(pts.end(), pr.samples.begin(), pr.samples.end());
        switch (pr.component) {
            case ProfileComponent::Bounded:
                os << "    <polygon points=\"" << points_attr(pts)
                   << "\" fill=\"#9ecae1\" stroke=\"#2171b5\"/>\n";
                if (pr.c == -1.5) critical = true;
                break;
            case ProfileComponent::Unbounded: {
                // close the outline down to the lower cone edge
                pts.erase(pts.begin());
                pts.emplace_back(pts.back().first, -pts.back().first);
                pts.emplace_back(pr.samples.front().first, -pr.samples.front().first);
                os << "    <polygon points=\"" << points_attr(pts)
                   << "\" fill=\"none\" stroke=\"#cb181d\"/>\n";
                break;
            }
            case ProfileComponent::Connected: {
                pts.emplace_back(pts.back().first, -pts.back().first);
                pts.emplace_back(0.0, 0.0);
                os << "    <polygon points=\"" << points_attr(pts)
                   << "\" fill=\"#c7e9c0\" stroke=\"#238b45\"/>\n";
                break;
            }
        }
    }
    if (critical)
        os << "    <circle cx=\"0.500000\" cy=\"-0.500000\" r=\"" << fmt6(ext / 60.0)
           << "\" fill=\"#000000\"/>\n";
    os << "  </g>\n";
    os << "</svg>\n";
}

}  // namespace rkp
