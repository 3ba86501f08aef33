#include "ns1d/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ns1d {

void write_polyline_svg(const std::string& path, const std::string& title,
                        const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw std::invalid_argument("write_polyline_svg: need matching nonempty series");
    }
    const double x_lo = *std::min_element(xs.begin(), xs.end());
    const double x_hi = *std::max_element(xs.begin(), xs.end());
    const double y_lo = *std::min_element(ys.begin(), ys.end());
    const double y_hi = *std::max_element(ys.begin(), ys.end());
    const double x_span = x_hi > x_lo ? x_hi - x_lo : 1.0;
    const double y_span = y_hi > y_lo ? y_hi - y_lo : 1.0;

    const double width = 800, height = 500;
    const double ml = 70, mr = 20, mt = 40, mb = 45;
    auto px = [&](double x) { return ml + (x - x_lo) / x_span * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - y_lo) / y_span * (height - mt - mb); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << ml << "\" y=\"" << height - mb + 18
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << x_lo << "</text>\n";
    out << "<text x=\"" << width - mr << "\" y=\"" << height - mb + 18
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << x_hi
        << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << height - mb
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << y_lo
        << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << y_hi
        << "</text>\n";
    out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out << px(xs[i]) << "," << py(ys[i]) << " ";
    }
    out << "\"/>\n</svg>\n";

    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    file << out.str();
    if (!file) {
        throw std::runtime_error("write failure on " + path);
    }
}

} // namespace ns1d
