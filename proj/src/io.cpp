#include "fprf/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fprf {
namespace io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);  // binary keeps LF endings
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    return f;
}

}  // namespace

void write_point_pattern_csv(const std::string& path, const sampling::PointPattern& pat) {
    auto f = open_out(path);
    f << "x,y\n";
    for (const auto& p : pat.points)
        f << format_double(p[0]) << ',' << format_double(p[1]) << '\n';
}

sampling::PointPattern read_point_pattern_csv(const std::string& path, double t1,
                                              double t2) {
    auto f = open_in(path);
    sampling::PointPattern pat;
    pat.t1 = t1;
    pat.t2 = t2;
    std::string line;
    std::getline(f, line);  // header
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        pat.points.push_back(
            {std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    }
    return pat;
}

void write_count_samples_csv(const std::string& path, const std::vector<long>& samples) {
    auto f = open_out(path);
    f << "sample_index,k\n";
    for (std::size_t i = 0; i < samples.size(); ++i)
        f << i << ',' << samples[i] << '\n';
}

std::vector<long> read_count_samples_csv(const std::string& path) {
    auto f = open_in(path);
    std::vector<long> out;
    std::string line;
    std::getline(f, line);
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        out.push_back(std::stol(line.substr(line.find(',') + 1)));
    }
    return out;
}

void write_planar_endpoints_csv(const std::string& path,
                                const std::vector<motion::PlanarSample>& rows) {
    auto f = open_out(path);
    f << "x,y,k\n";
    for (const auto& r : rows)
        f << format_double(r.x) << ',' << format_double(r.y) << ',' << r.switches
          << '\n';
}

void write_linear_endpoints_csv(const std::string& path, const std::vector<double>& xs,
                                const std::vector<long>& ks) {
    if (xs.size() != ks.size())
        throw std::invalid_argument("write_linear_endpoints_csv: size mismatch");
    auto f = open_out(path);
    f << "x,k\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        f << format_double(xs[i]) << ',' << ks[i] << '\n';
}

void write_grid_distribution(const std::string& csv_path, const std::string& json_path,
                             const compound::GridDistribution& density,
                             const compound::GridDistribution& cdf) {
    if (density.masses.size() != cdf.masses.size())
        throw std::invalid_argument("write_grid_distribution: grid size mismatch");
    auto f = open_out(csv_path);
    f << "y,cdf,density\n";
    for (std::size_t i = 0; i < density.masses.size(); ++i) {
        double y = density.origin + (i + 0.5) * density.step;
        f << format_double(y) << ',' << format_double(cdf.masses[i]) << ','
          << format_double(density.masses[i]) << '\n';
    }
    nlohmann::json j;
    j["schema"] = 1;
    j["origin"] = density.origin;
    j["step"] = density.step;
    j["atom_at_zero"] = density.atom_at_zero;
    j["cells"] = density.masses.size();
    auto jf = open_out(json_path);
    jf << j.dump(2) << '\n';
}

void write_svg_plot(const std::string& path, const std::vector<std::vector<XY>>& series,
                    const std::string& title, bool scatter) {
    const int W = 720, H = 480, M = 56;
    double xmin = 1e308, xmax = -1e308, ymin = 1e308, ymax = -1e308;
    for (const auto& s : series)
        for (const auto& p : s) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    auto px = [&](double x) { return M + (W - 2 * M) * (x - xmin) / (xmax - xmin); };
    auto py = [&](double y) { return H - M - (H - 2 * M) * (y - ymin) / (ymax - ymin); };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

    auto f = open_out(path);
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
      << H << "\">\n";
    f << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    f << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << title << "</text>\n";
    f << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M << "\" y2=\""
      << H - M << "\" stroke=\"black\"/>\n";
    f << "<line x1=\"" << M << "\" y1=\"" << M << "\" x2=\"" << M << "\" y2=\"" << H - M
      << "\" stroke=\"black\"/>\n";
    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* col = colors[si % 4];
        if (scatter) {
            for (const auto& p : series[si])
                f << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y)
                  << "\" r=\"2\" fill=\"" << col << "\"/>\n";
        } else {
            f << "<polyline fill=\"none\" stroke=\"" << col << "\" points=\"";
            for (const auto& p : series[si]) f << px(p.x) << ',' << py(p.y) << ' ';
            f << "\"/>\n";
        }
    }
    f << "<text x=\"" << W - M << "\" y=\"" << H - M + 28
      << "\" text-anchor=\"end\" font-size=\"11\">[" << format_double(xmin) << ", "
      << format_double(xmax) << "]</text>\n";
    f << "</svg>\n";
}

}  // namespace io
}  // namespace fprf
