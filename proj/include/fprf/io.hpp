#ifndef FPRF_IO_HPP
#define FPRF_IO_HPP

#include <string>
#include <vector>

#include "fprf/compound.hpp"
#include "fprf/motion.hpp"
#include "fprf/sampling.hpp"

namespace fprf {
namespace io {

// All files are UTF-8 with LF line endings; doubles are printed with 17
// significant digits so a re-read reproduces the in-memory value exactly.
std::string format_double(double x);

void write_point_pattern_csv(const std::string& path, const sampling::PointPattern& pat);
sampling::PointPattern read_point_pattern_csv(const std::string& path, double t1,
                                              double t2);

void write_count_samples_csv(const std::string& path, const std::vector<long>& samples);
std::vector<long> read_count_samples_csv(const std::string& path);

void write_planar_endpoints_csv(const std::string& path,
                                const std::vector<motion::PlanarSample>& rows);
void write_linear_endpoints_csv(const std::string& path,
                                const std::vector<double>& xs,
                                const std::vector<long>& ks);

// GridDistribution: CSV `y,cdf,density` plus a JSON header file carrying
// origin/step/atom.
void write_grid_distribution(const std::string& csv_path, const std::string& json_path,
                             const compound::GridDistribution& density,
                             const compound::GridDistribution& cdf);

struct XY {
    double x, y;
};
// Minimal self-contained SVG line/scatter plot.
void write_svg_plot(const std::string& path, const std::vector<std::vector<XY>>& series,
                    const std::string& title, bool scatter);

}  // namespace io
}  // namespace fprf

#endif
