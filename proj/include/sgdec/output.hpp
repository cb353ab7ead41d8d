#ifndef SGDEC_OUTPUT_HPP
#define SGDEC_OUTPUT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgdec/grid.hpp"
#include "sgdec/state.hpp"

namespace sgdec {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal form of a double that parses back to the same bits.
std::string format_double(double v);

/// RFC-4180 field quoting: fields containing comma, quote or newline are
/// quoted, embedded quotes doubled.
std::string csv_escape(const std::string& field);

/// Column-oriented time series; first CSV column is always t.
struct Series {
    std::string name;
    std::vector<std::string> columns;
    std::vector<double> t;
    std::vector<std::vector<double>> cols; // one vector per column, same length as t
};
void write_series_csv(const std::string& path, const Series& s);
Series read_series_csv(const std::string& path);

/// SGF1 field snapshot container:
///   magic "SGF1", u32 nx, u32 n_snapshots, f64 dx, f64 dt, f64 x_min,
///   then per snapshot: f64 t, nx f64 varphi, (nx-1) f64 phi_x, nx f64 phi_t.
/// Little-endian throughout.
class Sgf1Writer {
public:
    Sgf1Writer(const std::string& path, const SpacetimeGrid& grid, std::uint32_t n_snapshots);
    ~Sgf1Writer();
    void append(double t, const FieldState& st);
    void close();

private:
    struct Impl;
    Impl* impl_;
};

struct Sgf1File {
    SpacetimeGrid grid;
    std::vector<double> times;
    std::vector<std::vector<double>> varphi;
    std::vector<std::vector<double>> phi_x;
    std::vector<std::vector<double>> phi_t;
};
Sgf1File read_sgf1(const std::string& path);

/// Binary PPM (P6) heatmap of a snapshot matrix (rows = snapshots, cols = x),
/// symmetric diverging colormap (blue-white-red) about zero, limits +-max|v|.
/// The actual (min, max) go to `path + ".minmax"` as two text lines.
void write_heatmap_ppm(const std::string& path, const std::vector<std::vector<double>>& rows,
                       int max_width = 2000);

} // namespace sgdec

#endif
