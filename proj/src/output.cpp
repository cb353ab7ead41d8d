#include "sgdec/output.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace sgdec {

static_assert(std::endian::native == std::endian::little, "SGF1 writer assumes a little-endian host");

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_series_csv(const std::string& path, const Series& s) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << "t";
    for (const auto& c : s.columns) f << "," << csv_escape(c);
    f << "\n";
    for (std::size_t k = 0; k < s.t.size(); ++k) {
        f << format_double(s.t[k]);
        for (const auto& col : s.cols) f << "," << format_double(col[k]);
        f << "\n";
    }
    if (!f) throw IoError("write failed for " + path);
}

Series read_series_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    Series s;
    std::string line;
    if (!std::getline(f, line)) throw IoError("empty CSV " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::stringstream hdr(line);
    std::string tok;
    bool first = true;
    while (std::getline(hdr, tok, ',')) {
        if (first) {
            first = false;
            continue;
        }
        s.columns.push_back(tok);
    }
    s.cols.resize(s.columns.size());
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t pos = 0, col = 0;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos) comma = line.size();
            double v = 0.0;
            std::from_chars(line.data() + pos, line.data() + comma, v);
            if (col == 0)
                s.t.push_back(v);
            else if (col - 1 < s.cols.size())
                s.cols[col - 1].push_back(v);
            ++col;
            pos = comma + 1;
            if (comma == line.size()) break;
        }
    }
    return s;
}

struct Sgf1Writer::Impl {
    std::ofstream f;
    std::string path;
    SpacetimeGrid grid;
    std::uint32_t expected = 0;
    std::uint32_t written = 0;
    bool closed = false;
};

namespace {
template <class T> void put(std::ofstream& f, T v) {
    f.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
} // namespace

Sgf1Writer::Sgf1Writer(const std::string& path, const SpacetimeGrid& grid, std::uint32_t n_snapshots)
    : impl_(new Impl) {
    impl_->path = path;
    impl_->grid = grid;
    impl_->expected = n_snapshots;
    impl_->f.open(path, std::ios::binary);
    if (!impl_->f) {
        delete impl_;
        impl_ = nullptr;
        throw IoError("cannot open " + path + " for writing");
    }
    impl_->f.write("SGF1", 4);
    put<std::uint32_t>(impl_->f, static_cast<std::uint32_t>(grid.nx));
    put<std::uint32_t>(impl_->f, n_snapshots);
    put<double>(impl_->f, grid.dx);
    put<double>(impl_->f, grid.dt);
    put<double>(impl_->f, grid.x_min);
}

Sgf1Writer::~Sgf1Writer() {
    if (impl_) {
        try {
            close();
        } catch (...) {
        }
        delete impl_;
    }
}

void Sgf1Writer::append(double t, const FieldState& st) {
    auto& f = impl_->f;
    put<double>(f, t);
    f.write(reinterpret_cast<const char*>(st.varphi.data()),
            static_cast<std::streamsize>(st.varphi.size() * sizeof(double)));
    f.write(reinterpret_cast<const char*>(st.phi_x.data()),
            static_cast<std::streamsize>(st.phi_x.size() * sizeof(double)));
    f.write(reinterpret_cast<const char*>(st.phi_t.data()),
            static_cast<std::streamsize>(st.phi_t.size() * sizeof(double)));
    if (!f) throw IoError("write failed for " + impl_->path);
    impl_->written += 1;
}

void Sgf1Writer::close() {
    if (impl_->closed) return;
    impl_->closed = true;
    if (impl_->written != impl_->expected) {
        // patch the header count so partial files stay readable
        impl_->f.seekp(8, std::ios::beg);
        put<std::uint32_t>(impl_->f, impl_->written);
    }
    impl_->f.close();
    if (!impl_->f) throw IoError("close failed for " + impl_->path);
}

Sgf1File read_sgf1(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    char magic[4];
    f.read(magic, 4);
    if (!f || std::memcmp(magic, "SGF1", 4) != 0) throw IoError(path + ": not an SGF1 file");
    std::uint32_t nx = 0, ns = 0;
    f.read(reinterpret_cast<char*>(&nx), 4);
    f.read(reinterpret_cast<char*>(&ns), 4);
    Sgf1File out;
    f.read(reinterpret_cast<char*>(&out.grid.dx), 8);
    f.read(reinterpret_cast<char*>(&out.grid.dt), 8);
    f.read(reinterpret_cast<char*>(&out.grid.x_min), 8);
    out.grid.nx = static_cast<int>(nx);
    out.times.resize(ns);
    out.varphi.assign(ns, std::vector<double>(nx));
    out.phi_x.assign(ns, std::vector<double>(nx - 1));
    out.phi_t.assign(ns, std::vector<double>(nx));
    for (std::uint32_t k = 0; k < ns; ++k) {
        f.read(reinterpret_cast<char*>(&out.times[k]), 8);
        f.read(reinterpret_cast<char*>(out.varphi[k].data()), static_cast<std::streamsize>(nx * 8));
        f.read(reinterpret_cast<char*>(out.phi_x[k].data()), static_cast<std::streamsize>((nx - 1) * 8));
        f.read(reinterpret_cast<char*>(out.phi_t[k].data()), static_cast<std::streamsize>(nx * 8));
        if (!f) throw IoError(path + ": truncated snapshot " + std::to_string(k));
    }
    return out;
}

void write_heatmap_ppm(const std::string& path, const std::vector<std::vector<double>>& rows,
                       int max_width) {
    if (rows.empty() || rows.front().empty()) throw IoError("write_heatmap_ppm: empty data");
    const int h = static_cast<int>(rows.size());
    const int src_w = static_cast<int>(rows.front().size());
    const int w = std::min(src_w, max_width);
    double lim = 0.0, mn = rows[0][0], mx = rows[0][0];
    for (const auto& r : rows)
        for (double v : r) {
            lim = std::max(lim, std::fabs(v));
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
    if (lim == 0.0) lim = 1.0;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << "P6\n" << w << " " << h << "\n255\n";
    std::vector<unsigned char> line(static_cast<std::size_t>(w) * 3);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const int sc = static_cast<int>(static_cast<long long>(c) * src_w / w);
            const double v = std::clamp(rows[r][sc] / lim, -1.0, 1.0);
            // blue (-1) -> white (0) -> red (+1)
            unsigned char R, G, B;
            if (v < 0) {
                R = static_cast<unsigned char>(255 * (1.0 + v));
                G = static_cast<unsigned char>(255 * (1.0 + v));
                B = 255;
            } else {
                R = 255;
                G = static_cast<unsigned char>(255 * (1.0 - v));
                B = static_cast<unsigned char>(255 * (1.0 - v));
            }
            line[3 * c] = R;
            line[3 * c + 1] = G;
            line[3 * c + 2] = B;
        }
        f.write(reinterpret_cast<const char*>(line.data()), static_cast<std::streamsize>(line.size()));
    }
    if (!f) throw IoError("write failed for " + path);
    std::ofstream s(path + ".minmax");
    if (!s) throw IoError("cannot open " + path + ".minmax");
    s << format_double(mn) << "\n" << format_double(mx) << "\n";
}

} // namespace sgdec
