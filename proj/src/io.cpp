#include "sppspec/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sppspec::io {

namespace {

std::string fmt(double v, int precision) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::string fmt17(double v) { return fmt(v, 17); }

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

} // namespace

void write_grid_csv(const GridFunction& g, std::ostream& os) {
    os << "x,value\n";
    for (std::size_t j = 0; j < g.size(); ++j)
        os << fmt17(g.node(j)) << ',' << fmt17(g[j]) << '\n';
}

void write_grid_csv(const GridFunction& g, const std::string& path) {
    auto os = open_out(path);
    write_grid_csv(g, os);
}

GridFunction read_grid_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("grid csv: empty input");
    std::vector<double> xs, vs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("grid csv: missing comma in row");
        xs.push_back(std::strtod(line.c_str(), nullptr));
        vs.push_back(std::strtod(line.c_str() + comma + 1, nullptr));
    }
    if (xs.size() < 3) throw std::runtime_error("grid csv: need at least 3 rows");
    return GridFunction(xs.back(), std::move(vs));
}

GridFunction read_grid_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_grid_csv(is);
}

void write_grid_json(const GridFunction& g, std::ostream& os) {
    nlohmann::json j{{"period", g.period()},
                     {"samples", std::vector<double>(g.samples().begin(), g.samples().end())}};
    os << j.dump();
}

void write_grid_json(const GridFunction& g, const std::string& path) {
    auto os = open_out(path);
    write_grid_json(g, os);
}

GridFunction read_grid_json(std::istream& is) {
    nlohmann::json j;
    is >> j;
    return GridFunction(j.at("period").get<double>(), j.at("samples").get<std::vector<double>>());
}

GridFunction read_grid_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_grid_json(is);
}

GridFunction read_grid_auto(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    char c = 0;
    is >> std::ws;
    is.get(c);
    is.unget();
    if (c == '{') return read_grid_json(is);
    return read_grid_csv(is);
}

void write_report_csv(const SpectrumReport& r, std::ostream& os, int precision) {
    os << "n,lambda,bc_label,multiplicity,omega_plus,omega_minus\n";
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        const BandEdge& e = r.edges[i];
        os << i << ',' << fmt(e.lambda, precision) << ',' << to_string(e.bc) << ','
           << to_string(e.multiplicity) << ',';
        if (e.lambda < 0.0 && std::fabs(e.lambda) > 1e-12) {
            os << "nan,nan\n";
        } else {
            const double w = std::fabs(e.lambda) <= 1e-12 ? 0.0 : std::sqrt(e.lambda);
            os << fmt(w, precision) << ',' << fmt(-w, precision) << '\n';
        }
    }
}

void write_report_json(const SpectrumReport& r, std::ostream& os, int precision) {
    (void)precision; // JSON numbers round-trip at full precision
    nlohmann::json j;
    j["lambda_shift"] = r.lambda_shift;
    j["window"] = {r.window_lo, r.window_hi};
    j["edges"] = nlohmann::json::array();
    for (const BandEdge& e : r.edges)
        j["edges"].push_back({{"lambda", e.lambda},
                              {"bc_label", to_string(e.bc)},
                              {"multiplicity", to_string(e.multiplicity)}});
    j["bands"] = r.bands;
    j["gaps"] = r.gaps;
    j["dirac_edges"] = r.dirac_edges;
    j["no_real_omega"] = r.no_real_omega;
    os << j.dump(2) << '\n';
}

void write_sweep_csv(const std::vector<std::pair<double, double>>& rows, std::ostream& os, int precision) {
    os << "lambda,D\n";
    for (const auto& [lam, d] : rows) os << fmt(lam, precision) << ',' << fmt(d, precision) << '\n';
}

namespace {

void bloch_header(std::ostream& os, bool with_lower) {
    os << "x,re_f_plus,im_f_plus,re_f_minus,im_f_minus";
    if (with_lower) os << ",re_g_plus,im_g_plus,re_g_minus,im_g_minus";
    os << '\n';
}

} // namespace

void write_bloch_csv(const std::vector<double>& xs,
                     const std::vector<Complex>& f_plus, const std::vector<Complex>& f_minus,
                     const std::vector<Complex>& g_plus, const std::vector<Complex>& g_minus,
                     std::ostream& os, int precision) {
    const bool with_lower = !g_plus.empty();
    bloch_header(os, with_lower);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << fmt(xs[i], precision) << ',' << fmt(f_plus[i].real(), precision) << ','
           << fmt(f_plus[i].imag(), precision) << ',' << fmt(f_minus[i].real(), precision) << ','
           << fmt(f_minus[i].imag(), precision);
        if (with_lower)
            os << ',' << fmt(g_plus[i].real(), precision) << ',' << fmt(g_plus[i].imag(), precision)
               << ',' << fmt(g_minus[i].real(), precision) << ',' << fmt(g_minus[i].imag(), precision);
        os << '\n';
    }
}

void write_bloch_json(const std::vector<double>& xs,
                      const std::vector<Complex>& f_plus, const std::vector<Complex>& f_minus,
                      const std::vector<Complex>& g_plus, const std::vector<Complex>& g_minus,
                      std::ostream& os, int precision) {
    (void)precision;
    auto pack = [](const std::vector<Complex>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Complex& c : v) arr.push_back({c.real(), c.imag()});
        return arr;
    };
    nlohmann::json j;
    j["x"] = xs;
    j["f_plus"] = pack(f_plus);
    j["f_minus"] = pack(f_minus);
    if (!g_plus.empty()) {
        j["g_plus"] = pack(g_plus);
        j["g_minus"] = pack(g_minus);
    }
    os << j.dump(2) << '\n';
}

} // namespace sppspec::io
