#pragma once

#include <iosfwd>
#include <string>

#include "sppspec/bloch.hpp"
#include "sppspec/grid_function.hpp"
#include "sppspec/spectral.hpp"

namespace sppspec::io {

/// CSV with a header row "x,value"; values printed with 17 significant
/// digits so finite doubles round-trip bit-faithfully.
void write_grid_csv(const GridFunction& g, std::ostream& os);
void write_grid_csv(const GridFunction& g, const std::string& path);
GridFunction read_grid_csv(std::istream& is);
GridFunction read_grid_csv(const std::string& path);

/// JSON document {"period": T, "samples": [...]}.
void write_grid_json(const GridFunction& g, std::ostream& os);
void write_grid_json(const GridFunction& g, const std::string& path);
GridFunction read_grid_json(std::istream& is);
GridFunction read_grid_json(const std::string& path);

/// Reads CSV or JSON depending on the file's leading character.
GridFunction read_grid_auto(const std::string& path);

/// Fixed columns n,lambda,bc_label,multiplicity,omega_plus,omega_minus;
/// negative-lambda rows print nan in the omega columns.
void write_report_csv(const SpectrumReport& r, std::ostream& os, int precision = 15);
void write_report_json(const SpectrumReport& r, std::ostream& os, int precision = 15);

/// Discriminant sweep rows (lambda, D) for external plotting.
void write_sweep_csv(const std::vector<std::pair<double, double>>& rows, std::ostream& os, int precision = 15);

/// Cell/extension dump: x, Re/Im of both branches of the upper component,
/// then of the lower component when present.
void write_bloch_csv(const std::vector<double>& xs,
                     const std::vector<Complex>& f_plus, const std::vector<Complex>& f_minus,
                     const std::vector<Complex>& g_plus, const std::vector<Complex>& g_minus,
                     std::ostream& os, int precision = 15);
void write_bloch_json(const std::vector<double>& xs,
                      const std::vector<Complex>& f_plus, const std::vector<Complex>& f_minus,
                      const std::vector<Complex>& g_plus, const std::vector<Complex>& g_minus,
                      std::ostream& os, int precision = 15);

} // namespace sppspec::io
