#pragma once

#include "mixtype/integrator.hpp"

#include <string>
#include <vector>

namespace mixtype {

/// Shortest-roundtrip decimal rendering (17 significant digits).
std::string fmt17(double v);

/// Wide field CSV: header `t,x=<c1>,x=<c2>,...`, one row per time step, full
/// precision. `part` selects the u-block (coordinates at centers) or the
/// w-block (coordinates at nodes).
enum class FieldPart { U, W };
void write_field_csv(const std::string& path, const SpaceTimeField& field, FieldPart part);

/// Columns of a previously written field CSV: times plus per-row values.
struct FieldCsv {
    std::vector<double> coords;
    std::vector<double> times;
    std::vector<std::vector<double>> rows;
};
FieldCsv read_field_csv(const std::string& path);

/// Generic CSV writer: header line + rows of preformatted cells.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows);

/// FNV-1a 64-bit checksum of a file, rendered as hex (manifest integrity).
std::string file_checksum(const std::string& path);

} // namespace mixtype
