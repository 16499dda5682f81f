#include "mixtype/csvio.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mixtype {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_field_csv(const std::string& path, const SpaceTimeField& field, FieldPart part) {
    const bool u_part = part == FieldPart::U;
    if (!u_part && field.layout == SpaceTimeField::Layout::UOnly)
        throw std::invalid_argument("write_field_csv: field has no w-part");
    const int count = u_part ? field.grid.num_u() : field.grid.num_w();
    const int offset = u_part ? 0 : field.grid.num_u();

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "t";
    for (int i = 0; i < count; ++i)
        out << ",x=" << fmt17(u_part ? field.grid.u_coord(i) : field.grid.w_coord(i));
    out << "\n";
    for (int k = 0; k <= field.time.num_steps(); ++k) {
        out << fmt17(field.time.time(k));
        const auto& state = field.states[k];
        for (int i = 0; i < count; ++i)
            out << "," << fmt17(state[offset + i]);
        out << "\n";
    }
}

FieldCsv read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    FieldCsv data;
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty CSV '" + path + "'");
    {
        std::istringstream hs(line);
        std::string cell;
        bool first = true;
        while (std::getline(hs, cell, ',')) {
            if (first) {
                first = false;
                continue;
            }
            if (cell.rfind("x=", 0) != 0)
                throw std::runtime_error("bad field CSV header cell '" + cell + "'");
            data.coords.push_back(std::strtod(cell.c_str() + 2, nullptr));
        }
    }
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        bool first = true;
        while (std::getline(ls, cell, ',')) {
            const double v = std::strtod(cell.c_str(), nullptr);
            if (first) {
                data.times.push_back(v);
                first = false;
            } else {
                row.push_back(v);
            }
        }
        if (row.size() != data.coords.size())
            throw std::runtime_error("ragged field CSV row in '" + path + "'");
        data.rows.push_back(std::move(row));
    }
    return data;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << "\n";
    }
}

std::string file_checksum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "' for checksum");
    std::uint64_t h = 14695981039346656037ull;
    char c;
    while (in.get(c)) {
        h ^= std::uint8_t(c);
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace mixtype
