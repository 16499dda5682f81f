#pragma once

#include <stdexcept>

namespace mixtype {

/// Staggered grid on [0,1]: the state u lives at cell centers, the flux w at
/// interior nodes. Boundary nodes carry the hard constraint w = 0 and are
/// eliminated, so the stacked state (u, w) has dimension 2*num_cells - 1.
struct StaggeredGrid {
    int num_cells = 0; // N_x

    double dx() const { return 1.0 / num_cells; }
    int num_u() const { return num_cells; }
    int num_w() const { return num_cells - 1; }
    int dim() const { return 2 * num_cells - 1; }

    /// Center of cell i, i in [0, num_u()).
    double u_coord(int i) const { return (2 * i + 1) / (2.0 * num_cells); }
    /// Interior node j, j in [0, num_w()).
    double w_coord(int j) const { return double(j + 1) / num_cells; }
};

inline StaggeredGrid build_grid(int num_cells) {
    if (num_cells < 2)
        throw std::invalid_argument("build_grid: need at least 2 cells, got " +
                                    std::to_string(num_cells));
    return StaggeredGrid{num_cells};
}

} // namespace mixtype
