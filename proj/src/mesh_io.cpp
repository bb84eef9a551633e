#include "slope/mesh_io.hpp"

#include <cstdio>
#include <ostream>

namespace slope {

namespace {

// %.17g round-trips binary64 exactly and is byte-deterministic.
void put(std::ostream& out, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    out << buf;
}

}  // namespace

void write_obj(std::ostream& out, const SurfaceSampleGrid& grid) {
    const int nu = grid.nu(), nv = grid.nv();
    out << "# constant slope surface mesh, " << nu << " x " << nv
        << " grid, row-major (u outer)\n";
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < nv; ++j) {
            const Vec3M& p = grid.at(i, j);
            out << "v ";
            put(out, p.e1);
            out << ' ';
            put(out, p.e2);
            out << ' ';
            put(out, p.e3);
            out << '\n';
        }
    }
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j + 1 < nv; ++j) {
            const int a = i * nv + j + 1;
            out << "f " << a << ' ' << a + nv << ' ' << a + nv + 1 << ' ' << a + 1 << '\n';
        }
    }
}

void write_csv(std::ostream& out, const SurfaceSampleGrid& grid) {
    out << "u,v,x1,x2,x3\n";
    for (int i = 0; i < grid.nu(); ++i) {
        for (int j = 0; j < grid.nv(); ++j) {
            const Vec3M& p = grid.at(i, j);
            put(out, grid.u_values[i]);
            out << ',';
            put(out, grid.v_values[j]);
            out << ',';
            put(out, p.e1);
            out << ',';
            put(out, p.e2);
            out << ',';
            put(out, p.e3);
            out << '\n';
        }
    }
}

}  // namespace slope
