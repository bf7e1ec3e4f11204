#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cyclab {

struct GridPoint {
    std::complex<double> z;
    double r = 0.0;
    double theta = 0.0;
};

// Deterministic sampling grid for extremal scans over the unit disk.
//
// The base grid places radii r_k = 1 - 2^{-k}, k = 1..k_max, each carrying
// `base_angles` equispaced angles. When boundary atoms are supplied, every
// radius additionally gets `atom_extra` angles clustered within arc distance
// 2^{-k} of each atom, since that is where Poisson kernels of the atoms
// localise as r_k -> 1.
struct DiskGrid {
    std::vector<GridPoint> points;
    std::string spec;  // human-readable provenance for run manifests
};

DiskGrid standard_grid(int k_max = 40, int base_angles = 4096,
                       const std::vector<double>& atom_angles = {}, int atom_extra = 512);

// Points of the disk with |1 - z|^2 <= a * delta * (1 - |z|^2), sampled along
// the same dyadic radii: per radius an angle fan covering the admissible
// angular window around theta = 0. Used for region-restricted bound checks.
std::vector<GridPoint> stolz_grid(double a, double delta, int k_max = 40, int per_radius = 26);

struct GridExtremum {
    double value = 0.0;
    std::size_t index = 0;
    GridPoint point;
};

// Deterministic min/max of f over the grid. Parallel chunking is controlled
// by the CYCLAB_THREADS environment variable (default 1); results do not
// depend on the chunking because ties are broken by smallest index.
GridExtremum grid_min(const std::vector<GridPoint>& pts,
                      const std::function<double(const GridPoint&)>& f);
GridExtremum grid_max(const std::vector<GridPoint>& pts,
                      const std::function<double(const GridPoint&)>& f);

}  // namespace cyclab
