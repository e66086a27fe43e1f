#pragma once

#include <vector>

#include "xorclique/field.hpp"

namespace xorclique {

/// Affine line in GF(q)^2. Points are flat indices x*q + y, sorted
/// ascending. class_id in [0, q) is the slope class (y = class_id*x + offset);
/// class_id == q is the vertical class (x = offset).
struct AffineLine {
    int q = 0;
    int class_id = 0;
    int offset = 0;
    std::vector<int> points;
};

/// One of the q+1 parallel classes. Its q lines partition the q^2 points.
struct ParallelClass {
    int class_id = 0;
    std::vector<AffineLine> lines;  // indexed by offset
};

/// All q+1 parallel classes of GF(q)^2, slopes 0..q-1 first, vertical last.
/// Lines within a class are ordered by offset.
std::vector<ParallelClass> parallel_classes(const Field& f);

/// Intersection of two lines as sorted point indices. Lines from different
/// classes share exactly one point; parallel distinct lines share none.
/// Throws MixedFields if the lines live over different field orders.
std::vector<int> line_intersect(const AffineLine& a, const AffineLine& b);

} // namespace xorclique
