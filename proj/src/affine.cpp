#include "xorclique/affine.hpp"

#include <algorithm>
#include <string>

#include "xorclique/errors.hpp"

namespace xorclique {

std::vector<ParallelClass> parallel_classes(const Field& f) {
    int q = f.q;
    std::vector<ParallelClass> classes(q + 1);
    for (int m = 0; m < q; ++m) {
        classes[m].class_id = m;
        classes[m].lines.resize(q);
        for (int b = 0; b < q; ++b) {
            AffineLine& line = classes[m].lines[b];
            line.q = q;
            line.class_id = m;
            line.offset = b;
            line.points.reserve(q);
            for (int x = 0; x < q; ++x) {
                int y = f.add(f.mul(m, x), b);
                line.points.push_back(x * q + y);
            }
        }
    }
    classes[q].class_id = q;
    classes[q].lines.resize(q);
    for (int b = 0; b < q; ++b) {
        AffineLine& line = classes[q].lines[b];
        line.q = q;
        line.class_id = q;
        line.offset = b;
        line.points.reserve(q);
        for (int y = 0; y < q; ++y) line.points.push_back(b * q + y);
    }
    return classes;
}

std::vector<int> line_intersect(const AffineLine& a, const AffineLine& b) {
    if (a.q != b.q)
        raise("MixedFields", "lines over GF(" + std::to_string(a.q) + ") and GF(" +
                                 std::to_string(b.q) + ")");
    std::vector<int> out;
    std::set_intersection(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                          std::back_inserter(out));
    return out;
}

} // namespace xorclique
