#include "trunclab/newton.hpp"

#include <stdexcept>

namespace trunclab {

namespace {

// cross(O, A, B) > 0 means B lies strictly left of the ray O->A
// (counter-clockwise); on the lower hull consecutive slopes increase.
Rational cross(const std::pair<long, Rational>& o, const std::pair<long, Rational>& a,
               const std::pair<long, Rational>& b) {
    return Rational(a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * Rational(b.first - o.first);
}

}  // namespace

NewtonPolygon newton_polygon(const RatPoly& f, long p) {
    require_prime(p);
    if (f.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");

    std::vector<std::pair<long, Rational>> pts;
    for (long j = 0; j < static_cast<long>(f.coeff.size()); ++j) {
        if (f.coeff[static_cast<size_t>(j)] == 0) continue;
        pts.emplace_back(j, val_p(f.coeff[static_cast<size_t>(j)], p).finite());
    }

    NewtonPolygon np;
    np.prime = p;
    np.origin_order = pts.front().first;
    np.degree = pts.back().first;

    // Monotone chain, lower hull only; popping on cross <= 0 removes
    // collinear interior points so segments are maximal.
    std::vector<std::pair<long, Rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    np.vertices = std::move(hull);

    for (size_t i = 0; i + 1 < np.vertices.size(); ++i) {
        const auto& [j0, v0] = np.vertices[i];
        const auto& [j1, v1] = np.vertices[i + 1];
        PolygonSegment seg;
        seg.slope = (v1 - v0) / Rational(j1 - j0);
        seg.h_length = j1 - j0;
        seg.ram_index = static_cast<long>(Int(seg.slope.get_den()).get_si());
        np.segments.push_back(std::move(seg));
    }
    return np;
}

NewtonPolygon newton_polygon(const TruncationPolynomial& f, long p) {
    return newton_polygon(f.poly, p);
}

PadicRootMeasure root_valuations(const NewtonPolygon& np, long deg_with_zeros) {
    if (deg_with_zeros != np.degree)
        throw std::invalid_argument("root_valuations: degree mismatch with polygon");
    PadicRootMeasure m;
    m.total = deg_with_zeros;
    if (np.origin_order > 0)
        m.entries.push_back({ExtRational::infinity(), np.origin_order});
    // Slopes increase left to right, so valuations come out decreasing.
    for (const auto& seg : np.segments)
        m.entries.push_back({ExtRational(Rational(-seg.slope)), seg.h_length});
    long sum = 0;
    for (const auto& e : m.entries) sum += e.multiplicity;
    if (sum != deg_with_zeros)
        throw std::logic_error("root_valuations: multiplicities do not sum to the degree");
    return m;
}

}  // namespace trunclab
