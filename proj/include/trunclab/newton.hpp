// newton.hpp -- Newton polygons and the slope-to-valuation dictionary.
#pragma once

#include <vector>

#include "trunclab/polynomial.hpp"
#include "trunclab/rational.hpp"

namespace trunclab {

struct PolygonSegment {
    Rational slope;     // strictly increasing left to right
    long h_length;      // horizontal length
    long ram_index;     // denominator of the slope in lowest terms (e >= 1)
};

struct NewtonPolygon {
    long prime = 0;
    std::vector<std::pair<long, Rational>> vertices;  // (j, val_p(a_j)), lower hull
    std::vector<PolygonSegment> segments;
    long origin_order = 0;  // ord(f)
    long degree = 0;        // deg(f)
};

// Lower convex hull of {(j, val_p(a_j)) : a_j != 0}, exact monotone chain.
// Rejects the zero polynomial.
NewtonPolygon newton_polygon(const TruncationPolynomial& f, long p);
NewtonPolygon newton_polygon(const RatPoly& f, long p);

// Discrete zero measure: a segment of slope -lambda and length l contributes
// l roots of valuation lambda; ord(f) roots sit at 0 with valuation +inf.
struct PadicRootMeasure {
    struct Entry {
        ExtRational valuation;
        long multiplicity;
    };
    std::vector<Entry> entries;
    long total = 0;  // deg(f), the normalizing mass
};

// deg_with_zeros is deg(f) including the ord(f) roots at the origin; it must
// match the polygon's degree.
PadicRootMeasure root_valuations(const NewtonPolygon& np, long deg_with_zeros);

}  // namespace trunclab
