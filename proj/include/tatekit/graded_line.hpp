#pragma once

// Coordinatized graded lines: objects of the symmetric monoidal groupoid of
// Z-graded 1-dimensional spaces with the super-commutativity constraint.
// A line is its (degree, coordinate) pair relative to an implicit canonical
// generator; tensor adds degrees and multiplies coordinates.

#include "tatekit/fields.hpp"

#include <cstdint>
#include <stdexcept>

namespace tatekit {

template <class K>
struct GradedLine {
    long long degree = 0;
    K coord;

    GradedLine() = default;
    GradedLine(long long deg, K c) : degree(deg), coord(std::move(c)) {
        if (coord.is_zero()) throw std::invalid_argument("GradedLine: zero coordinate");
    }

    static GradedLine unit(const FieldCtx<K>& F) { return GradedLine(0, F.one()); }

    GradedLine tensor(const GradedLine& o) const {
        return GradedLine(degree + o.degree, coord * o.coord);
    }
    GradedLine inverse() const { return GradedLine(-degree, coord.inv()); }

    bool operator==(const GradedLine& o) const {
        return degree == o.degree && coord == o.coord;
    }
};

template <class K>
K koszul_sign(long long da, long long db, const FieldCtx<K>& F) {
    return ((da % 2 != 0) && (db % 2 != 0)) ? -F.one() : F.one();
}

/// Koszul braiding scalar for a ⊗ b → b ⊗ a.
template <class K>
K braid(const GradedLine<K>& a, const GradedLine<K>& b, const FieldCtx<K>& F) {
    return koszul_sign<K>(a.degree, b.degree, F);
}

template <class K>
long long deg_functor(const GradedLine<K>& a) { return a.degree; }

}  // namespace tatekit
