#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hochster/monomial.hpp"
#include "hochster/vertex_set.hpp"

namespace hochster::testing {

/// 1-based labels, matching the text formats: set({1,3}) is {x1, x3}.
inline VertexSet set(std::initializer_list<int> labels) {
    VertexSet s;
    for (int l : labels) {
        s = s.with(l - 1);
    }
    return s;
}

inline MultiDegree deg(std::initializer_list<int> entries) { return MultiDegree(std::vector<int>(entries)); }

inline Monomial mono(std::initializer_list<int> exponents) { return Monomial(std::vector<int>(exponents)); }

inline MonomialIdeal ideal(const std::string& text) { return parse_ideal(text); }

/// (X1X3, X1X4, X2X3, X2X4): Stanley-Reisner ideal of two disjoint edges.
inline MonomialIdeal two_disjoint_edges() { return ideal("n=4; x1*x3, x1*x4, x2*x3, x2*x4"); }

/// Two disjoint filled triangles {1,2,3} and {4,5,6}.
inline MonomialIdeal two_disjoint_triangles() {
    return ideal("n=6; x1*x4, x1*x5, x1*x6, x2*x4, x2*x5, x2*x6, x3*x4, x3*x5, x3*x6");
}

/// Six-vertex triangulation of the real projective plane.
inline MonomialIdeal projective_plane() {
    return ideal("n=6; x1*x2*x4, x1*x2*x5, x1*x3*x5, x1*x3*x6, x1*x4*x6, x2*x3*x4, x2*x3*x6, x2*x5*x6, x3*x4*x5, x4*x5*x6");
}

inline MonomialIdeal worked_example() { return ideal("n=2; x1^2, x1*x2"); }

}  // namespace hochster::testing
