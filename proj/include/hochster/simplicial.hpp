#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hochster/errors.hpp"
#include "hochster/linalg.hpp"
#include "hochster/monomial.hpp"
#include "hochster/vertex_set.hpp"

namespace hochster {

/// Default cap on the number of faces any enumeration may produce.
inline constexpr std::size_t kDefaultFaceCap = 10'000'000;

/// A simplicial complex on the vertex set {0..n-1}. Not every vertex needs to
/// be a face. The complex is either void (no faces at all) or contains the
/// empty face.
///
/// Faces are stored explicitly, grouped by cardinality, each group sorted
/// lexicographically on ascending vertex sequences. That order is the basis
/// order of the chain groups.
class SimplicialComplex {
public:
    /// The void complex (no faces, not even the empty one).
    static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }

    /// {emptyset}.
    static SimplicialComplex empty_face_only(int n) { return SimplicialComplex(n, {VertexSet{}}); }

    /// All subsets of `vertices`.
    static SimplicialComplex simplex(int n, VertexSet vertices) { return generated_by(n, {vertices}); }

    /// Validates closure under subsets and drops duplicates.
    static SimplicialComplex from_faces(int n, std::vector<VertexSet> faces) {
        check_ambient(n);
        std::unordered_set<VertexSet> set(faces.begin(), faces.end());
        const VertexSet ambient = VertexSet::full(n);
        for (VertexSet f : set) {
            if (!f.subset_of(ambient)) {
                throw std::invalid_argument("face " + to_string(f) + " is not within the vertex set");
            }
            for (int v : f.members()) {
                if (!set.contains(f.without(v))) {
                    throw std::invalid_argument("face family is not closed under subsets: missing " +
                                                to_string(f.without(v)));
                }
            }
        }
        return SimplicialComplex(n, std::vector<VertexSet>(set.begin(), set.end()));
    }

    /// Smallest complex containing every given set.
    static SimplicialComplex generated_by(int n, const std::vector<VertexSet>& generators,
                                          std::size_t face_cap = kDefaultFaceCap) {
        check_ambient(n);
        std::unordered_set<VertexSet> set;
        for (VertexSet g : generators) {
            if (!g.subset_of(VertexSet::full(n))) {
                throw std::invalid_argument("generator " + to_string(g) + " is not within the vertex set");
            }
            // Walk all submasks of g.
            const std::uint64_t bits = g.bits();
            std::uint64_t sub = bits;
            while (true) {
                set.insert(VertexSet(sub));
                if (set.size() > face_cap) {
                    throw ResourceLimitError("simplicial complex exceeds face cap");
                }
                if (sub == 0) {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        return SimplicialComplex(n, std::vector<VertexSet>(set.begin(), set.end()));
    }

    int num_vertices() const { return n_; }

    /// True for the void complex.
    bool is_void() const { return by_size_.empty() || by_size_[0].empty(); }

    /// max dim F; -1 for both {emptyset} and the void complex.
    int dimension() const { return std::max(-1, static_cast<int>(by_size_.size()) - 2); }

    bool contains(VertexSet f) const {
        const auto size = static_cast<std::size_t>(f.size());
        if (size >= by_size_.size()) {
            return false;
        }
        const auto& group = by_size_[size];
        return std::binary_search(group.begin(), group.end(), f, LexLess{});
    }

    /// Faces of dimension k (cardinality k+1), in basis order. k >= -1.
    std::span<const VertexSet> faces_of_dimension(int k) const {
        const auto size = static_cast<std::size_t>(k + 1);
        if (k < -1 || size >= by_size_.size()) {
            return {};
        }
        return by_size_[size];
    }

    std::size_t num_faces() const {
        std::size_t total = 0;
        for (const auto& group : by_size_) {
            total += group.size();
        }
        return total;
    }

    /// All faces, by dimension then basis order.
    std::vector<VertexSet> faces() const {
        std::vector<VertexSet> out;
        for (const auto& group : by_size_) {
            out.insert(out.end(), group.begin(), group.end());
        }
        return out;
    }

    /// Union of all faces.
    VertexSet vertices() const {
        VertexSet out;
        for (const auto& group : by_size_) {
            for (VertexSet f : group) {
                out = out | f;
            }
        }
        return out;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int n, std::vector<VertexSet> faces) : n_(n) {
        for (VertexSet f : faces) {
            const auto size = static_cast<std::size_t>(f.size());
            if (by_size_.size() <= size) {
                by_size_.resize(size + 1);
            }
            by_size_[size].push_back(f);
        }
        for (auto& group : by_size_) {
            std::sort(group.begin(), group.end(), LexLess{});
        }
    }

    friend SimplicialComplex blocker_complex(int, VertexSet, std::span<const VertexSet>, std::size_t);

    int n_ = 0;
    std::vector<std::vector<VertexSet>> by_size_;
};

/// The complex of all L within `allowed` that contain none of the `blockers`.
/// Void when some blocker is empty.
inline SimplicialComplex blocker_complex(int n, VertexSet allowed, std::span<const VertexSet> blockers,
                                         std::size_t face_cap = kDefaultFaceCap) {
    check_ambient(n);
    for (VertexSet b : blockers) {
        if (b.empty()) {
            return SimplicialComplex::void_complex(n);
        }
    }
    auto admissible = [&](VertexSet face, int added) {
        for (VertexSet b : blockers) {
            if (b.contains(added) && b.subset_of(face)) {
                return false;
            }
        }
        return true;
    };
    // The family is closed under subsets, so every face is reached by adding
    // vertices in increasing order.
    std::vector<VertexSet> faces{VertexSet{}};
    const std::vector<int> candidates = allowed.members();
    for (std::size_t next = 0; next < faces.size(); ++next) {
        const VertexSet face = faces[next];
        const int top = face.max_element();
        for (int v : candidates) {
            if (v <= top) {
                continue;
            }
            const VertexSet grown = face.with(v);
            if (admissible(grown, v)) {
                faces.push_back(grown);
                if (faces.size() > face_cap) {
                    throw ResourceLimitError("simplicial complex exceeds face cap");
                }
            }
        }
    }
    return SimplicialComplex(n, std::move(faces));
}

/// Stanley-Reisner complex of a square-free monomial ideal: F is a face iff
/// no generator's support lies in F.
inline SimplicialComplex complex_of_squarefree(const MonomialIdeal& ideal, std::size_t face_cap = kDefaultFaceCap) {
    if (!ideal.is_squarefree()) {
        throw std::invalid_argument("ideal is not square-free");
    }
    std::vector<VertexSet> blockers;
    blockers.reserve(ideal.generators().size());
    for (const Monomial& u : ideal.generators()) {
        blockers.push_back(support(u));
    }
    return blocker_complex(ideal.num_vars(), VertexSet::full(ideal.num_vars()), blockers, face_cap);
}

/// lk F = {G : F u G in the complex, F n G empty}; void if F is not a face.
inline SimplicialComplex link(const SimplicialComplex& complex, VertexSet f) {
    if (!complex.contains(f)) {
        return SimplicialComplex::void_complex(complex.num_vertices());
    }
    std::vector<VertexSet> faces;
    for (VertexSet g : complex.faces()) {
        if (f.subset_of(g)) {
            faces.push_back(g - f);
        }
    }
    return SimplicialComplex::from_faces(complex.num_vertices(), std::move(faces));
}

/// st F = {G : F u G in the complex}; void if F is not a face.
inline SimplicialComplex star(const SimplicialComplex& complex, VertexSet f) {
    std::vector<VertexSet> faces;
    for (VertexSet g : complex.faces()) {
        if (complex.contains(g | f)) {
            faces.push_back(g);
        }
    }
    return SimplicialComplex::from_faces(complex.num_vertices(), std::move(faces));
}

/// Matrix of the augmented boundary map C_k -> C_{k-1}: rows are the
/// (k-1)-faces, columns the k-faces, both in basis order. The face
/// {i_0 < ... < i_k} maps to sum_j (-1)^j (face without i_j).
/// Entries are integers; over a field of characteristic p read them mod p.
inline IntMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
    if (k < -1 || k > complex.dimension()) {
        throw std::out_of_range("homological degree " + std::to_string(k) + " outside -1.." +
                                std::to_string(complex.dimension()));
    }
    const auto cols = complex.faces_of_dimension(k);
    const auto rows = complex.faces_of_dimension(k - 1);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const VertexSet face = cols[c];
        int position = 0;
        for (int v : face.members()) {
            const VertexSet facet = face.without(v);
            const auto it = std::lower_bound(rows.begin(), rows.end(), facet, LexLess{});
            m(static_cast<std::size_t>(it - rows.begin()), c) = (position % 2 == 0) ? 1 : -1;
            ++position;
        }
    }
    return m;
}

/// dim_K of reduced homology, entry [k+1] for k = -1 .. dim. Over a field the
/// reduced cohomology has the same dimensions. The void complex yields {0}.
inline std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, FieldSpec field) {
    const int top = complex.dimension();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);  // ranks[k+1] = rank of d_k
    for (int k = 0; k <= top; ++k) {
        ranks[static_cast<std::size_t>(k + 1)] = rank(boundary_matrix(complex, k), field);
    }
    std::vector<std::size_t> dims(static_cast<std::size_t>(top + 2), 0);
    for (int k = -1; k <= top; ++k) {
        const std::size_t faces = complex.faces_of_dimension(k).size();
        dims[static_cast<std::size_t>(k + 1)] =
            faces - ranks[static_cast<std::size_t>(k + 1)] - ranks[static_cast<std::size_t>(k + 2)];
    }
    return dims;
}

/// Sorted face list with 1-based labels, e.g. "{}, {1}, {2}, {1,2}".
inline std::string format_faces(const SimplicialComplex& complex) {
    std::string out;
    for (VertexSet f : complex.faces()) {
        if (!out.empty()) {
            out += ", ";
        }
        out += to_string(f);
    }
    return out;
}

}  // namespace hochster
