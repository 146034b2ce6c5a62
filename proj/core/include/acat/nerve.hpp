#pragma once

#include <utility>
#include <vector>

#include "acat/category.hpp"

namespace acat {

// A k-simplex of the nerve: a vertex (dim 0) or a chain of k composable
// non-identity morphisms (dim k >= 1).
struct Simplex {
    ObjectId vertex = -1;            // meaningful when chain is empty
    std::vector<MorphismId> chain;   // tgt(chain[i]) == src(chain[i+1])

    int dim() const { return chain.empty() ? 0 : static_cast<int>(chain.size()); }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/*
 * A regular trisp presented by its simplices per dimension and face maps.
 * Simplices of each dimension are enumerated in lexicographic order of their
 * morphism-id chains, so indices are canonical for a given base category.
 */
class Trisp {
public:
    const Category& base() const { return base_; }

    int max_dim() const { return static_cast<int>(simplices_.size()) - 1; }
    int count(int dim) const {
        return (dim >= 0 && dim <= max_dim())
                   ? static_cast<int>(simplices_[static_cast<size_t>(dim)].size())
                   : 0;
    }
    int total() const;

    const Simplex& simplex(int dim, int index) const {
        return simplices_[static_cast<size_t>(dim)][static_cast<size_t>(index)];
    }
    // Index of d_j(simplex(dim, index)) within dimension dim-1.
    int face(int dim, int index, int j) const {
        return faces_[static_cast<size_t>(dim)][static_cast<size_t>(index)][static_cast<size_t>(j)];
    }
    // Index of a simplex within its dimension; -1 if absent.
    int index_of(const Simplex& s) const;

    // Flattened element ids, dimension-major; used by face posets.
    int element_id(int dim, int index) const {
        return offsets_[static_cast<size_t>(dim)] + index;
    }
    std::pair<int, int> element_simplex(int id) const; // (dim, index)

    friend Trisp nerve(const Category& C);

private:
    Trisp() = default;
    void build_offsets();

    Category base_;
    std::vector<std::vector<Simplex>> simplices_;          // [dim][index]
    std::vector<std::vector<std::vector<int>>> faces_;     // [dim][index][j]
    std::vector<int> offsets_;
};

// The nerve of a finite acyclic category: vertices are objects, k-simplices
// are chains of k composable non-identity morphisms. Faces follow the
// convention d_0 = drop first object, d_k = drop last, d_j = compose at j.
Trisp nerve(const Category& C);

// Image of one simplex under the induced trisp map: the image chain with
// identity images removed. When any removal happened the simplex is marked
// degenerate and (dim, index) describe the reduced, lower-dimensional chain.
struct SimplexImage {
    bool degenerate = false;
    int dim = 0;
    int index = 0;
};

// images[k][i] is the image of simplex i of dimension k under the map the
// endofunctor induces on the nerve of its source.
using TrispMap = std::vector<std::vector<SimplexImage>>;

TrispMap induced_trisp_map(const Trisp& T, const Functor& F);

/*
 * A finite poset with a degree labelling. The strict order is stored as a
 * full reachability matrix; covering pairs are kept alongside. Face posets
 * are graded (degree = dimension, covers raise degree by one); layer
 * deletion keeps the original degrees, so general instances are only
 * labelled, not re-graded.
 */
class GradedPoset {
public:
    GradedPoset() = default;

    int size() const { return n_; }
    int degree(int e) const { return degree_[static_cast<size_t>(e)]; }
    bool less(int a, int b) const { return less_[static_cast<size_t>(a) * n_ + b] != 0; }
    bool less_equal(int a, int b) const { return a == b || less(a, b); }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    int max_degree() const;

    // Validates a strict partial order (irreflexive, transitive) and wraps it.
    static GradedPoset from_relation(int n, std::vector<char> less, std::vector<int> degree);

    // Induced subposet on the given (strictly ascending) element ids,
    // retaining the original degrees.
    GradedPoset induced(const std::vector<int>& elements) const;

    // True when covers raise the degree by exactly one.
    bool cover_graded() const;

    friend bool operator==(const GradedPoset&, const GradedPoset&) = default;
    friend GradedPoset face_poset(const Trisp& T);

private:
    void rebuild_covers();

    int n_ = 0;
    std::vector<int> degree_;
    std::vector<char> less_;  // n*n strict order
    std::vector<std::pair<int, int>> covers_;
};

// The poset of simplices of a trisp ordered by the face relation, graded by
// dimension. Elements are the trisp's flattened element ids.
GradedPoset face_poset(const Trisp& T);

// Thin category of a poset: objects are the poset elements, one morphism per
// strict relation. pair_morphism is a size*size lookup of morphism ids (-1
// where unrelated).
struct ThinCategory {
    Category category;
    std::vector<MorphismId> pair_morphism;
};

ThinCategory thin_category(const GradedPoset& P);

// Endofunctor of the thin category induced by an order-preserving self-map.
Functor thin_endofunctor(const ThinCategory& tc, const std::vector<int>& self_map);

// Order complex of a poset: k-simplices are strictly increasing (k+1)-chains.
// Implemented as the nerve of the thin category.
Trisp order_complex(const GradedPoset& P);

// Barycentric subdivision data of a category: the nerve and its face poset.
struct Subdivision {
    Trisp complex;     // nerve of the category
    GradedPoset poset; // face poset; element ids match complex.element_id
};

Subdivision subdivision(const Category& C);

// The order-preserving self-map an endofunctor induces on the subdivision:
// each simplex goes to its reduced image chain. Degree is preserved for
// strict functors and non-increasing in general.
std::vector<int> subdivision_map(const Subdivision& sd, const Functor& F);

} // namespace acat
