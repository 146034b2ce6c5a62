#pragma once

#include <cstdint>
#include <vector>

#include "acat/error.hpp"

namespace acat {

// Objects and non-identity morphisms are indexed by dense non-negative ids.
// Identity morphisms are never stored; MorphismRef distinguishes them.
using ObjectId = std::int32_t;
using MorphismId = std::int32_t;

struct Morphism {
    ObjectId src = -1;
    ObjectId tgt = -1;
    friend bool operator==(const Morphism&, const Morphism&) = default;
};

// Either the identity of an object or a stored (non-identity) morphism.
class MorphismRef {
public:
    static MorphismRef identity(ObjectId at) { return MorphismRef(true, at); }
    static MorphismRef arrow(MorphismId m) { return MorphismRef(false, m); }

    bool is_identity() const { return identity_; }
    ObjectId identity_object() const { return value_; }
    MorphismId morphism() const { return value_; }

    friend bool operator==(const MorphismRef&, const MorphismRef&) = default;

private:
    MorphismRef(bool identity, std::int32_t value) : identity_(identity), value_(value) {}
    bool identity_;
    std::int32_t value_;
};

// One entry of a composition table: g . f = h, defined when tgt(f) == src(g).
struct CompositionRule {
    MorphismId g = -1;
    MorphismId f = -1;
    MorphismId h = -1;
};

/*
 * A finite acyclic category: no non-identity endomorphisms, no directed
 * cycles between objects, and a total associative composition table on the
 * composable pairs of stored morphisms. Instances are immutable once built;
 * build_category() is the only way to obtain one and validates eagerly.
 */
class Category {
public:
    ObjectId num_objects() const { return n_objects_; }
    MorphismId num_morphisms() const { return static_cast<MorphismId>(morphisms_.size()); }

    ObjectId src(MorphismId m) const { return morphisms_[static_cast<size_t>(m)].src; }
    ObjectId tgt(MorphismId m) const { return morphisms_[static_cast<size_t>(m)].tgt; }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }

    bool composable(MorphismId g, MorphismId f) const { return tgt(f) == src(g); }
    MorphismId compose(MorphismId g, MorphismId f) const;
    MorphismRef compose(MorphismRef g, MorphismRef f) const;

    // All morphisms x -> y, ascending by id.
    std::vector<MorphismId> hom(ObjectId x, ObjectId y) const;
    bool hom_nonempty(ObjectId x, ObjectId y) const;
    // First morphism x -> y, or -1. Thin categories have at most one.
    MorphismId find_morphism(ObjectId x, ObjectId y) const;

    // x <= y in the object preorder (reflexive; transitive by closure).
    bool leq(ObjectId x, ObjectId y) const { return x == y || hom_nonempty(x, y); }

    friend bool operator==(const Category&, const Category&) = default;

    friend Category build_category(ObjectId n_objects, std::vector<Morphism> morphisms,
                                   const std::vector<CompositionRule>& composition);

private:
    Category() = default;

    ObjectId n_objects_ = 0;
    std::vector<Morphism> morphisms_;
    std::vector<MorphismId> compose_; // num_morphisms^2, -1 where not composable
};

Category build_category(ObjectId n_objects, std::vector<Morphism> morphisms,
                        const std::vector<CompositionRule>& composition);

// True iff every hom-set has at most one element.
bool is_poset(const Category& C);

/*
 * A functor between validated acyclic categories: an object map plus a
 * morphism map that may collapse a morphism to an identity. A functor is
 * strict when no non-identity morphism maps to an identity.
 */
class Functor {
public:
    const Category& source() const { return source_; }
    const Category& target() const { return target_; }

    ObjectId object_image(ObjectId x) const { return object_map_[static_cast<size_t>(x)]; }
    MorphismRef morphism_image(MorphismId m) const { return morphism_map_[static_cast<size_t>(m)]; }
    MorphismRef ref_image(MorphismRef r) const;

    const std::vector<ObjectId>& object_map() const { return object_map_; }
    const std::vector<MorphismRef>& morphism_map() const { return morphism_map_; }

    bool strict() const { return strict_; }
    bool is_endofunctor() const { return source_ == target_; }

    friend bool operator==(const Functor&, const Functor&) = default;

    friend Functor build_functor(Category source, Category target,
                                 std::vector<ObjectId> object_map,
                                 std::vector<MorphismRef> morphism_map);

private:
    Functor() = default;

    Category source_;
    Category target_;
    std::vector<ObjectId> object_map_;
    std::vector<MorphismRef> morphism_map_;
    bool strict_ = true;
};

Functor build_functor(Category source, Category target,
                      std::vector<ObjectId> object_map,
                      std::vector<MorphismRef> morphism_map);

Functor identity_functor(const Category& C);

// Pointwise composition G . F, with identity images absorbing.
Functor compose_functors(const Functor& G, const Functor& F);

// Fixed objects, fixed morphisms and the (validated) fixed subcategory of an
// endofunctor, together with the embedding of its dense ids into the ambient
// category.
struct FixedData {
    std::vector<ObjectId> fixed_objects;
    std::vector<MorphismId> fixed_morphisms;
    Category fixed_subcategory;
    std::vector<ObjectId> object_embedding;   // sub id -> ambient id
    std::vector<MorphismId> morphism_embedding;
};

FixedData fixed_data(const Functor& F);

// The poset reflection R(C): the thin category on the objects of C with
// x < y iff some morphism x -> y exists. Morphisms are indexed by (src, tgt)
// lexicographic order.
Category poset_reflection(const Category& C);

// R(F): acts as F on objects; the unique morphism images follow.
Functor poset_reflection_map(const Functor& F);

} // namespace acat
