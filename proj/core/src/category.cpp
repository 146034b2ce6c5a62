#include "acat/category.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace acat {

const char* errc_name(errc code) {
    switch (code) {
        case errc::endo_morphism: return "EndoMorphism";
        case errc::cycle_detected: return "CycleDetected";
        case errc::bad_composite: return "BadComposite";
        case errc::non_associative: return "NonAssociative";
        case errc::missing_composite: return "MissingComposite";
        case errc::endpoint_mismatch: return "EndpointMismatch";
        case errc::composition_not_preserved: return "CompositionNotPreserved";
        case errc::source_target_mismatch: return "SourceTargetMismatch";
        case errc::not_endofunctor: return "NotEndofunctor";
        case errc::non_commuting: return "NonCommuting";
        case errc::inconsistent_system: return "InconsistentSystem";
        case errc::method_mismatch: return "MethodMismatch";
        case errc::theorem_violated: return "TheoremViolated";
        case errc::parse_error: return "ParseError";
        case errc::unknown_name: return "UnknownName";
        case errc::generation_failed: return "GenerationFailed";
    }
    return "UnknownError";
}

MorphismId Category::compose(MorphismId g, MorphismId f) const {
    const MorphismId n = num_morphisms();
    MorphismId h = compose_[static_cast<size_t>(g) * n + static_cast<size_t>(f)];
    if (h < 0)
        fail(errc::bad_composite, "compose(" + std::to_string(g) + ", " + std::to_string(f) +
                                      ") is undefined: pair is not composable");
    return h;
}

MorphismRef Category::compose(MorphismRef g, MorphismRef f) const {
    if (f.is_identity()) return g;
    if (g.is_identity()) return f;
    return MorphismRef::arrow(compose(g.morphism(), f.morphism()));
}

std::vector<MorphismId> Category::hom(ObjectId x, ObjectId y) const {
    std::vector<MorphismId> out;
    for (MorphismId m = 0; m < num_morphisms(); ++m)
        if (src(m) == x && tgt(m) == y) out.push_back(m);
    return out;
}

bool Category::hom_nonempty(ObjectId x, ObjectId y) const {
    for (const Morphism& m : morphisms_)
        if (m.src == x && m.tgt == y) return true;
    return false;
}

MorphismId Category::find_morphism(ObjectId x, ObjectId y) const {
    for (MorphismId m = 0; m < num_morphisms(); ++m)
        if (src(m) == x && tgt(m) == y) return m;
    return -1;
}

namespace {

void check_acyclic(ObjectId n_objects, const std::vector<Morphism>& morphisms) {
    // Kahn topological sort on the object digraph.
    std::vector<std::vector<ObjectId>> out(static_cast<size_t>(n_objects));
    std::vector<int> indeg(static_cast<size_t>(n_objects), 0);
    for (const Morphism& m : morphisms) {
        out[static_cast<size_t>(m.src)].push_back(m.tgt);
        ++indeg[static_cast<size_t>(m.tgt)];
    }
    std::queue<ObjectId> ready;
    for (ObjectId x = 0; x < n_objects; ++x)
        if (indeg[static_cast<size_t>(x)] == 0) ready.push(x);
    ObjectId seen = 0;
    while (!ready.empty()) {
        ObjectId x = ready.front();
        ready.pop();
        ++seen;
        for (ObjectId y : out[static_cast<size_t>(x)])
            if (--indeg[static_cast<size_t>(y)] == 0) ready.push(y);
    }
    if (seen != n_objects)
        fail(errc::cycle_detected, "object digraph has a directed cycle");
}

} // namespace

Category build_category(ObjectId n_objects, std::vector<Morphism> morphisms,
                        const std::vector<CompositionRule>& composition) {
    if (n_objects < 0) throw std::invalid_argument("negative object count");
    const MorphismId n_mor = static_cast<MorphismId>(morphisms.size());

    for (MorphismId m = 0; m < n_mor; ++m) {
        const Morphism& e = morphisms[static_cast<size_t>(m)];
        if (e.src < 0 || e.src >= n_objects || e.tgt < 0 || e.tgt >= n_objects)
            throw std::invalid_argument("morphism " + std::to_string(m) + " endpoint out of range");
        if (e.src == e.tgt)
            fail(errc::endo_morphism,
                 "morphism " + std::to_string(m) + " is a non-identity endomorphism");
    }

    check_acyclic(n_objects, morphisms);

    std::vector<MorphismId> table(static_cast<size_t>(n_mor) * static_cast<size_t>(n_mor), -1);
    auto at = [&](MorphismId g, MorphismId f) -> MorphismId& {
        return table[static_cast<size_t>(g) * n_mor + static_cast<size_t>(f)];
    };

    for (const CompositionRule& r : composition) {
        if (r.g < 0 || r.g >= n_mor || r.f < 0 || r.f >= n_mor || r.h < 0 || r.h >= n_mor)
            throw std::invalid_argument("composition rule references morphism out of range");
        const Morphism& g = morphisms[static_cast<size_t>(r.g)];
        const Morphism& f = morphisms[static_cast<size_t>(r.f)];
        if (f.tgt != g.src)
            fail(errc::bad_composite, "rule composes a non-composable pair (g=" +
                                          std::to_string(r.g) + ", f=" + std::to_string(r.f) + ")");
        const Morphism& h = morphisms[static_cast<size_t>(r.h)];
        if (h.src != f.src || h.tgt != g.tgt)
            fail(errc::bad_composite, "composite " + std::to_string(r.h) +
                                          " has endpoints inconsistent with (g=" +
                                          std::to_string(r.g) + ", f=" + std::to_string(r.f) + ")");
        if (at(r.g, r.f) != -1)
            fail(errc::bad_composite, "duplicate composition entry for (g=" + std::to_string(r.g) +
                                          ", f=" + std::to_string(r.f) + ")");
        at(r.g, r.f) = r.h;
    }

    for (MorphismId g = 0; g < n_mor; ++g)
        for (MorphismId f = 0; f < n_mor; ++f)
            if (morphisms[static_cast<size_t>(f)].tgt == morphisms[static_cast<size_t>(g)].src &&
                at(g, f) < 0)
                fail(errc::missing_composite, "no composite for composable pair (g=" +
                                                  std::to_string(g) + ", f=" + std::to_string(f) +
                                                  ")");

    // Associativity over all composable triples.
    for (MorphismId h = 0; h < n_mor; ++h)
        for (MorphismId g = 0; g < n_mor; ++g) {
            if (morphisms[static_cast<size_t>(g)].tgt != morphisms[static_cast<size_t>(h)].src)
                continue;
            for (MorphismId f = 0; f < n_mor; ++f) {
                if (morphisms[static_cast<size_t>(f)].tgt != morphisms[static_cast<size_t>(g)].src)
                    continue;
                if (at(h, at(g, f)) != at(at(h, g), f))
                    fail(errc::non_associative,
                         "associativity fails on triple (h=" + std::to_string(h) +
                             ", g=" + std::to_string(g) + ", f=" + std::to_string(f) + ")");
            }
        }

    Category C;
    C.n_objects_ = n_objects;
    C.morphisms_ = std::move(morphisms);
    C.compose_ = std::move(table);
    return C;
}

bool is_poset(const Category& C) {
    for (MorphismId a = 0; a < C.num_morphisms(); ++a)
        for (MorphismId b = a + 1; b < C.num_morphisms(); ++b)
            if (C.src(a) == C.src(b) && C.tgt(a) == C.tgt(b)) return false;
    return true;
}

MorphismRef Functor::ref_image(MorphismRef r) const {
    if (r.is_identity()) return MorphismRef::identity(object_image(r.identity_object()));
    return morphism_image(r.morphism());
}

Functor build_functor(Category source, Category target,
                      std::vector<ObjectId> object_map,
                      std::vector<MorphismRef> morphism_map) {
    if (object_map.size() != static_cast<size_t>(source.num_objects()))
        throw std::invalid_argument("object map is not total on the source objects");
    if (morphism_map.size() != static_cast<size_t>(source.num_morphisms()))
        throw std::invalid_argument("morphism map is not total on the source morphisms");

    for (ObjectId x = 0; x < source.num_objects(); ++x)
        if (object_map[static_cast<size_t>(x)] < 0 ||
            object_map[static_cast<size_t>(x)] >= target.num_objects())
            throw std::invalid_argument("object image out of range");

    bool strict = true;
    for (MorphismId m = 0; m < source.num_morphisms(); ++m) {
        const MorphismRef img = morphism_map[static_cast<size_t>(m)];
        const ObjectId fs = object_map[static_cast<size_t>(source.src(m))];
        const ObjectId ft = object_map[static_cast<size_t>(source.tgt(m))];
        if (img.is_identity()) {
            strict = false;
            if (img.identity_object() < 0 || img.identity_object() >= target.num_objects())
                throw std::invalid_argument("identity image out of range");
            if (fs != ft || img.identity_object() != fs)
                fail(errc::endpoint_mismatch,
                     "morphism " + std::to_string(m) + " maps to an identity but its endpoint " +
                         "images differ");
        } else {
            const MorphismId i = img.morphism();
            if (i < 0 || i >= target.num_morphisms())
                throw std::invalid_argument("morphism image out of range");
            if (target.src(i) != fs || target.tgt(i) != ft)
                fail(errc::endpoint_mismatch,
                     "image of morphism " + std::to_string(m) + " has wrong endpoints");
        }
    }

    // F(g . f) == F(g) . F(f) on every composable pair, identities absorbing.
    for (MorphismId g = 0; g < source.num_morphisms(); ++g)
        for (MorphismId f = 0; f < source.num_morphisms(); ++f) {
            if (!source.composable(g, f)) continue;
            const MorphismId h = source.compose(g, f);
            const MorphismRef lhs = morphism_map[static_cast<size_t>(h)];
            const MorphismRef rhs = target.compose(morphism_map[static_cast<size_t>(g)],
                                                   morphism_map[static_cast<size_t>(f)]);
            if (!(lhs == rhs))
                fail(errc::composition_not_preserved,
                     "image of composite of (g=" + std::to_string(g) + ", f=" + std::to_string(f) +
                         ") differs from composite of images");
        }

    Functor F;
    F.source_ = std::move(source);
    F.target_ = std::move(target);
    F.object_map_ = std::move(object_map);
    F.morphism_map_ = std::move(morphism_map);
    F.strict_ = strict;
    return F;
}

Functor identity_functor(const Category& C) {
    std::vector<ObjectId> obj(static_cast<size_t>(C.num_objects()));
    for (ObjectId x = 0; x < C.num_objects(); ++x) obj[static_cast<size_t>(x)] = x;
    std::vector<MorphismRef> mor;
    mor.reserve(static_cast<size_t>(C.num_morphisms()));
    for (MorphismId m = 0; m < C.num_morphisms(); ++m) mor.push_back(MorphismRef::arrow(m));
    return build_functor(C, C, std::move(obj), std::move(mor));
}

Functor compose_functors(const Functor& G, const Functor& F) {
    if (!(F.target() == G.source()))
        fail(errc::source_target_mismatch, "target of inner functor differs from source of outer");
    std::vector<ObjectId> obj(static_cast<size_t>(F.source().num_objects()));
    for (ObjectId x = 0; x < F.source().num_objects(); ++x)
        obj[static_cast<size_t>(x)] = G.object_image(F.object_image(x));
    std::vector<MorphismRef> mor;
    mor.reserve(static_cast<size_t>(F.source().num_morphisms()));
    for (MorphismId m = 0; m < F.source().num_morphisms(); ++m)
        mor.push_back(G.ref_image(F.morphism_image(m)));
    return build_functor(F.source(), G.target(), std::move(obj), std::move(mor));
}

FixedData fixed_data(const Functor& F) {
    if (!F.is_endofunctor()) fail(errc::not_endofunctor, "fixed data requires an endofunctor");
    const Category& C = F.source();

    FixedData out;
    std::vector<ObjectId> obj_index(static_cast<size_t>(C.num_objects()), -1);
    for (ObjectId x = 0; x < C.num_objects(); ++x)
        if (F.object_image(x) == x) {
            obj_index[static_cast<size_t>(x)] = static_cast<ObjectId>(out.fixed_objects.size());
            out.fixed_objects.push_back(x);
        }

    std::vector<MorphismId> mor_index(static_cast<size_t>(C.num_morphisms()), -1);
    std::vector<Morphism> sub_morphisms;
    for (MorphismId m = 0; m < C.num_morphisms(); ++m) {
        if (!(F.morphism_image(m) == MorphismRef::arrow(m))) continue;
        mor_index[static_cast<size_t>(m)] = static_cast<MorphismId>(out.fixed_morphisms.size());
        out.fixed_morphisms.push_back(m);
        sub_morphisms.push_back({obj_index[static_cast<size_t>(C.src(m))],
                                 obj_index[static_cast<size_t>(C.tgt(m))]});
    }

    std::vector<CompositionRule> rules;
    for (MorphismId g : out.fixed_morphisms)
        for (MorphismId f : out.fixed_morphisms)
            if (C.composable(g, f))
                rules.push_back({mor_index[static_cast<size_t>(g)],
                                 mor_index[static_cast<size_t>(f)],
                                 mor_index[static_cast<size_t>(C.compose(g, f))]});

    out.fixed_subcategory = build_category(static_cast<ObjectId>(out.fixed_objects.size()),
                                           std::move(sub_morphisms), rules);
    out.object_embedding = out.fixed_objects;
    out.morphism_embedding = out.fixed_morphisms;
    return out;
}

Category poset_reflection(const Category& C) {
    std::vector<Morphism> morphisms;
    for (ObjectId x = 0; x < C.num_objects(); ++x)
        for (ObjectId y = 0; y < C.num_objects(); ++y)
            if (x != y && C.hom_nonempty(x, y)) morphisms.push_back({x, y});

    auto pair_id = [&](ObjectId x, ObjectId y) -> MorphismId {
        for (MorphismId m = 0; m < static_cast<MorphismId>(morphisms.size()); ++m)
            if (morphisms[static_cast<size_t>(m)].src == x &&
                morphisms[static_cast<size_t>(m)].tgt == y)
                return m;
        return -1;
    };

    std::vector<CompositionRule> rules;
    const MorphismId n = static_cast<MorphismId>(morphisms.size());
    for (MorphismId g = 0; g < n; ++g)
        for (MorphismId f = 0; f < n; ++f)
            if (morphisms[static_cast<size_t>(f)].tgt == morphisms[static_cast<size_t>(g)].src)
                rules.push_back({g, f,
                                 pair_id(morphisms[static_cast<size_t>(f)].src,
                                         morphisms[static_cast<size_t>(g)].tgt)});

    return build_category(C.num_objects(), std::move(morphisms), rules);
}

Functor poset_reflection_map(const Functor& F) {
    Category RS = poset_reflection(F.source());
    Category RT = poset_reflection(F.target());

    std::vector<ObjectId> obj = F.object_map();
    std::vector<MorphismRef> mor;
    mor.reserve(static_cast<size_t>(RS.num_morphisms()));
    for (MorphismId m = 0; m < RS.num_morphisms(); ++m) {
        const ObjectId fx = F.object_image(RS.src(m));
        const ObjectId fy = F.object_image(RS.tgt(m));
        if (fx == fy) {
            mor.push_back(MorphismRef::identity(fx));
        } else {
            MorphismId im = RT.find_morphism(fx, fy);
            if (im < 0)
                fail(errc::endpoint_mismatch, "poset reflection image is not order-preserving");
            mor.push_back(MorphismRef::arrow(im));
        }
    }
    return build_functor(std::move(RS), std::move(RT), std::move(obj), std::move(mor));
}

} // namespace acat
