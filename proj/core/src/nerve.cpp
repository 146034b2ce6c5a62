#include "acat/nerve.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace acat {

int Trisp::total() const {
    int t = 0;
    for (const auto& level : simplices_) t += static_cast<int>(level.size());
    return t;
}

int Trisp::index_of(const Simplex& s) const {
    const int d = s.dim();
    if (d > max_dim()) return -1;
    const auto& level = simplices_[static_cast<size_t>(d)];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it != level.end() && *it == s) return static_cast<int>(it - level.begin());
    return -1;
}

std::pair<int, int> Trisp::element_simplex(int id) const {
    for (int d = max_dim(); d >= 0; --d)
        if (id >= offsets_[static_cast<size_t>(d)]) return {d, id - offsets_[static_cast<size_t>(d)]};
    throw std::invalid_argument("element id out of range");
}

void Trisp::build_offsets() {
    offsets_.assign(simplices_.size(), 0);
    int acc = 0;
    for (size_t d = 0; d < simplices_.size(); ++d) {
        offsets_[d] = acc;
        acc += static_cast<int>(simplices_[d].size());
    }
}

namespace {

Simplex face_of(const Category& C, const Simplex& s, int j) {
    const int k = s.dim();
    Simplex out;
    if (k == 1) {
        out.vertex = (j == 0) ? C.tgt(s.chain[0]) : C.src(s.chain[0]);
        return out;
    }
    if (j == 0) {
        out.chain.assign(s.chain.begin() + 1, s.chain.end());
    } else if (j == k) {
        out.chain.assign(s.chain.begin(), s.chain.end() - 1);
    } else {
        out.chain.assign(s.chain.begin(), s.chain.end());
        const MorphismId composed =
            C.compose(out.chain[static_cast<size_t>(j)], out.chain[static_cast<size_t>(j - 1)]);
        out.chain.erase(out.chain.begin() + j);
        out.chain[static_cast<size_t>(j - 1)] = composed;
    }
    return out;
}

} // namespace

Trisp nerve(const Category& C) {
    Trisp T;
    T.base_ = C;

    std::vector<Simplex> vertices;
    vertices.reserve(static_cast<size_t>(C.num_objects()));
    for (ObjectId x = 0; x < C.num_objects(); ++x) {
        Simplex v;
        v.vertex = x;
        vertices.push_back(std::move(v));
    }
    T.simplices_.push_back(std::move(vertices));

    // Extend (k-1)-chains by every composable next morphism; iterating chains
    // in order and morphisms by ascending id keeps each level lex-sorted.
    std::vector<Simplex> edges;
    edges.reserve(static_cast<size_t>(C.num_morphisms()));
    for (MorphismId m = 0; m < C.num_morphisms(); ++m) {
        Simplex e;
        e.chain = {m};
        edges.push_back(std::move(e));
    }
    if (!edges.empty()) T.simplices_.push_back(std::move(edges));

    while (true) {
        const auto& prev = T.simplices_.back();
        if (T.simplices_.size() < 2 || prev.empty()) break;
        std::vector<Simplex> next;
        for (const Simplex& s : prev) {
            const ObjectId end = C.tgt(s.chain.back());
            for (MorphismId m = 0; m < C.num_morphisms(); ++m) {
                if (C.src(m) != end) continue;
                Simplex longer = s;
                longer.chain.push_back(m);
                next.push_back(std::move(longer));
            }
        }
        if (next.empty()) break;
        T.simplices_.push_back(std::move(next));
    }

    T.faces_.resize(T.simplices_.size());
    for (int k = 1; k <= T.max_dim(); ++k) {
        auto& level_faces = T.faces_[static_cast<size_t>(k)];
        level_faces.resize(T.simplices_[static_cast<size_t>(k)].size());
        for (int i = 0; i < T.count(k); ++i) {
            auto& fs = level_faces[static_cast<size_t>(i)];
            fs.resize(static_cast<size_t>(k) + 1);
            for (int j = 0; j <= k; ++j) {
                const Simplex f = face_of(C, T.simplex(k, i), j);
                const int idx = T.index_of(f);
                if (idx < 0)
                    fail(errc::non_commuting, "internal: face chain missing from nerve");
                fs[static_cast<size_t>(j)] = idx;
            }
        }
    }

    T.build_offsets();
    return T;
}

TrispMap induced_trisp_map(const Trisp& T, const Functor& F) {
    if (!F.is_endofunctor())
        fail(errc::not_endofunctor, "induced trisp map requires an endofunctor");
    if (!(T.base() == F.source()))
        throw std::invalid_argument("trisp was not built from the functor's category");

    TrispMap images(static_cast<size_t>(T.max_dim()) + 1);
    for (int k = 0; k <= T.max_dim(); ++k) {
        auto& level = images[static_cast<size_t>(k)];
        level.resize(static_cast<size_t>(T.count(k)));
        for (int i = 0; i < T.count(k); ++i) {
            const Simplex& s = T.simplex(k, i);
            Simplex img;
            if (k == 0) {
                img.vertex = F.object_image(s.vertex);
            } else {
                for (MorphismId m : s.chain) {
                    const MorphismRef r = F.morphism_image(m);
                    if (!r.is_identity()) img.chain.push_back(r.morphism());
                }
                if (img.chain.empty())
                    img.vertex = F.object_image(F.source().src(s.chain[0]));
            }
            const int idx = T.index_of(img);
            if (idx < 0)
                fail(errc::non_commuting, "internal: image chain missing from nerve");
            level[static_cast<size_t>(i)] = {img.dim() != k, img.dim(), idx};
        }
    }
    return images;
}

int GradedPoset::max_degree() const {
    int m = -1;
    for (int d : degree_) m = std::max(m, d);
    return m;
}

void GradedPoset::rebuild_covers() {
    covers_.clear();
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!less(a, b)) continue;
            bool covering = true;
            for (int c = 0; c < n_ && covering; ++c)
                if (less(a, c) && less(c, b)) covering = false;
            if (covering) covers_.emplace_back(a, b);
        }
}

GradedPoset GradedPoset::from_relation(int n, std::vector<char> less, std::vector<int> degree) {
    if (less.size() != static_cast<size_t>(n) * static_cast<size_t>(n) ||
        degree.size() != static_cast<size_t>(n))
        throw std::invalid_argument("relation or degree size mismatch");
    for (int a = 0; a < n; ++a)
        if (less[static_cast<size_t>(a) * n + a])
            throw std::invalid_argument("strict order must be irreflexive");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!less[static_cast<size_t>(a) * n + b]) continue;
            if (less[static_cast<size_t>(b) * n + a])
                throw std::invalid_argument("strict order must be antisymmetric");
            for (int c = 0; c < n; ++c)
                if (less[static_cast<size_t>(b) * n + c] && !less[static_cast<size_t>(a) * n + c])
                    throw std::invalid_argument("strict order must be transitive");
        }
    GradedPoset P;
    P.n_ = n;
    P.degree_ = std::move(degree);
    P.less_ = std::move(less);
    P.rebuild_covers();
    return P;
}

GradedPoset GradedPoset::induced(const std::vector<int>& elements) const {
    GradedPoset P;
    P.n_ = static_cast<int>(elements.size());
    P.degree_.resize(elements.size());
    P.less_.assign(elements.size() * elements.size(), 0);
    for (size_t i = 0; i < elements.size(); ++i) {
        P.degree_[i] = degree(elements[i]);
        for (size_t j = 0; j < elements.size(); ++j)
            P.less_[i * elements.size() + j] = less(elements[i], elements[j]) ? 1 : 0;
    }
    P.rebuild_covers();
    return P;
}

bool GradedPoset::cover_graded() const {
    for (const auto& [a, b] : covers_)
        if (degree(b) != degree(a) + 1) return false;
    return true;
}

GradedPoset face_poset(const Trisp& T) {
    GradedPoset P;
    P.n_ = T.total();
    P.degree_.resize(static_cast<size_t>(P.n_));
    P.less_.assign(static_cast<size_t>(P.n_) * static_cast<size_t>(P.n_), 0);

    for (int k = 0; k <= T.max_dim(); ++k)
        for (int i = 0; i < T.count(k); ++i)
            P.degree_[static_cast<size_t>(T.element_id(k, i))] = k;

    // Direct faces are exactly the covers; reachability closes the order.
    for (int k = 1; k <= T.max_dim(); ++k)
        for (int i = 0; i < T.count(k); ++i) {
            const int b = T.element_id(k, i);
            for (int j = 0; j <= k; ++j) {
                const int a = T.element_id(k - 1, T.face(k, i, j));
                P.less_[static_cast<size_t>(a) * P.n_ + b] = 1;
            }
        }
    // Close transitively, low dimension upward.
    for (int k = 2; k <= T.max_dim(); ++k)
        for (int i = 0; i < T.count(k); ++i) {
            const int b = T.element_id(k, i);
            for (int j = 0; j <= k; ++j) {
                const int mid = T.element_id(k - 1, T.face(k, i, j));
                for (int a = 0; a < P.n_; ++a)
                    if (P.less_[static_cast<size_t>(a) * P.n_ + mid])
                        P.less_[static_cast<size_t>(a) * P.n_ + b] = 1;
            }
        }

    P.covers_.clear();
    for (int k = 1; k <= T.max_dim(); ++k)
        for (int i = 0; i < T.count(k); ++i)
            for (int j = 0; j <= k; ++j)
                P.covers_.emplace_back(T.element_id(k - 1, T.face(k, i, j)), T.element_id(k, i));
    std::sort(P.covers_.begin(), P.covers_.end());
    P.covers_.erase(std::unique(P.covers_.begin(), P.covers_.end()), P.covers_.end());
    return P;
}

ThinCategory thin_category(const GradedPoset& P) {
    const int n = P.size();
    ThinCategory tc;
    tc.pair_morphism.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);

    std::vector<Morphism> morphisms;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (P.less(a, b)) {
                tc.pair_morphism[static_cast<size_t>(a) * n + b] =
                    static_cast<MorphismId>(morphisms.size());
                morphisms.push_back({a, b});
            }

    std::vector<CompositionRule> rules;
    const MorphismId n_mor = static_cast<MorphismId>(morphisms.size());
    for (MorphismId g = 0; g < n_mor; ++g)
        for (MorphismId f = 0; f < n_mor; ++f) {
            const Morphism& mg = morphisms[static_cast<size_t>(g)];
            const Morphism& mf = morphisms[static_cast<size_t>(f)];
            if (mf.tgt != mg.src) continue;
            rules.push_back({g, f, tc.pair_morphism[static_cast<size_t>(mf.src) * n + mg.tgt]});
        }

    tc.category = build_category(n, std::move(morphisms), rules);
    return tc;
}

Functor thin_endofunctor(const ThinCategory& tc, const std::vector<int>& self_map) {
    const Category& C = tc.category;
    const int n = C.num_objects();
    if (self_map.size() != static_cast<size_t>(n))
        throw std::invalid_argument("self-map is not total");

    std::vector<ObjectId> obj(self_map.begin(), self_map.end());
    std::vector<MorphismRef> mor;
    mor.reserve(static_cast<size_t>(C.num_morphisms()));
    for (MorphismId m = 0; m < C.num_morphisms(); ++m) {
        const int fx = self_map[static_cast<size_t>(C.src(m))];
        const int fy = self_map[static_cast<size_t>(C.tgt(m))];
        if (fx == fy) {
            mor.push_back(MorphismRef::identity(fx));
        } else {
            const MorphismId im = tc.pair_morphism[static_cast<size_t>(fx) * n + fy];
            if (im < 0)
                fail(errc::endpoint_mismatch, "self-map is not order-preserving");
            mor.push_back(MorphismRef::arrow(im));
        }
    }
    return build_functor(C, C, std::move(obj), std::move(mor));
}

Trisp order_complex(const GradedPoset& P) { return nerve(thin_category(P).category); }

Subdivision subdivision(const Category& C) {
    Subdivision sd;
    sd.complex = nerve(C);
    sd.poset = face_poset(sd.complex);
    return sd;
}

std::vector<int> subdivision_map(const Subdivision& sd, const Functor& F) {
    const TrispMap images = induced_trisp_map(sd.complex, F);
    std::vector<int> map(static_cast<size_t>(sd.poset.size()));
    for (int k = 0; k <= sd.complex.max_dim(); ++k)
        for (int i = 0; i < sd.complex.count(k); ++i) {
            const SimplexImage& img = images[static_cast<size_t>(k)][static_cast<size_t>(i)];
            map[static_cast<size_t>(sd.complex.element_id(k, i))] =
                sd.complex.element_id(img.dim, img.index);
        }

    // Order preservation; degree preservation for strict functors.
    for (const auto& [a, b] : sd.poset.covers())
        if (!sd.poset.less_equal(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]))
            fail(errc::non_commuting, "internal: subdivision self-map is not order-preserving");
    if (F.strict())
        for (int e = 0; e < sd.poset.size(); ++e)
            if (sd.poset.degree(map[static_cast<size_t>(e)]) != sd.poset.degree(e))
                fail(errc::non_commuting, "internal: strict functor changed a simplex dimension");
    return map;
}

} // namespace acat
