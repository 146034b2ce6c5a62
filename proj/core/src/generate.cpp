#include "acat/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>

namespace acat {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

namespace {

// All draws go through this wrapper; mt19937_64 output is specified by the
// standard, so sequences are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double real() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }
    bool bernoulli(double p) {
        if (p <= 0.0) {
            next();
            return false;
        }
        if (p >= 1.0) {
            next();
            return true;
        }
        return real() < p;
    }

private:
    std::mt19937_64 engine_;
};

using Path = std::vector<int>; // edge ids, consecutive edges composable

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

struct FreePaths {
    std::vector<Morphism> edges;
    std::vector<Path> paths;              // lex-sorted
    std::map<Path, int> index;

    ObjectId src(const Path& p) const { return edges[static_cast<size_t>(p.front())].src; }
    ObjectId tgt(const Path& p) const { return edges[static_cast<size_t>(p.back())].tgt; }
};

// Enumerates every nonempty composable edge sequence; empty result on blowup.
std::optional<FreePaths> enumerate_paths(std::vector<Morphism> edges, size_t cap) {
    FreePaths fp;
    fp.edges = std::move(edges);

    std::vector<Path> frontier;
    for (int e = 0; e < static_cast<int>(fp.edges.size()); ++e) frontier.push_back({e});
    while (!frontier.empty()) {
        fp.paths.insert(fp.paths.end(), frontier.begin(), frontier.end());
        if (fp.paths.size() > cap) return std::nullopt;
        std::vector<Path> next;
        for (const Path& p : frontier) {
            const ObjectId end = fp.tgt(p);
            for (int e = 0; e < static_cast<int>(fp.edges.size()); ++e) {
                if (fp.edges[static_cast<size_t>(e)].src != end) continue;
                Path q = p;
                q.push_back(e);
                next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }

    std::sort(fp.paths.begin(), fp.paths.end());
    for (int i = 0; i < static_cast<int>(fp.paths.size()); ++i) fp.index[fp.paths[static_cast<size_t>(i)]] = i;
    return fp;
}

Path concat(const Path& p, const Path& q) {
    Path out = p;
    out.insert(out.end(), q.begin(), q.end());
    return out;
}

// Identifies two parallel paths and closes under composition on both sides.
void merge_congruent(const FreePaths& fp, UnionFind& uf, int p0, int q0) {
    std::vector<std::pair<int, int>> work{{p0, q0}};
    while (!work.empty()) {
        auto [p, q] = work.back();
        work.pop_back();
        if (!uf.unite(p, q)) continue;
        const Path& pp = fp.paths[static_cast<size_t>(p)];
        const Path& qq = fp.paths[static_cast<size_t>(q)];
        for (const Path& r : fp.paths) {
            if (fp.src(r) == fp.tgt(pp))
                work.emplace_back(fp.index.at(concat(pp, r)), fp.index.at(concat(qq, r)));
            if (fp.tgt(r) == fp.src(pp))
                work.emplace_back(fp.index.at(concat(r, pp)), fp.index.at(concat(r, qq)));
        }
    }
}

struct Quotient {
    std::vector<Path> representatives;    // lex-min member per class, sorted
    std::vector<int> class_of;            // path id -> class id
};

Quotient quotient_classes(const FreePaths& fp, UnionFind& uf) {
    std::map<int, Path> rep_by_root;
    for (int p = 0; p < static_cast<int>(fp.paths.size()); ++p) {
        const int root = uf.find(p);
        auto it = rep_by_root.find(root);
        if (it == rep_by_root.end() || fp.paths[static_cast<size_t>(p)] < it->second)
            rep_by_root[root] = fp.paths[static_cast<size_t>(p)];
    }

    Quotient q;
    std::vector<std::pair<Path, int>> ordered; // (representative, root)
    for (const auto& [root, rep] : rep_by_root) ordered.emplace_back(rep, root);
    std::sort(ordered.begin(), ordered.end());

    std::map<int, int> class_by_root;
    for (int c = 0; c < static_cast<int>(ordered.size()); ++c) {
        q.representatives.push_back(ordered[static_cast<size_t>(c)].first);
        class_by_root[ordered[static_cast<size_t>(c)].second] = c;
    }
    q.class_of.resize(fp.paths.size());
    for (int p = 0; p < static_cast<int>(fp.paths.size()); ++p)
        q.class_of[static_cast<size_t>(p)] = class_by_root.at(uf.find(p));
    return q;
}

std::optional<Category> try_build_category(Rng& rng, int max_objects, int max_morphisms) {
    const int n = rng.uniform(1, max_objects);

    std::vector<Morphism> edges;
    const double density = 0.12 + 0.45 * rng.real();
    for (ObjectId i = 0; i < n; ++i)
        for (ObjectId j = i + 1; j < n; ++j)
            if (rng.bernoulli(density)) {
                edges.push_back({i, j});
                if (rng.bernoulli(0.22)) edges.push_back({i, j}); // parallel pair
            }
    if (static_cast<int>(edges.size()) > std::max(2 * max_morphisms, 4)) return std::nullopt;

    auto fp = enumerate_paths(std::move(edges), 140);
    if (!fp) return std::nullopt;
    if (fp->paths.empty()) {
        return build_category(n, {}, {});
    }

    UnionFind uf(fp->paths.size());

    auto parallel_class_pairs = [&]() {
        std::vector<std::pair<int, int>> pairs;
        std::map<int, Path> reps;
        for (int p = 0; p < static_cast<int>(fp->paths.size()); ++p) {
            const int r = uf.find(p);
            auto it = reps.find(r);
            if (it == reps.end() || fp->paths[static_cast<size_t>(p)] < it->second)
                reps[r] = fp->paths[static_cast<size_t>(p)];
        }
        std::vector<std::pair<Path, int>> roots(reps.size());
        std::transform(reps.begin(), reps.end(), roots.begin(),
                       [](const auto& kv) { return std::make_pair(kv.second, kv.first); });
        std::sort(roots.begin(), roots.end());
        for (size_t a = 0; a < roots.size(); ++a)
            for (size_t b = a + 1; b < roots.size(); ++b)
                if (fp->src(roots[a].first) == fp->src(roots[b].first) &&
                    fp->tgt(roots[a].first) == fp->tgt(roots[b].first))
                    pairs.emplace_back(fp->index.at(roots[a].first),
                                       fp->index.at(roots[b].first));
        return pairs;
    };

    // A few random identifications, then merge until the size cap is met.
    {
        auto pairs = parallel_class_pairs();
        if (!pairs.empty()) {
            const int merges = rng.uniform(0, std::min<int>(4, static_cast<int>(pairs.size())));
            for (int t = 0; t < merges; ++t) {
                pairs = parallel_class_pairs();
                if (pairs.empty()) break;
                const auto [p, q] = pairs[static_cast<size_t>(
                    rng.uniform(0, static_cast<int>(pairs.size()) - 1))];
                merge_congruent(*fp, uf, p, q);
            }
        }
    }
    while (true) {
        Quotient q = quotient_classes(*fp, uf);
        if (static_cast<int>(q.representatives.size()) <= max_morphisms) break;
        auto pairs = parallel_class_pairs();
        if (pairs.empty()) return std::nullopt;
        const auto [p, qq] =
            pairs[static_cast<size_t>(rng.uniform(0, static_cast<int>(pairs.size()) - 1))];
        merge_congruent(*fp, uf, p, qq);
    }

    const Quotient q = quotient_classes(*fp, uf);
    const MorphismId n_mor = static_cast<MorphismId>(q.representatives.size());

    std::vector<Morphism> morphisms;
    morphisms.reserve(static_cast<size_t>(n_mor));
    for (const Path& rep : q.representatives) morphisms.push_back({fp->src(rep), fp->tgt(rep)});

    std::vector<CompositionRule> rules;
    for (MorphismId g = 0; g < n_mor; ++g)
        for (MorphismId f = 0; f < n_mor; ++f) {
            const Path& pf = q.representatives[static_cast<size_t>(f)];
            const Path& pg = q.representatives[static_cast<size_t>(g)];
            if (fp->tgt(pf) != fp->src(pg)) continue;
            rules.push_back(
                {g, f, q.class_of[static_cast<size_t>(fp->index.at(concat(pf, pg)))]});
        }

    return build_category(n, std::move(morphisms), rules);
}

std::optional<Functor> try_build_endofunctor(Rng& rng, const Category& C,
                                             double collapse_probability) {
    const ObjectId n = C.num_objects();
    const MorphismId n_mor = C.num_morphisms();

    // Generators: morphisms that are not composites.
    std::vector<bool> decomposable(static_cast<size_t>(n_mor), false);
    std::vector<std::pair<MorphismId, MorphismId>> factor(static_cast<size_t>(n_mor), {-1, -1});
    for (MorphismId g = 0; g < n_mor; ++g)
        for (MorphismId f = 0; f < n_mor; ++f) {
            if (!C.composable(g, f)) continue;
            const MorphismId h = C.compose(g, f);
            if (!decomposable[static_cast<size_t>(h)]) {
                decomposable[static_cast<size_t>(h)] = true;
                factor[static_cast<size_t>(h)] = {g, f};
            }
        }

    const bool allow_collapse = rng.bernoulli(collapse_probability);

    std::vector<ObjectId> obj(static_cast<size_t>(n));
    const int mode = rng.uniform(0, 9);
    if (mode == 0) {
        std::iota(obj.begin(), obj.end(), 0);
    } else if (mode == 1) {
        std::fill(obj.begin(), obj.end(), static_cast<ObjectId>(rng.uniform(0, n - 1)));
    } else {
        for (ObjectId x = 0; x < n; ++x) obj[static_cast<size_t>(x)] = rng.uniform(0, n - 1);
    }

    bool any_collapse = false;
    for (MorphismId m = 0; m < n_mor; ++m) {
        if (decomposable[static_cast<size_t>(m)]) continue;
        const ObjectId fx = obj[static_cast<size_t>(C.src(m))];
        const ObjectId fy = obj[static_cast<size_t>(C.tgt(m))];
        if (fx == fy)
            any_collapse = true;
        else if (!C.hom_nonempty(fx, fy))
            return std::nullopt;
    }
    if (any_collapse && !allow_collapse) return std::nullopt;

    std::vector<std::optional<MorphismRef>> image(static_cast<size_t>(n_mor));
    for (MorphismId m = 0; m < n_mor; ++m) {
        if (decomposable[static_cast<size_t>(m)]) continue;
        const ObjectId fx = obj[static_cast<size_t>(C.src(m))];
        const ObjectId fy = obj[static_cast<size_t>(C.tgt(m))];
        if (fx == fy) {
            image[static_cast<size_t>(m)] = MorphismRef::identity(fx);
        } else {
            const std::vector<MorphismId> choices = C.hom(fx, fy);
            image[static_cast<size_t>(m)] = MorphismRef::arrow(
                choices[static_cast<size_t>(rng.uniform(0, static_cast<int>(choices.size()) - 1))]);
        }
    }

    bool progress = true;
    while (progress) {
        progress = false;
        for (MorphismId h = 0; h < n_mor; ++h) {
            if (image[static_cast<size_t>(h)] || !decomposable[static_cast<size_t>(h)]) continue;
            const auto& [g, f] = factor[static_cast<size_t>(h)];
            if (!image[static_cast<size_t>(g)] || !image[static_cast<size_t>(f)]) continue;
            image[static_cast<size_t>(h)] =
                C.compose(*image[static_cast<size_t>(g)], *image[static_cast<size_t>(f)]);
            progress = true;
        }
    }

    std::vector<MorphismRef> mor;
    mor.reserve(static_cast<size_t>(n_mor));
    for (MorphismId m = 0; m < n_mor; ++m) {
        if (!image[static_cast<size_t>(m)]) return std::nullopt;
        mor.push_back(*image[static_cast<size_t>(m)]);
    }

    try {
        return build_functor(C, C, std::move(obj), std::move(mor));
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

Instance generate_random(const GenerateOptions& opts) {
    if (opts.max_objects < 1 || opts.max_morphisms < 0)
        throw std::invalid_argument("generator bounds must be positive");
    if (opts.collapse_probability < 0.0 || opts.collapse_probability > 1.0)
        throw std::invalid_argument("collapse probability must lie in [0, 1]");

    Rng rng(splitmix64(opts.seed));

    for (int attempt = 0; attempt < 200; ++attempt) {
        auto category = try_build_category(rng, opts.max_objects, opts.max_morphisms);
        if (!category) continue;

        for (int f_attempt = 0; f_attempt < 60; ++f_attempt) {
            auto functor = try_build_endofunctor(rng, *category, opts.collapse_probability);
            if (functor) return {*category, *functor};
        }
        return {*category, identity_functor(*category)};
    }
    fail(errc::generation_failed,
         "no category produced after bounded attempts (seed " + std::to_string(opts.seed) + ")");
}

} // namespace acat
