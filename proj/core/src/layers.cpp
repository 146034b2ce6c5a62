#include "acat/layers.hpp"

#include <algorithm>

#include "acat/format.hpp"

namespace acat {

std::vector<int> layer(const GradedPoset& P, int i) {
    std::vector<int> out;
    for (int e = 0; e < P.size(); ++e)
        if (P.degree(e) == i) out.push_back(e);
    return out;
}

GradedPoset delete_layers_leq(const GradedPoset& P, int i, std::vector<int>* kept) {
    std::vector<int> elements;
    for (int e = 0; e < P.size(); ++e)
        if (P.degree(e) > i) elements.push_back(e);
    if (kept) *kept = elements;
    return P.induced(elements);
}

GradedPoset delete_layer(const GradedPoset& P, int i, std::vector<int>* kept) {
    std::vector<int> elements;
    for (int e = 0; e < P.size(); ++e)
        if (P.degree(e) != i) elements.push_back(e);
    if (kept) *kept = elements;
    return P.induced(elements);
}

LayeredDomain restricted_map(const Subdivision& sd, const std::vector<int>& sd_map, int cutoff) {
    LayeredDomain out;
    out.cutoff = cutoff;

    const int n = sd.poset.size();
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (int e = 0; e < n; ++e) in[static_cast<size_t>(e)] = sd.poset.degree(e) > cutoff;

    // One-step deletion of the preimage of the low layers.
    std::vector<char> paper = in;
    for (int e = 0; e < n; ++e)
        if (paper[static_cast<size_t>(e)] && !in[static_cast<size_t>(sd_map[static_cast<size_t>(e)])])
            paper[static_cast<size_t>(e)] = 0;
    for (int e = 0; e < n; ++e)
        if (paper[static_cast<size_t>(e)]) out.paper_elements.push_back(e);

    // Greatest subset closed under the map.
    std::vector<char> keep = paper;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < n; ++e)
            if (keep[static_cast<size_t>(e)] && !keep[static_cast<size_t>(sd_map[static_cast<size_t>(e)])]) {
                keep[static_cast<size_t>(e)] = 0;
                changed = true;
            }
    }

    std::vector<int> position(static_cast<size_t>(n), -1);
    for (int e = 0; e < n; ++e)
        if (keep[static_cast<size_t>(e)]) {
            position[static_cast<size_t>(e)] = static_cast<int>(out.elements.size());
            out.elements.push_back(e);
        }
    out.domains_differ = out.elements != out.paper_elements;

    out.induced_map.reserve(out.elements.size());
    for (int e : out.elements)
        out.induced_map.push_back(position[static_cast<size_t>(sd_map[static_cast<size_t>(e)])]);

    out.subposet = sd.poset.induced(out.elements);
    return out;
}

LayeredDomain restricted_map(const Functor& F, int cutoff) {
    const Subdivision sd = subdivision(F.source());
    return restricted_map(sd, subdivision_map(sd, F), cutoff);
}

LayeredLefschetz layered_lefschetz_detail(const Subdivision& sd, const std::vector<int>& sd_map,
                                          int cutoff) {
    LayeredLefschetz out;
    out.domain = restricted_map(sd, sd_map, cutoff);
    out.L = poset_lefschetz_dual(out.domain.subposet, out.domain.induced_map);

    std::vector<int> fixed;
    for (size_t p = 0; p < out.domain.induced_map.size(); ++p)
        if (out.domain.induced_map[p] == static_cast<int>(p)) fixed.push_back(static_cast<int>(p));
    out.chi_fixed_subposet = euler_of_poset(out.domain.subposet.induced(fixed));
    if (out.chi_fixed_subposet != out.L.value())
        fail(errc::method_mismatch,
             "layered Lefschetz number differs from the Euler characteristic of its fixed "
             "subposet");
    return out;
}

long long layered_lefschetz(const Functor& F, int cutoff) {
    const Subdivision sd = subdivision(F.source());
    return layered_lefschetz_detail(sd, subdivision_map(sd, F), cutoff).L.value();
}

namespace {

void extend_fixed_chains(const Category& C, const std::vector<MorphismId>& fixed, int k,
                         MorphismChain& current, std::vector<MorphismChain>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (MorphismId m : fixed) {
        if (!current.empty() && C.src(m) != C.tgt(current.back())) continue;
        current.push_back(m);
        extend_fixed_chains(C, fixed, k, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<MorphismChain> fixed_chain_search(const Functor& F, int k) {
    if (!F.is_endofunctor())
        fail(errc::not_endofunctor, "fixed chain search requires an endofunctor");
    if (k < 1) throw std::invalid_argument("chain length must be at least 1");

    const Category& C = F.source();
    std::vector<MorphismId> fixed;
    for (MorphismId m = 0; m < C.num_morphisms(); ++m)
        if (F.morphism_image(m) == MorphismRef::arrow(m)) fixed.push_back(m);

    std::vector<MorphismChain> out;
    MorphismChain current;
    extend_fixed_chains(C, fixed, k, current, out);
    return out;
}

FixedMorphismReport check_fixed_morphism_theorem(const Functor& F, const Subdivision& sd,
                                                 const std::vector<int>& sd_map, int cutoff,
                                                 int max_witnesses) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
    FixedMorphismReport report;
    report.cutoff = cutoff;
    report.strict = F.strict();

    const LayeredLefschetz ll = layered_lefschetz_detail(sd, sd_map, cutoff);
    report.layered_L = ll.L;
    report.chi_fixed_subposet = ll.chi_fixed_subposet;
    report.domains_differ = ll.domain.domains_differ;
    report.hypothesis_holds = ll.L.value() != 0;

    bool all_found = true;
    for (int k = 1; k <= cutoff + 1; ++k) {
        std::vector<MorphismChain> chains = fixed_chain_search(F, k);
        ChainWitnesses w;
        w.total = static_cast<long long>(chains.size());
        const size_t keep = std::min(chains.size(), static_cast<size_t>(max_witnesses));
        w.sample.assign(chains.begin(), chains.begin() + static_cast<long>(keep));
        if (chains.empty()) all_found = false;
        report.fixed_chains_by_length[k] = std::move(w);
    }

    report.theorem_holds = !report.hypothesis_holds || all_found;
    if (!report.theorem_holds)
        fail(errc::theorem_violated,
             "layered Lefschetz number is " + std::to_string(ll.L.value()) +
                 " at cutoff " + std::to_string(cutoff) +
                 " but some fixed chain length is missing, on instance:\n" +
                 serialize_category(F.source()) + "--\n" + serialize_functor(F));
    return report;
}

FixedMorphismReport check_fixed_morphism_theorem(const Functor& F, int cutoff, int max_witnesses) {
    if (!F.is_endofunctor())
        fail(errc::not_endofunctor, "theorem check requires an endofunctor");
    const Subdivision sd = subdivision(F.source());
    return check_fixed_morphism_theorem(F, sd, subdivision_map(sd, F), cutoff, max_witnesses);
}

} // namespace acat
