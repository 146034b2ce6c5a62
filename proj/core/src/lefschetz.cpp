#include "acat/lefschetz.hpp"

#include <algorithm>

#include "acat/format.hpp"

namespace acat {

DualValue lefschetz_dual(const Functor& F) {
    if (!F.is_endofunctor())
        fail(errc::not_endofunctor, "Lefschetz number requires an endofunctor");
    const Trisp T = nerve(F.source());
    const ChainComplex K = chain_complex(T);
    const ChainMap f = chain_map(T, induced_trisp_map(T, F), K);
    const long long chain_level = hopf_lefschetz(K, f);
    const long long homology_level = homology_lefschetz(K, f);
    if (chain_level != homology_level)
        fail(errc::method_mismatch,
             "chain-level and homology-level Lefschetz numbers differ (" +
                 std::to_string(chain_level) + " vs " + std::to_string(homology_level) + ")");
    return {chain_level, homology_level};
}

long long lefschetz_number(const Functor& F) { return lefschetz_dual(F).value(); }

DualValue r_lefschetz_dual(const Functor& F) {
    if (!F.is_endofunctor())
        fail(errc::not_endofunctor, "R-Lefschetz number requires an endofunctor");
    return lefschetz_dual(poset_reflection_map(F));
}

long long r_lefschetz_number(const Functor& F) { return r_lefschetz_dual(F).value(); }

DualValue poset_lefschetz_dual(const GradedPoset& P, const std::vector<int>& self_map) {
    return lefschetz_dual(thin_endofunctor(thin_category(P), self_map));
}

long long poset_lefschetz(const GradedPoset& P, const std::vector<int>& self_map) {
    return poset_lefschetz_dual(P, self_map).value();
}

long long euler_of_poset(const GradedPoset& P) {
    // Alternating chain counts, by dynamic programming over chain ends:
    // ending[e] holds the number of chains of the current length ending at e.
    const int n = P.size();
    std::vector<long long> ending(static_cast<size_t>(n), 1);
    long long chi = 0;
    int sign = 1;
    while (true) {
        long long total = 0;
        for (long long c : ending) total += c;
        if (total == 0) break;
        chi += sign * total;
        sign = -sign;
        std::vector<long long> next(static_cast<size_t>(n), 0);
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a)
                if (P.less(a, b)) next[static_cast<size_t>(b)] += ending[static_cast<size_t>(a)];
        ending = std::move(next);
    }
    return chi;
}

LefschetzValues lefschetz_values(const Functor& F) {
    LefschetzValues out;
    out.L = lefschetz_dual(F);
    out.L_R = r_lefschetz_dual(F);
    out.fixed_objects = fixed_data(F).fixed_objects;
    out.strict = F.strict();
    return out;
}

bool LefschetzReport::all_hold() const {
    return std::all_of(identities_checked.begin(), identities_checked.end(),
                       [](const auto& id) { return id.second; });
}

namespace {

// Element ids of sd(C) occupied by the subdivision of the fixed subcategory.
std::vector<int> embedded_fixed_subdivision(const Subdivision& sd, const FixedData& fixed) {
    const Trisp sub = nerve(fixed.fixed_subcategory);
    std::vector<int> out;
    for (int k = 0; k <= sub.max_dim(); ++k)
        for (int i = 0; i < sub.count(k); ++i) {
            const Simplex& s = sub.simplex(k, i);
            Simplex ambient;
            if (k == 0) {
                ambient.vertex = fixed.object_embedding[static_cast<size_t>(s.vertex)];
            } else {
                for (MorphismId m : s.chain)
                    ambient.chain.push_back(fixed.morphism_embedding[static_cast<size_t>(m)]);
            }
            const int idx = sd.complex.index_of(ambient);
            if (idx < 0)
                fail(errc::non_commuting, "internal: fixed chain missing from the ambient nerve");
            out.push_back(sd.complex.element_id(k, idx));
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

LefschetzReport check_fixed_object_theorem(const Functor& F, const Subdivision& sd,
                                           const std::vector<int>& sd_map,
                                           const DualValue& sd_lefschetz) {
    LefschetzReport report;
    report.strict = F.strict();
    report.L = lefschetz_dual(F);
    report.L_R = r_lefschetz_dual(F);

    const FixedData fixed = fixed_data(F);
    report.fixed_objects = fixed.fixed_objects;
    report.chi_fixed_subcategory = euler_char(nerve(fixed.fixed_subcategory));

    const FixedData fixed_r = fixed_data(poset_reflection_map(F));
    report.chi_fixed_poset = euler_char(nerve(fixed_r.fixed_subcategory));

    std::vector<int> fixed_elements;
    for (int e = 0; e < sd.poset.size(); ++e)
        if (sd_map[static_cast<size_t>(e)] == e) fixed_elements.push_back(e);

    report.identities_checked = {
        {"L == chi(fixed subcategory)", report.L.value() == report.chi_fixed_subcategory},
        {"L_R == chi(fixed poset)", report.L_R.value() == report.chi_fixed_poset},
        {"L == L(sd F)", report.L.value() == sd_lefschetz.value()},
        {"fixed part of sd(C) == sd(fixed subcategory)",
         fixed_elements == embedded_fixed_subdivision(sd, fixed)},
        {"nonzero Lefschetz number implies a fixed object",
         (report.L.value() == 0 && report.L_R.value() == 0) || !report.fixed_objects.empty()},
    };

    if (!report.all_hold()) {
        std::string names;
        for (const auto& [name, holds] : report.identities_checked)
            if (!holds) names += (names.empty() ? "" : "; ") + name;
        fail(errc::theorem_violated,
             "fixed-object identities failed [" + names + "] on instance:\n" +
                 serialize_category(F.source()) + "--\n" + serialize_functor(F));
    }
    return report;
}

LefschetzReport check_fixed_object_theorem(const Functor& F) {
    if (!F.is_endofunctor())
        fail(errc::not_endofunctor, "theorem check requires an endofunctor");
    const Subdivision sd = subdivision(F.source());
    const std::vector<int> sd_map = subdivision_map(sd, F);
    return check_fixed_object_theorem(F, sd, sd_map, poset_lefschetz_dual(sd.poset, sd_map));
}

} // namespace acat
