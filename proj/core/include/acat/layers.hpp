#pragma once

#include <map>
#include <vector>

#include "acat/lefschetz.hpp"

namespace acat {

// Elements of degree exactly i.
std::vector<int> layer(const GradedPoset& P, int i);

// Induced subposet on the elements of degree > i. Original degrees are
// retained; kept (optional) receives the surviving ambient element ids.
GradedPoset delete_layers_leq(const GradedPoset& P, int i, std::vector<int>* kept = nullptr);

// Induced subposet with the single layer i removed. Provided for
// completeness; the resulting degree labels need not be a grading.
GradedPoset delete_layer(const GradedPoset& P, int i, std::vector<int>* kept = nullptr);

/*
 * Domain of the restricted self-map on sd(C) above a layer cutoff. For a
 * strict functor this is all elements of degree > cutoff. In general the
 * subdivision self-map may drop degree, so the domain is the largest subset
 * closed under the map; the literal one-step preimage deletion is kept
 * alongside and flagged when it differs.
 */
struct LayeredDomain {
    int cutoff = 0;
    std::vector<int> elements;       // ambient sd element ids, ascending
    std::vector<int> induced_map;    // positions into elements
    GradedPoset subposet;            // induced on elements, original degrees
    std::vector<int> paper_elements; // one-step preimage deletion, ascending
    bool domains_differ = false;
};

LayeredDomain restricted_map(const Subdivision& sd, const std::vector<int>& sd_map, int cutoff);
LayeredDomain restricted_map(const Functor& F, int cutoff);

struct LayeredLefschetz {
    DualValue L;
    long long chi_fixed_subposet = 0; // must equal L
    LayeredDomain domain;
};

// Lefschetz number of the restricted self-map, evaluated on the order
// complex of the domain subposet and cross-checked against the Euler
// characteristic of its fixed subposet.
LayeredLefschetz layered_lefschetz_detail(const Subdivision& sd, const std::vector<int>& sd_map,
                                          int cutoff);
long long layered_lefschetz(const Functor& F, int cutoff);

using MorphismChain = std::vector<MorphismId>;

// All composable chains of k non-identity morphisms fixed pointwise by F,
// in lexicographic order. Enumerates directly on the category, independent
// of the subdivision machinery.
std::vector<MorphismChain> fixed_chain_search(const Functor& F, int k);

struct ChainWitnesses {
    long long total = 0;
    std::vector<MorphismChain> sample; // lexicographically first, truncated
};

struct FixedMorphismReport {
    int cutoff = 0;
    DualValue layered_L;
    long long chi_fixed_subposet = 0;
    std::map<int, ChainWitnesses> fixed_chains_by_length; // k = 1 .. cutoff+1
    bool hypothesis_holds = false;                        // layered_L != 0
    bool theorem_holds = false;
    bool strict = true;
    bool domains_differ = false;
};

// Verifies: layered_lefschetz(F, cutoff) != 0 implies fixed composable
// k-chains exist for all 1 <= k <= cutoff+1. Throws TheoremViolated with a
// serialized counterexample when the implication fails.
FixedMorphismReport check_fixed_morphism_theorem(const Functor& F, int cutoff,
                                                 int max_witnesses = 16);
FixedMorphismReport check_fixed_morphism_theorem(const Functor& F, const Subdivision& sd,
                                                 const std::vector<int>& sd_map, int cutoff,
                                                 int max_witnesses = 16);

} // namespace acat
