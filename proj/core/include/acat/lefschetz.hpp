#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acat/homology.hpp"

namespace acat {

// A Lefschetz number computed twice: the alternating fixed-simplex count at
// chain level and the alternating homology trace sum. The two must agree.
struct DualValue {
    long long chain_level = 0;
    long long homology_level = 0;
    long long value() const { return chain_level; }
};

// Both routes for the map an endofunctor induces on the nerve of its source.
DualValue lefschetz_dual(const Functor& F);

// L(F): Lefschetz number of the induced nerve self-map.
long long lefschetz_number(const Functor& F);

// L_R(F): Lefschetz number of R(F) on the order complex of R(C).
DualValue r_lefschetz_dual(const Functor& F);
long long r_lefschetz_number(const Functor& F);

// Lefschetz number of an order-preserving self-map of a poset, evaluated on
// the order complex (dual-route checked).
DualValue poset_lefschetz_dual(const GradedPoset& P, const std::vector<int>& self_map);
long long poset_lefschetz(const GradedPoset& P, const std::vector<int>& self_map);

// Same computation, keeping the order complex invariants that fall out of
// the homology pass.
struct PosetMapAnalysis {
    DualValue L;
    std::vector<int> betti;        // of the order complex
    long long euler_counts = 0;    // alternating simplex counts
    long long euler_homology = 0;  // alternating Betti numbers
};

PosetMapAnalysis poset_map_analysis(const GradedPoset& P, const std::vector<int>& self_map);

// Euler characteristic of a poset = Euler characteristic of its order
// complex (simplex counts; no homology involved).
long long euler_of_poset(const GradedPoset& P);

struct LefschetzValues {
    DualValue L;
    DualValue L_R;
    std::vector<ObjectId> fixed_objects;
    bool strict = true;
};

// L, L_R and the fixed objects, with both method values, no theorem checks.
LefschetzValues lefschetz_values(const Functor& F);

struct LefschetzReport {
    DualValue L;
    DualValue L_R;
    long long chi_fixed_subcategory = 0;
    long long chi_fixed_poset = 0;
    std::vector<ObjectId> fixed_objects;
    bool strict = true;
    std::vector<std::pair<std::string, bool>> identities_checked;

    bool all_hold() const;
};

// Verifies, on one endofunctor instance:
//   (a) L_R(F) == chi of the fixed subposet of R(F),
//   (b) L(F)  == chi of the fixed subcategory,
//   (c) L(F)  == L(sd F), and the fixed part of sd(C) under sd(F) equals the
//       subdivision of the fixed subcategory, elementwise,
//   (d) a nonzero Lefschetz number forces a fixed object (direct search).
// Throws TheoremViolated with a serialized counterexample if any identity
// fails; that firing indicates a bug (or a genuine counterexample).
LefschetzReport check_fixed_object_theorem(const Functor& F);

// Reuse hook: same check against a precomputed subdivision, subdivision
// self-map and L(sd F).
LefschetzReport check_fixed_object_theorem(const Functor& F, const Subdivision& sd,
                                           const std::vector<int>& sd_map,
                                           const DualValue& sd_lefschetz);

} // namespace acat
