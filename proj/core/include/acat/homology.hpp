#pragma once

#include <vector>

#include "acat/matrix.hpp"
#include "acat/nerve.hpp"

namespace acat {

// Rational chain complex of a trisp: dims[k] simplices in degree k and
// boundary[k] : C_k -> C_{k-1} (boundary[0] has zero rows).
struct ChainComplex {
    std::vector<int> dims;
    std::vector<Matrix> boundary;
};

// chain_complex verifies boundary . boundary == 0.
ChainComplex chain_complex(const Trisp& T);

// Degree-preserving chain self-map: maps[k] : C_k -> C_k. Basis simplices go
// to their image simplex, or to zero when the image is degenerate.
// chain_map verifies commutation with the boundaries.
struct ChainMap {
    std::vector<Matrix> maps;
};

ChainMap chain_map(const Trisp& T, const TrispMap& images);
ChainMap chain_map(const Trisp& T, const TrispMap& images, const ChainComplex& K);

std::vector<int> betti(const ChainComplex& K);
std::vector<int> betti(const Trisp& T);

long long euler_char(const ChainComplex& K);
long long euler_char(const Trisp& T);
long long euler_from_homology(const ChainComplex& K);
long long euler_from_homology(const Trisp& T);

// Alternating sum of chain-level traces. With basis-image matrices this is
// the alternating count of simplices fixed by the map.
long long hopf_lefschetz(const ChainComplex& K, const ChainMap& f);

// Alternating sum of the traces of the maps induced on rational homology,
// computed on a complement-of-boundaries basis inside each cycle space.
// Betti numbers fall out of the same elimination.
struct HomologyAnalysis {
    long long lefschetz = 0;
    std::vector<int> betti;
    std::vector<Rational> traces; // trace of H_k(f) per degree
};

HomologyAnalysis homology_analysis(const ChainComplex& K, const ChainMap& f);

long long homology_lefschetz(const ChainComplex& K, const ChainMap& f);

} // namespace acat
