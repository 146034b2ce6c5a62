#pragma once

#include <cstdint>

#include "acat/category.hpp"

namespace acat {

struct GenerateOptions {
    std::uint64_t seed = 0;
    int max_objects = 6;
    int max_morphisms = 14;
    double collapse_probability = 0.0; // 0 guarantees a strict endofunctor
};

struct Instance {
    Category category;
    Functor functor; // endofunctor on category
};

// Deterministic in the seed: the same options produce byte-identical
// serializations on every platform. Categories are built as free categories
// on random multigraph DAGs, quotiented by a random congruence merging
// parallel paths; endofunctors are searched by rejection against the
// validators, falling back to the identity functor.
Instance generate_random(const GenerateOptions& opts);

std::uint64_t splitmix64(std::uint64_t x);

} // namespace acat
