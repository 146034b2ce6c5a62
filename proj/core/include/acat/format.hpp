#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "acat/category.hpp"

namespace acat {

/*
 * Line-oriented category text format (UTF-8, LF):
 *
 *   # comment
 *   objects: <n>
 *   mor <name>: <src> -> <tgt>
 *   comp <g> . <f> = <h>
 *
 * Objects are referenced by index 0..n-1; morphism names are unique.
 * The functor format, against a source and a target category:
 *
 *   obj <x> -> <y>
 *   mor <name> -> <name' | id(<y>)>
 *
 * with one line per source object and per source morphism.
 */

struct NamedCategory {
    Category category;
    std::vector<std::string> morphism_names; // by morphism id
};

NamedCategory parse_category(const std::string& text);
std::string serialize_category(const Category& C,
                               const std::vector<std::string>* names = nullptr);

Functor parse_functor(const std::string& text, const NamedCategory& source,
                      const NamedCategory& target);
std::string serialize_functor(const Functor& F,
                              const std::vector<std::string>* source_names = nullptr,
                              const std::vector<std::string>* target_names = nullptr);

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

// Content hash of the canonical serialization, for report headers.
std::string instance_digest(const Category& C, const Functor* F = nullptr);

} // namespace acat
