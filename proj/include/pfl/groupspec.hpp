#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfl/piecewise.hpp"

namespace pfl {

// User- or catalog-asserted facts about a group that cannot be derived from
// the generator data alone.  Consumers record every assertion they consume.
struct GroupMetadata {
    std::vector<Int> slope_primes;                  // declares the slope group exactly
    std::optional<std::string> coherent_note;       // present = coherence asserted
    std::optional<std::string> breakpoint_note;     // free-form module description
    std::optional<std::string> infinite_support_note; // asserts an element with
                                                      // infinitely many support components
    bool empty() const {
        return slope_primes.empty() && !coherent_note && !breakpoint_note &&
               !infinite_support_note;
    }
    bool operator==(const GroupMetadata&) const = default;
};

struct GroupSpec {
    std::string name;
    Domain domain;
    std::vector<std::string> gen_names;    // unique, original order
    std::vector<PiecewiseMap> generators;  // same order, same domain
    GroupMetadata metadata;

    int generator_index(const std::string& name) const; // -1 when absent
    const PiecewiseMap& generator(const std::string& name) const;

    static GroupSpec make(std::string name, Domain domain,
                          std::vector<std::pair<std::string, PiecewiseMap>> gens,
                          GroupMetadata metadata = {});

    bool operator==(const GroupSpec& o) const;
};

// Line-oriented group-definition format:
//
//   domain line | domain interval <alpha> <omega>
//   meta slope_primes <p> ...
//   meta coherent <note>
//   meta breakpoints <note>
//   meta infinite_support <note>
//   gen <name>
//     <l> <r> <a> <b> <c> <d>     # piece on [l,r]: t -> (a t + b)/(c t + d)
//     ...
//   end
//
// Rationals are `p/q` or integers, infinities `-inf` and `inf`.  `#` starts
// a comment.  Serialization writes canonical coefficients, so
// serialize(parse(text)) == text for canonical files.
GroupSpec parse_group(const std::string& text, const std::string& name = "group");
std::string serialize_group(const GroupSpec& spec);

GroupSpec load_group_file(const std::string& path);
void write_group_file(const GroupSpec& spec, const std::string& path);

} // namespace pfl
