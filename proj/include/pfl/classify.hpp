#pragma once

#include "pfl/germ.hpp"

namespace pfl {

// The element taxonomy by end-germ triviality and extreme fixed points.
// On an Interval domain the end roles are read at the endpoints and "fixed
// points" means interior fixed points.
struct ElementType {
    enum class Tag { Identity, CompactlySupported, TypeA, TypeB, TypeC, FullySupported };
    Tag tag = Tag::Identity;
    // TypeC: outermost fixed points r < s, exact (possibly quadratic
    // irrationals, reported symbolically).
    std::optional<AlgebraicPoint> r, s;

    std::string str() const;
    static std::string tag_str(Tag t);
};

ElementType classify_element(const PiecewiseMap& f);

// The decomposition of the domain into maximal closed intervals that are
// either group orbitals (components of the union of generator supports) or
// pointwise fixed by every generator.  Interiors are disjoint and the parts
// tile the domain.
struct OrbitalDecomposition {
    struct Part {
        AlgebraicPoint lo, hi;
        bool orbital;
    };
    std::vector<Part> parts;

    std::string str() const;
};
OrbitalDecomposition group_orbitals(const GroupSpec& spec);

// Checks the combinatorial-finiteness clauses on sampled data: finite
// generation and finitely many support components hold by construction and
// are recorded; germ groups at each sample point must be abelian (at the
// two ends, a nonabelian germ group is accepted when a metabelian structure
// is witnessed, and noted).
struct CombFiniteReport {
    bool consistent = true;
    std::string violation; // sample point and witness when inconsistent
    std::vector<std::string> notes;
    bool lower_bound = true;

    std::string str() const;
};
CombFiniteReport comb_finite_report(const GroupSpec& spec, const std::vector<ExtPoint>& samples,
                                    int depth);

} // namespace pfl
