#include "pfl/classify.hpp"

#include <algorithm>
#include <cassert>

#include "pfl/errors.hpp"

namespace pfl {

std::string ElementType::tag_str(Tag t) {
    switch (t) {
        case Tag::Identity: return "identity";
        case Tag::CompactlySupported: return "compactly-supported";
        case Tag::TypeA: return "type-A";
        case Tag::TypeB: return "type-B";
        case Tag::TypeC: return "type-C";
        default: return "fully-supported";
    }
}

std::string ElementType::str() const {
    std::string out = tag_str(tag);
    if (tag == Tag::TypeC) out += " r=" + r->str() + " s=" + s->str();
    return out;
}

ElementType classify_element(const PiecewiseMap& f) {
    ElementType t;
    if (f.is_identity()) {
        t.tag = ElementType::Tag::Identity;
        return t;
    }
    auto [gl, gr] = germ_quotient_image(f);
    bool lt = gl.trivial(), rt = gr.trivial();
    if (lt && rt) {
        t.tag = ElementType::Tag::CompactlySupported;
        return t;
    }
    if (rt) {
        // trivial germ at the upper end, nontrivial at the lower end: a
        // finite-piece map then fixes nothing on some lower ray, so the
        // germ data alone decides the tag
        t.tag = ElementType::Tag::TypeA;
        return t;
    }
    if (lt) {
        t.tag = ElementType::Tag::TypeB;
        return t;
    }
    FixedSet fs = interior_fixed_set(f);
    if (fs.empty()) {
        t.tag = ElementType::Tag::FullySupported;
        return t;
    }
    t.tag = ElementType::Tag::TypeC;
    t.r = fs.entry_lo(0);
    t.s = fs.entry_hi(fs.entries.size() - 1);
    return t;
}

std::string OrbitalDecomposition::str() const {
    std::string s;
    for (const Part& p : parts) {
        if (!s.empty()) s += " ";
        s += std::string(p.orbital ? "orbital" : "fixed") + "[" + p.lo.str() + "," + p.hi.str() +
             "]";
    }
    return s.empty() ? "<empty>" : s;
}

OrbitalDecomposition group_orbitals(const GroupSpec& spec) {
    // union of generator supports, merged by an exact sweep
    std::vector<OpenInterval> comps;
    for (const PiecewiseMap& g : spec.generators)
        for (OpenInterval& c : support_components(g)) comps.push_back(std::move(c));
    std::sort(comps.begin(), comps.end(), [](const OpenInterval& a, const OpenInterval& b) {
        int s = cmp(a.lo, b.lo);
        if (s != 0) return s < 0;
        return cmp(a.hi, b.hi) < 0;
    });
    std::vector<OpenInterval> merged;
    for (OpenInterval& c : comps) {
        if (!merged.empty() && cmp(c.lo, merged.back().hi) < 0) {
            if (cmp(c.hi, merged.back().hi) > 0) merged.back().hi = c.hi;
        } else {
            merged.push_back(std::move(c));
        }
    }
    OrbitalDecomposition out;
    AlgebraicPoint cursor{spec.domain.inf()};
    for (OpenInterval& c : merged) {
        if (cmp(cursor, c.lo) < 0)
            out.parts.push_back({cursor, c.lo, false});
        else if (cmp(cursor, c.lo) == 0 && !out.parts.empty())
            out.parts.push_back({cursor, c.lo, false}); // degenerate fixed point between orbitals
        out.parts.push_back({c.lo, c.hi, true});
        cursor = c.hi;
    }
    AlgebraicPoint end{spec.domain.sup()};
    if (cmp(cursor, end) < 0) out.parts.push_back({cursor, end, false});
    if (out.parts.empty()) out.parts.push_back({AlgebraicPoint{spec.domain.inf()}, end, false});
    return out;
}

std::string CombFiniteReport::str() const {
    std::string s = consistent ? "consistent" : ("violated: " + violation);
    if (lower_bound) s += " (lower-bound data)";
    for (const std::string& n : notes) s += "; " + n;
    return s;
}

CombFiniteReport comb_finite_report(const GroupSpec& spec, const std::vector<ExtPoint>& samples,
                                    int depth) {
    CombFiniteReport rep;
    rep.notes.push_back("finitely generated by construction (" +
                        std::to_string(spec.generators.size()) + " generators)");
    rep.notes.push_back("finite-piece elements have finitely many support components");
    for (const ExtPoint& x : samples) {
        bool is_low_end = x == spec.domain.inf();
        bool is_high_end = x == spec.domain.sup();
        std::vector<Side> sides;
        if (!is_low_end) sides.push_back(Side::Left);
        if (!is_high_end) sides.push_back(Side::Right);
        for (Side side : sides) {
            std::vector<Germ> germs;
            GermGroupReport g = germ_survey(spec, x, side, depth, nullptr, &germs);
            if (g.kind != GermGroupReport::Kind::Nonabelian) continue;
            if (is_low_end || is_high_end) {
                // end germ groups only need to be solvable for the
                // analyses downstream; witness metabelian structure
                bool metabelian = true;
                std::vector<FracLinearMap> comms;
                for (std::size_t i = 0; i < germs.size(); ++i)
                    for (std::size_t j = i + 1; j < germs.size(); ++j) {
                        const FracLinearMap &u = germs[i].rep, &v = germs[j].rep;
                        comms.push_back(compose(compose(compose(u.inverse(), v.inverse()), u), v));
                    }
                for (std::size_t i = 0; i < comms.size() && metabelian; ++i)
                    for (std::size_t j = i + 1; j < comms.size() && metabelian; ++j)
                        if (!commute(comms[i], comms[j])) metabelian = false;
                if (metabelian) {
                    rep.notes.push_back("nonabelian end germ group at " + x.str() +
                                        "; metabelian structure noted");
                    continue;
                }
            }
            rep.consistent = false;
            rep.violation = "nonabelian germ group at " + x.str() + " side " + side_str(side) +
                            " (witness germs " + std::to_string(g.witness.first) + "," +
                            std::to_string(g.witness.second) + ")";
            return rep;
        }
    }
    return rep;
}

} // namespace pfl
