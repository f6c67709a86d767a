#pragma once

#include <optional>
#include <utility>

#include "pfl/search.hpp"

namespace pfl {

enum class Side { Left, Right };
inline std::string side_str(Side s) { return s == Side::Left ? "left" : "right"; }

// One-sided behavior of an element at a fixed point or a domain end.  For
// finite-piece maps the adjacent piece's fractional-linear map determines
// the germ completely: two elements agreeing on a one-sided neighborhood
// carry the same rep.
struct Germ {
    ExtPoint base;
    Side side;
    FracLinearMap rep;

    bool trivial() const { return rep.is_identity(); }
    bool operator==(const Germ&) const = default;
};

// Sides valid at `base`: Right only at -inf / the left endpoint, Left only
// at +inf / the right endpoint, both at interior points.  For a finite base
// the element must fix it.
Germ germ_at(const PiecewiseMap& f, const ExtPoint& base, Side side);

// Group structure on germs: (g1 then g2) at the shared base and side.
Germ germ_product(const Germ& g1, const Germ& g2);

// Rank of the multiplicative subgroup of Q>0 generated by the slopes,
// computed as the rank of the integer matrix of prime-exponent vectors.
int slope_group_rank(const std::vector<Rational>& slopes);

struct GermGroupReport {
    enum class Kind { Trivial, AbelianRank, Nonabelian, Unsupported };
    Kind kind = Kind::Trivial;
    int rank = 0;                          // AbelianRank
    std::pair<int, int> witness{-1, -1};   // Nonabelian: indices into the germ list
    std::string reason;                    // Unsupported
    std::string basis_note;
    bool is_lower_bound = true;

    std::string str() const;
};

// Exact classification of a finite family of germs sharing base and side.
// Commutation is checked on canonical matrices, so "up to sign" is built in.
GermGroupReport germ_group_report(const std::vector<Germ>& germs, bool is_exhaustive);

// Germs at the two ends (left end first); f is compactly supported iff both
// are trivial.
std::pair<Germ, Germ> germ_quotient_image(const PiecewiseMap& f);

// Collects germs of all reduced words of length <= depth that fix the base
// and reports on the germ group.  A lower bound unless the metadata declares
// the slope group, in which case the declared rank is exact.  Also returns
// the witnessing words for replay when wanted.
GermGroupReport germ_survey(const GroupSpec& spec, const ExtPoint& base, Side side, int depth,
                            std::vector<Word>* witness_words = nullptr,
                            std::vector<Germ>* germs_out = nullptr);

} // namespace pfl
