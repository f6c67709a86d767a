#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pfl/algebraic.hpp"
#include "pfl/fraclinear.hpp"

namespace pfl {

// The space acted on: the whole line, or a compact interval whose endpoints
// every element fixes.
struct Domain {
    enum class Kind { Line, Interval };
    Kind kind = Kind::Line;
    Rational alpha, omega; // Interval only, alpha < omega

    static Domain line() { return Domain{}; }
    static Domain interval(Rational alpha, Rational omega);

    ExtPoint inf() const;
    ExtPoint sup() const;
    bool operator==(const Domain& o) const;
    std::string str() const;
};

struct Piece {
    ExtPoint left, right; // left < right
    FracLinearMap map;
};

// A finite-piece orientation-preserving homeomorphism of its domain.
// Always stored canonically: pieces tile the domain, are continuous at the
// shared breakpoints, fix the domain ends, and no two adjacent pieces carry
// the same map.  Equality of elements is equality of canonical piece lists.
class PiecewiseMap {
  public:
    static PiecewiseMap identity(const Domain& dom);

    // Validates and canonicalizes; throws ValidationError with a distinct
    // kind for discontinuity, non-monotonicity, pole-in-piece, bad tiling
    // and unfixed endpoints.
    static PiecewiseMap from_pieces(const Domain& dom, std::vector<Piece> pieces);

    const Domain& domain() const { return domain_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    bool is_identity() const;

    Rational evaluate(const Rational& x) const;
    ExtPoint evaluate(const ExtPoint& x) const;

    PiecewiseMap inverse() const;

    // Interior breakpoints, ascending.
    std::vector<Rational> breakpoints() const;

    // The piece whose closed span contains x; when x is a shared breakpoint
    // the two candidates agree at x, and `prefer_right` picks which side's
    // map is returned.
    const Piece& piece_at(const ExtPoint& x, bool prefer_right = true) const;

    bool operator==(const PiecewiseMap& o) const;
    bool operator!=(const PiecewiseMap& o) const { return !(*this == o); }

    std::string str() const;

  private:
    PiecewiseMap() = default;
    Domain domain_;
    std::vector<Piece> pieces_;
};

int cmp(const PiecewiseMap& f, const PiecewiseMap& g);
inline bool operator<(const PiecewiseMap& f, const PiecewiseMap& g) { return cmp(f, g) < 0; }

// f then g; both over the same domain.
PiecewiseMap compose(const PiecewiseMap& f, const PiecewiseMap& g);

PiecewiseMap power(const PiecewiseMap& f, long n);

// The exact fixed set {x : x.f = x} within the domain closure, as maximal
// closed intervals plus isolated points, ascending and disjoint.  Isolated
// irrational fixed points are reported as quadratic-root markers, never
// approximated.
struct FixedSet {
    struct ClosedInterval {
        ExtPoint lo, hi;
    };
    using Entry = std::variant<ClosedInterval, Rational, QuadraticRoot>;
    std::vector<Entry> entries;

    bool empty() const { return entries.empty(); }
    AlgebraicPoint entry_lo(std::size_t i) const;
    AlgebraicPoint entry_hi(std::size_t i) const;
    bool contains(const Rational& x) const;
    std::string str() const;
};

FixedSet fixed_set(const PiecewiseMap& f);

// Maximal open intervals where x.f != x; finitely many.  Complementary to
// the fixed set within the domain.
struct OpenInterval {
    AlgebraicPoint lo, hi;
    std::string str() const;
};
std::vector<OpenInterval> support_components(const PiecewiseMap& f);

// Fixed set with the domain endpoints of an Interval domain removed (the
// endpoints are fixed by every element, so only interior data classifies).
FixedSet interior_fixed_set(const PiecewiseMap& f);

// Convenience: a rational point strictly inside (lo, hi).
Rational midpoint_inside(const ExtPoint& lo, const ExtPoint& hi);

} // namespace pfl
