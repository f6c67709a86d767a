#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfl/algebraic.hpp"
#include "pfl/rational.hpp"

namespace pfl {

// t -> (a t + b)/(c t + d) with integer coefficients, det = ad - bc > 0.
// Canonical form: gcd(a,b,c,d) = 1 and (c > 0, or c = 0 and a > 0), so each
// orientation-preserving map has exactly one representation and equality is
// coefficient equality.
struct FracLinearMap {
    Int a{1}, b{0}, c{0}, d{1};

    static FracLinearMap identity() { return FracLinearMap{}; }

    // Throws ValidationError(NonMonotonic) when the determinant is <= 0.
    static FracLinearMap from_coeffs(Int a, Int b, Int c, Int d);

    // slope > 0: t -> slope * t + shift.
    static FracLinearMap affine(const Rational& slope, const Rational& shift);

    // The scaling t -> slope * (t - fix) + fix around a finite fixed point.
    static FracLinearMap scaling_at(const Rational& fix, const Rational& slope);

    Int det() const { return a * d - b * c; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    bool is_affine() const { return c == 0; }
    bool is_translation() const { return is_affine() && a == d; }

    Rational slope() const;      // affine only
    Rational shift() const;      // affine only

    std::optional<Rational> pole() const; // -d/c when c != 0

    Rational apply(const Rational& t) const;   // throws at the pole
    ExtPoint apply(const ExtPoint& t) const;

    FracLinearMap inverse() const;

    bool operator==(const FracLinearMap& o) const = default;
    std::string str() const;
};

// f then g (right-action order: x.(fg) = (x.f).g).
FracLinearMap compose(const FracLinearMap& f, const FracLinearMap& g);

bool commute(const FracLinearMap& f, const FracLinearMap& g);

int cmp(const FracLinearMap& f, const FracLinearMap& g);
inline bool operator<(const FracLinearMap& f, const FracLinearMap& g) { return cmp(f, g) < 0; }

// Exact fixed points of the map within the closed span [lo, hi].
struct PieceFixedPoints {
    bool identity = false;                 // every point fixed
    std::vector<Rational> rational_roots;  // ascending
    std::vector<QuadraticRoot> irrational_roots; // ascending
};
PieceFixedPoints fixed_points_in(const FracLinearMap& m, const ExtPoint& lo, const ExtPoint& hi);

} // namespace pfl
