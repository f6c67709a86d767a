#pragma once

#include <string>
#include <variant>

#include "pfl/rational.hpp"

namespace pfl {

// A point of the extended line: -inf < every rational < +inf.
struct ExtPoint {
    enum class Kind { NegInf = 0, Finite = 1, PosInf = 2 };
    Kind kind = Kind::Finite;
    Rational value; // meaningful only when Finite

    static ExtPoint neg_inf() { return ExtPoint{Kind::NegInf, Rational()}; }
    static ExtPoint pos_inf() { return ExtPoint{Kind::PosInf, Rational()}; }
    static ExtPoint at(Rational v) { return ExtPoint{Kind::Finite, std::move(v)}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_neg_inf() const { return kind == Kind::NegInf; }
    bool is_pos_inf() const { return kind == Kind::PosInf; }

    std::string str() const;
};

int cmp(const ExtPoint& a, const ExtPoint& b);
inline bool operator==(const ExtPoint& a, const ExtPoint& b) { return cmp(a, b) == 0; }
inline bool operator!=(const ExtPoint& a, const ExtPoint& b) { return cmp(a, b) != 0; }
inline bool operator<(const ExtPoint& a, const ExtPoint& b) { return cmp(a, b) < 0; }
inline bool operator<=(const ExtPoint& a, const ExtPoint& b) { return cmp(a, b) <= 0; }
inline bool operator>(const ExtPoint& a, const ExtPoint& b) { return cmp(a, b) > 0; }
inline bool operator>=(const ExtPoint& a, const ExtPoint& b) { return cmp(a, b) >= 0; }

// sign(q0 + q1*sqrt(D)) for D > 0 not a perfect square.
int sign_with_radical(const Rational& q0, const Rational& q1, const Int& D);

// sign(q0 + q1*sqrt(D1) + q2*sqrt(D2)); D1, D2 > 0 not perfect squares.
int sign_with_two_radicals(const Rational& q0, const Rational& q1, const Int& D1,
                           const Rational& q2, const Int& D2);

// The irrational root (-B + sign*sqrt(disc))/(2A) of A t^2 + B t + C = 0,
// stored exactly.  Canonical: gcd(A,B,C) = 1, A > 0, disc not a perfect
// square.  An irrational quadratic determines its primitive polynomial
// uniquely, so structural equality is value equality.
struct QuadraticRoot {
    Int A, B, C;
    int root_sign; // -1 or +1

    static QuadraticRoot make(Int A, Int B, Int C, int root_sign);

    Int disc() const { return B * B - 4 * A * C; }
    int cmp_rational(const Rational& q) const; // sign(root - q)
    int cmp(const QuadraticRoot& o) const;     // sign(this - o)
    std::string str() const;
    bool operator==(const QuadraticRoot& o) const {
        return A == o.A && B == o.B && C == o.C && root_sign == o.root_sign;
    }
};

// A point that is either extended-rational or a quadratic irrational.
// Totally ordered, with exact comparisons throughout.
struct AlgebraicPoint {
    std::variant<ExtPoint, QuadraticRoot> v;

    AlgebraicPoint() : v(ExtPoint::at(Rational())) {}
    AlgebraicPoint(ExtPoint p) : v(std::move(p)) {}
    AlgebraicPoint(QuadraticRoot r) : v(std::move(r)) {}
    static AlgebraicPoint at(Rational q) { return AlgebraicPoint(ExtPoint::at(std::move(q))); }

    bool is_rational() const;           // finite rational
    bool is_ext() const { return std::holds_alternative<ExtPoint>(v); }
    const ExtPoint& ext() const { return std::get<ExtPoint>(v); }
    const QuadraticRoot& quad() const { return std::get<QuadraticRoot>(v); }

    // Finite rational value; throws IrrationalPointError otherwise.
    Rational rational() const;

    std::string str() const;
};

int cmp(const AlgebraicPoint& a, const AlgebraicPoint& b);
inline bool operator==(const AlgebraicPoint& a, const AlgebraicPoint& b) { return cmp(a, b) == 0; }
inline bool operator<(const AlgebraicPoint& a, const AlgebraicPoint& b) { return cmp(a, b) < 0; }
inline bool operator<=(const AlgebraicPoint& a, const AlgebraicPoint& b) { return cmp(a, b) <= 0; }
inline bool operator>(const AlgebraicPoint& a, const AlgebraicPoint& b) { return cmp(a, b) > 0; }
inline bool operator>=(const AlgebraicPoint& a, const AlgebraicPoint& b) { return cmp(a, b) >= 0; }

// A rational strictly between a and b (requires a < b).  Works with
// infinite and irrational bounds.
Rational rational_between(const AlgebraicPoint& a, const AlgebraicPoint& b);

} // namespace pfl
