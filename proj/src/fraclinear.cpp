#include "pfl/fraclinear.hpp"

#include <algorithm>

#include "pfl/errors.hpp"

namespace pfl {

FracLinearMap FracLinearMap::from_coeffs(Int a, Int b, Int c, Int d) {
    if (a * d - b * c <= 0)
        throw ValidationError(ValidationError::Kind::NonMonotonic,
                              "orientation violation: determinant <= 0");
    Int g = gcd(gcd(abs(a), abs(b)), gcd(abs(c), abs(d)));
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
        d /= g;
    }
    if (c < 0 || (c == 0 && a < 0)) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    return FracLinearMap{a, b, c, d};
}

FracLinearMap FracLinearMap::affine(const Rational& slope, const Rational& shift) {
    if (slope <= 0)
        throw ValidationError(ValidationError::Kind::NonMonotonic, "affine slope must be positive");
    // (p/q) t + (r/s)  ->  (ps t + qr) / (qs)
    Int p = slope.get_num(), q = slope.get_den();
    Int r = shift.get_num(), s = shift.get_den();
    return from_coeffs(p * s, q * r, 0, q * s);
}

FracLinearMap FracLinearMap::scaling_at(const Rational& fix, const Rational& slope) {
    return affine(slope, fix * (Rational(1) - slope));
}

Rational FracLinearMap::slope() const {
    if (!is_affine()) throw Error("slope of a non-affine map");
    return rat_of(a, d);
}

Rational FracLinearMap::shift() const {
    if (!is_affine()) throw Error("shift of a non-affine map");
    return rat_of(b, d);
}

std::optional<Rational> FracLinearMap::pole() const {
    if (c == 0) return std::nullopt;
    return rat_of(-d, c);
}

Rational FracLinearMap::apply(const Rational& t) const {
    Rational den = Rational(c) * t + Rational(d);
    if (den == 0) throw Error("evaluation at the pole of " + str());
    return (Rational(a) * t + Rational(b)) / den;
}

ExtPoint FracLinearMap::apply(const ExtPoint& t) const {
    switch (t.kind) {
        case ExtPoint::Kind::Finite: return ExtPoint::at(apply(t.value));
        case ExtPoint::Kind::PosInf:
            return c != 0 ? ExtPoint::at(rat_of(a, c)) : ExtPoint::pos_inf();
        default:
            return c != 0 ? ExtPoint::at(rat_of(a, c)) : ExtPoint::neg_inf();
    }
}

FracLinearMap FracLinearMap::inverse() const {
    return from_coeffs(d, -b, -c, a);
}

std::string FracLinearMap::str() const {
    return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str() + ")";
}

FracLinearMap compose(const FracLinearMap& f, const FracLinearMap& g) {
    // matrix(g) * matrix(f): apply f first
    return FracLinearMap::from_coeffs(g.a * f.a + g.b * f.c, g.a * f.b + g.b * f.d,
                                      g.c * f.a + g.d * f.c, g.c * f.b + g.d * f.d);
}

bool commute(const FracLinearMap& f, const FracLinearMap& g) {
    return compose(f, g) == compose(g, f);
}

int cmp(const FracLinearMap& f, const FracLinearMap& g) {
    const Int* lhs[4] = {&f.a, &f.b, &f.c, &f.d};
    const Int* rhs[4] = {&g.a, &g.b, &g.c, &g.d};
    for (int i = 0; i < 4; ++i) {
        int s = ::cmp(*lhs[i], *rhs[i]);
        if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
}

static bool in_closed(const ExtPoint& lo, const ExtPoint& hi, const Rational& q) {
    ExtPoint p = ExtPoint::at(q);
    return lo <= p && p <= hi;
}

static bool in_closed(const ExtPoint& lo, const ExtPoint& hi, const QuadraticRoot& r) {
    AlgebraicPoint p{r};
    return cmp(AlgebraicPoint{lo}, p) <= 0 && cmp(p, AlgebraicPoint{hi}) <= 0;
}

PieceFixedPoints fixed_points_in(const FracLinearMap& m, const ExtPoint& lo, const ExtPoint& hi) {
    PieceFixedPoints out;
    if (m.is_identity()) {
        out.identity = true;
        return out;
    }
    if (m.c == 0) {
        // a t + b = d t  =>  t = b / (d - a)
        if (m.a == m.d) return out; // nontrivial translation
        Rational t = rat_of(m.b, m.d - m.a);
        if (in_closed(lo, hi, t)) out.rational_roots.push_back(t);
        return out;
    }
    // c t^2 + (d - a) t - b = 0
    Int A = m.c, B = m.d - m.a, C = -m.b;
    Int D = B * B - 4 * A * C;
    if (D < 0) return out;
    Int sq;
    if (is_perfect_square(D, &sq)) {
        // rational roots (-B +- sq) / (2A); equal when D == 0
        std::vector<Rational> roots;
        roots.push_back(rat_of(-B - sq, 2 * A));
        if (sq != 0) roots.push_back(rat_of(-B + sq, 2 * A));
        std::sort(roots.begin(), roots.end());
        for (const auto& t : roots)
            if (in_closed(lo, hi, t)) out.rational_roots.push_back(t);
        return out;
    }
    for (int s : {-1, +1}) {
        QuadraticRoot r = QuadraticRoot::make(A, B, C, s);
        if (in_closed(lo, hi, r)) out.irrational_roots.push_back(r);
    }
    // A > 0 after canonicalization inside make(), so -root < +root already
    return out;
}

} // namespace pfl
