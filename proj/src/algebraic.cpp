#include "pfl/algebraic.hpp"

#include <cassert>

#include "pfl/errors.hpp"

namespace pfl {

std::string ExtPoint::str() const {
    switch (kind) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        default: return rat_str(value);
    }
}

int cmp(const ExtPoint& a, const ExtPoint& b) {
    int ka = static_cast<int>(a.kind), kb = static_cast<int>(b.kind);
    if (ka != kb) return ka < kb ? -1 : 1;
    if (a.kind != ExtPoint::Kind::Finite) return 0;
    return ::cmp(a.value, b.value) < 0 ? -1 : (a.value == b.value ? 0 : 1);
}

int sign_with_radical(const Rational& q0, const Rational& q1, const Int& D) {
    if (q1 == 0) return sgn(q0);
    if (q0 == 0) return sgn(q1);
    int s0 = sgn(q0), s1 = sgn(q1);
    if (s0 == s1) return s0;
    // opposite signs: |q0| vs |q1|*sqrt(D); equality would make sqrt(D) rational
    Rational lhs = q0 * q0;
    Rational rhs = q1 * q1 * Rational(D);
    assert(lhs != rhs && "radical comparison degenerate: D is a perfect square");
    int t = lhs > rhs ? 1 : -1;
    return s0 > 0 ? t : -t;
}

int sign_with_two_radicals(const Rational& q0, const Rational& q1, const Int& D1,
                           const Rational& q2, const Int& D2) {
    if (q1 == 0) return sign_with_radical(q0, q2, D2);
    if (q2 == 0) return sign_with_radical(q0, q1, D1);
    if (D1 == D2) return sign_with_radical(q0, q1 + q2, D1);
    // L = q0 + q1*sqrt(D1), M = q2*sqrt(D2); both nonzero
    int sL = sign_with_radical(q0, q1, D1);
    int sM = sgn(q2);
    if (sL == sM) return sL;
    // sign(L + M) with opposite signs: compare L^2 against M^2.
    // L^2 - M^2 = (q0^2 + q1^2 D1 - q2^2 D2) + (2 q0 q1) sqrt(D1)
    Rational u = q0 * q0 + q1 * q1 * Rational(D1) - q2 * q2 * Rational(D2);
    if (q0 == 0) {
        int t = sgn(u);
        if (t == 0) return 0; // commensurable radicals, exact cancellation
        return sL > 0 ? t : -t;
    }
    int t = sign_with_radical(u, 2 * q0 * q1, D1);
    assert(t != 0);
    return sL > 0 ? t : -t;
}

QuadraticRoot QuadraticRoot::make(Int A, Int B, Int C, int root_sign) {
    if (A == 0) throw Error("QuadraticRoot: A = 0");
    Int g = gcd(gcd(abs(A), abs(B)), abs(C));
    if (g > 1) {
        A /= g;
        B /= g;
        C /= g;
    }
    if (A < 0) {
        A = -A;
        B = -B;
        C = -C;
        // negating the polynomial keeps the same roots
    }
    QuadraticRoot r{A, B, C, root_sign};
    Int d = r.disc();
    if (d <= 0 || is_perfect_square(d))
        throw Error("QuadraticRoot: discriminant is not a positive non-square");
    return r;
}

int QuadraticRoot::cmp_rational(const Rational& q) const {
    // root - q = (-B/(2A) - q) + (root_sign/(2A)) sqrt(D)
    Rational twoA = Rational(2 * A);
    Rational q0 = Rational(-B) / twoA - q;
    Rational q1 = Rational(root_sign) / twoA;
    return sign_with_radical(q0, q1, disc());
}

int QuadraticRoot::cmp(const QuadraticRoot& o) const {
    Rational twoA1 = Rational(2 * A), twoA2 = Rational(2 * o.A);
    Rational q0 = Rational(-B) / twoA1 + Rational(o.B) / twoA2;
    Rational q1 = Rational(root_sign) / twoA1;
    Rational q2 = Rational(-o.root_sign) / twoA2;
    return sign_with_two_radicals(q0, q1, disc(), q2, o.disc());
}

std::string QuadraticRoot::str() const {
    std::string s = "quadroot(";
    s += A.get_str() + "," + B.get_str() + "," + C.get_str() + ",";
    s += (root_sign > 0 ? "+" : "-");
    s += ")";
    return s;
}

bool AlgebraicPoint::is_rational() const {
    return is_ext() && ext().is_finite();
}

Rational AlgebraicPoint::rational() const {
    if (!is_rational())
        throw IrrationalPointError("rational point required, got " + str());
    return ext().value;
}

std::string AlgebraicPoint::str() const {
    if (is_ext()) return ext().str();
    return quad().str();
}

int cmp(const AlgebraicPoint& a, const AlgebraicPoint& b) {
    if (a.is_ext() && b.is_ext()) return cmp(a.ext(), b.ext());
    if (a.is_ext()) {
        // quad on the right; quadratic roots are finite
        if (a.ext().is_neg_inf()) return -1;
        if (a.ext().is_pos_inf()) return 1;
        return -b.quad().cmp_rational(a.ext().value);
    }
    if (b.is_ext()) {
        if (b.ext().is_neg_inf()) return 1;
        if (b.ext().is_pos_inf()) return -1;
        return a.quad().cmp_rational(b.ext().value);
    }
    return a.quad().cmp(b.quad());
}

// Refine a bracketing rational interval around a finite AlgebraicPoint.
static void finite_bounds(const AlgebraicPoint& p, Rational& lo, Rational& hi) {
    if (p.is_rational()) {
        lo = hi = p.rational();
        return;
    }
    const QuadraticRoot& r = p.quad();
    // Cauchy-style bound: |root| <= 1 + max(|B|,|C|)/A
    Rational m = Rational(1) + Rational(rat_max(Rational(abs(r.B)), Rational(abs(r.C)))) / Rational(r.A);
    lo = -m;
    hi = m;
    while (hi - lo > Rational(1, 1024)) {
        Rational mid = (lo + hi) / 2;
        if (r.cmp_rational(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
}

static void refine_bracket(const AlgebraicPoint& p, Rational& lo, Rational& hi) {
    if (p.is_rational()) return;
    Rational mid = (lo + hi) / 2;
    if (p.quad().cmp_rational(mid) > 0)
        lo = mid;
    else
        hi = mid;
}

Rational rational_between(const AlgebraicPoint& a, const AlgebraicPoint& b) {
    if (!(cmp(a, b) < 0)) throw Error("rational_between: empty interval");
    bool a_inf = a.is_ext() && !a.ext().is_finite();
    bool b_inf = b.is_ext() && !b.ext().is_finite();
    if (a_inf && b_inf) return Rational(0);
    if (a_inf) {
        Rational lo, hi;
        finite_bounds(b, lo, hi);
        return lo - 1;
    }
    if (b_inf) {
        Rational lo, hi;
        finite_bounds(a, lo, hi);
        return hi + 1;
    }
    Rational alo, ahi, blo, bhi;
    finite_bounds(a, alo, ahi);
    finite_bounds(b, blo, bhi);
    // Shrink the brackets until they separate; degenerate brackets of
    // rational points never move, irrational brackets halve each round.
    while (!(ahi < blo)) {
        refine_bracket(a, alo, ahi);
        refine_bracket(b, blo, bhi);
    }
    return (ahi + blo) / 2;
}

} // namespace pfl
