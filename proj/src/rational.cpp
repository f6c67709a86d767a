#include "pfl/rational.hpp"

#include "pfl/errors.hpp"

namespace pfl {

Rational rat_of(const Int& num, const Int& den) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

static bool is_int_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

std::optional<Rational> try_parse_rational(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
        if (!is_int_token(tok)) return std::nullopt;
        return rat_of(Int(tok), 1);
    }
    std::string num = tok.substr(0, slash);
    std::string den = tok.substr(slash + 1);
    if (!is_int_token(num) || !is_int_token(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    return rat_of(Int(num), d);
}

std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

int sgn(const Rational& q) { return ::sgn(q); }
int sgn(const Int& n) { return ::sgn(n); }

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

std::vector<std::pair<Int, long>> factor_positive(const Int& n) {
    if (n <= 0) throw Error("factor_positive: nonpositive input");
    std::vector<std::pair<Int, long>> out;
    Int m = n;
    auto strip = [&](const Int& p) {
        long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= m && p < 1000000; p += (p % 6 == 5) ? 2 : 4)
        strip(p);
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
            throw Error("factor_positive: composite factor beyond trial bound: " + m.get_str());
        out.emplace_back(m, 1);
    }
    return out;
}

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rat_max(const Rational& a, const Rational& b) { return a > b ? a : b; }

} // namespace pfl
