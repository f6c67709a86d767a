#include "pfl/germ.hpp"

#include <algorithm>
#include <map>

#include "pfl/errors.hpp"

namespace pfl {

Germ germ_at(const PiecewiseMap& f, const ExtPoint& base, Side side) {
    const Domain& dom = f.domain();
    if (base == dom.inf() && side == Side::Left)
        throw GermError("no left germ at the lower end");
    if (base == dom.sup() && side == Side::Right)
        throw GermError("no right germ at the upper end");
    if (base < dom.inf() || base > dom.sup())
        throw GermError("germ base outside the domain");
    if (base.is_finite() && f.evaluate(base) != base)
        throw GermError("element does not fix " + base.str());
    const Piece& p = f.piece_at(base, side == Side::Right);
    return Germ{base, side, p.map};
}

Germ germ_product(const Germ& g1, const Germ& g2) {
    if (g1.base != g2.base || g1.side != g2.side)
        throw GermError("germ product across different base or side");
    return Germ{g1.base, g1.side, compose(g1.rep, g2.rep)};
}

namespace {

// exponent vector of a positive rational over the primes appearing in it
std::map<Int, long> prime_exponents(const Rational& q) {
    std::map<Int, long> e;
    for (auto& [p, k] : factor_positive(q.get_num()))
        if (p != 1) e[p] += k;
    for (auto& [p, k] : factor_positive(q.get_den()))
        if (p != 1) e[p] -= k;
    return e;
}

// rank over Q of an integer matrix, by fraction-free elimination
int matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rational factor = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

int slope_group_rank(const std::vector<Rational>& slopes) {
    std::vector<std::map<Int, long>> vecs;
    std::map<Int, std::size_t> prime_index;
    for (const Rational& s : slopes) {
        if (s <= 0) throw Error("slope_group_rank: nonpositive slope");
        auto e = prime_exponents(s);
        for (auto& [p, k] : e)
            if (k != 0 && !prime_index.count(p)) {
                std::size_t idx = prime_index.size();
                prime_index[p] = idx;
            }
        vecs.push_back(std::move(e));
    }
    if (prime_index.empty()) return 0;
    std::vector<std::vector<Rational>> m;
    for (auto& e : vecs) {
        std::vector<Rational> row(prime_index.size(), Rational(0));
        for (auto& [p, k] : e)
            if (k != 0) row[prime_index[p]] = Rational(k);
        m.push_back(std::move(row));
    }
    return matrix_rank(std::move(m));
}

std::string GermGroupReport::str() const {
    switch (kind) {
        case Kind::Trivial: return "trivial";
        case Kind::AbelianRank: return "abelian rank " + std::to_string(rank);
        case Kind::Nonabelian:
            return "nonabelian (witness germs " + std::to_string(witness.first) + "," +
                   std::to_string(witness.second) + ")";
        default: return "unsupported: " + reason;
    }
}

GermGroupReport germ_group_report(const std::vector<Germ>& germs, bool is_exhaustive) {
    GermGroupReport rep;
    rep.is_lower_bound = !is_exhaustive;
    for (std::size_t i = 0; i < germs.size(); ++i)
        for (std::size_t j = i + 1; j < germs.size(); ++j) {
            if (germs[i].base != germs[j].base || germs[i].side != germs[j].side)
                throw GermError("germ_group_report: mixed base or side");
            if (!commute(germs[i].rep, germs[j].rep)) {
                rep.kind = GermGroupReport::Kind::Nonabelian;
                rep.witness = {static_cast<int>(i), static_cast<int>(j)};
                rep.is_lower_bound = false; // nonabelian is definitive
                return rep;
            }
        }
    bool all_trivial = true, all_affine = true, all_translations = true;
    bool any_nonzero_translation = false;
    std::vector<Rational> slopes;
    for (const Germ& g : germs) {
        if (!g.trivial()) all_trivial = false;
        if (!g.rep.is_affine()) {
            all_affine = false;
            continue;
        }
        Rational s = g.rep.slope();
        slopes.push_back(s);
        if (s != 1)
            all_translations = false;
        else if (g.rep.shift() != 0)
            any_nonzero_translation = true;
    }
    if (germs.empty() || all_trivial) {
        rep.kind = GermGroupReport::Kind::Trivial;
        return rep;
    }
    if (!all_affine) {
        rep.kind = GermGroupReport::Kind::Unsupported;
        rep.reason = "mixed or projective germ class";
        return rep;
    }
    rep.kind = GermGroupReport::Kind::AbelianRank;
    if (all_translations) {
        // finitely generated subgroups of (Q,+) are cyclic; rank caps at 1
        rep.rank = any_nonzero_translation ? 1 : 0;
        rep.basis_note = "translation germs";
    } else {
        rep.rank = slope_group_rank(slopes);
        rep.basis_note = "affine germs, rank of the multiplicative slope group";
    }
    return rep;
}

std::pair<Germ, Germ> germ_quotient_image(const PiecewiseMap& f) {
    return {germ_at(f, f.domain().inf(), Side::Right),
            germ_at(f, f.domain().sup(), Side::Left)};
}

GermGroupReport germ_survey(const GroupSpec& spec, const ExtPoint& base, Side side, int depth,
                            std::vector<Word>* witness_words, std::vector<Germ>* germs_out) {
    std::vector<Germ> germs;
    std::vector<Word> words;
    std::vector<FracLinearMap> seen_reps;
    // Interior bases are only meaningful for words that fix them; the
    // enumeration simply skips the rest.
    long cap = 400000;
    for_each_reduced_word(spec, depth, cap, true, [&](const Word& w, const PiecewiseMap& e) {
        if (base.is_finite() && e.evaluate(base) != base) return true;
        Germ g = germ_at(e, base, side);
        if (std::find(seen_reps.begin(), seen_reps.end(), g.rep) != seen_reps.end()) return true;
        seen_reps.push_back(g.rep);
        germs.push_back(std::move(g));
        words.push_back(w);
        return true;
    });
    GermGroupReport rep = germ_group_report(germs, false);
    if (!spec.metadata.slope_primes.empty() &&
        (rep.kind == GermGroupReport::Kind::Trivial ||
         rep.kind == GermGroupReport::Kind::AbelianRank)) {
        rep.kind = GermGroupReport::Kind::AbelianRank;
        rep.rank = static_cast<int>(spec.metadata.slope_primes.size());
        rep.is_lower_bound = false;
        rep.basis_note = "rank declared by slope_primes metadata";
    }
    if (witness_words) *witness_words = std::move(words);
    if (germs_out) *germs_out = std::move(germs);
    return rep;
}

} // namespace pfl
