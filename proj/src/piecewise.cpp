#include "pfl/piecewise.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "pfl/errors.hpp"

namespace pfl {

Domain Domain::interval(Rational alpha, Rational omega) {
    if (!(alpha < omega)) throw Error("interval domain needs alpha < omega");
    Domain d;
    d.kind = Kind::Interval;
    d.alpha = std::move(alpha);
    d.omega = std::move(omega);
    return d;
}

ExtPoint Domain::inf() const {
    return kind == Kind::Line ? ExtPoint::neg_inf() : ExtPoint::at(alpha);
}

ExtPoint Domain::sup() const {
    return kind == Kind::Line ? ExtPoint::pos_inf() : ExtPoint::at(omega);
}

bool Domain::operator==(const Domain& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Line) return true;
    return alpha == o.alpha && omega == o.omega;
}

std::string Domain::str() const {
    if (kind == Kind::Line) return "line";
    return "interval " + rat_str(alpha) + " " + rat_str(omega);
}

Rational midpoint_inside(const ExtPoint& lo, const ExtPoint& hi) {
    if (!(lo < hi)) throw Error("midpoint_inside: empty interval");
    if (lo.is_finite() && hi.is_finite()) return (lo.value + hi.value) / 2;
    if (lo.is_finite()) return lo.value + 1;
    if (hi.is_finite()) return hi.value - 1;
    return Rational(0);
}

PiecewiseMap PiecewiseMap::identity(const Domain& dom) {
    PiecewiseMap f;
    f.domain_ = dom;
    f.pieces_.push_back(Piece{dom.inf(), dom.sup(), FracLinearMap::identity()});
    return f;
}

static void check_pole_free(const Piece& p) {
    auto pole = p.map.pole();
    if (!pole) return;
    ExtPoint q = ExtPoint::at(*pole);
    if (p.left <= q && q <= p.right)
        throw ValidationError(ValidationError::Kind::PoleInPiece,
                              "pole " + rat_str(*pole) + " inside piece [" + p.left.str() + ", " +
                                  p.right.str() + "]");
}

PiecewiseMap PiecewiseMap::from_pieces(const Domain& dom, std::vector<Piece> pieces) {
    if (pieces.empty())
        throw ValidationError(ValidationError::Kind::Empty, "empty piece list");
    for (const Piece& p : pieces) {
        if (!(p.left < p.right))
            throw ValidationError(ValidationError::Kind::Tiling, "piece with left >= right");
        check_pole_free(p);
    }
    if (pieces.front().left != dom.inf() || pieces.back().right != dom.sup())
        throw ValidationError(ValidationError::Kind::Tiling,
                              "pieces do not span the domain " + dom.str());
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        if (pieces[i].right != pieces[i + 1].left)
            throw ValidationError(ValidationError::Kind::Tiling,
                                  "gap or overlap at " + pieces[i].right.str());
        if (!pieces[i].right.is_finite())
            throw ValidationError(ValidationError::Kind::Tiling, "interior breakpoint at infinity");
        const Rational& bp = pieces[i].right.value;
        if (pieces[i].map.apply(bp) != pieces[i + 1].map.apply(bp))
            throw ValidationError(ValidationError::Kind::Discontinuity,
                                  "discontinuity at breakpoint " + rat_str(bp));
    }
    // Endpoints fixed: +-inf setwise for Line (each end follows from
    // orientation), alpha and omega pointwise for Interval.
    const Piece& first = pieces.front();
    const Piece& last = pieces.back();
    if (first.map.apply(dom.inf()) != dom.inf() || last.map.apply(dom.sup()) != dom.sup())
        throw ValidationError(ValidationError::Kind::EndpointNotFixed,
                              "domain endpoints are not fixed");
    // Merge adjacent pieces carrying the same map.
    std::vector<Piece> merged;
    for (Piece& p : pieces) {
        if (!merged.empty() && merged.back().map == p.map)
            merged.back().right = p.right;
        else
            merged.push_back(std::move(p));
    }
    PiecewiseMap f;
    f.domain_ = dom;
    f.pieces_ = std::move(merged);
    return f;
}

bool PiecewiseMap::is_identity() const {
    return pieces_.size() == 1 && pieces_[0].map.is_identity();
}

const Piece& PiecewiseMap::piece_at(const ExtPoint& x, bool prefer_right) const {
    if (x < pieces_.front().left || x > pieces_.back().right)
        throw Error("evaluation outside the domain at " + x.str());
    // Few pieces in practice; linear scan keeps the boundary rules obvious.
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        if (x < p.left || x > p.right) continue;
        if (x == p.right && prefer_right && i + 1 < pieces_.size()) continue;
        return p;
    }
    return pieces_.back();
}

Rational PiecewiseMap::evaluate(const Rational& x) const {
    return piece_at(ExtPoint::at(x)).map.apply(x);
}

ExtPoint PiecewiseMap::evaluate(const ExtPoint& x) const {
    return piece_at(x).map.apply(x);
}

PiecewiseMap PiecewiseMap::inverse() const {
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const Piece& p : pieces_)
        out.push_back(Piece{p.map.apply(p.left), p.map.apply(p.right), p.map.inverse()});
    return from_pieces(domain_, std::move(out));
}

std::vector<Rational> PiecewiseMap::breakpoints() const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
        out.push_back(pieces_[i].right.value);
    return out;
}

bool PiecewiseMap::operator==(const PiecewiseMap& o) const {
    return cmp(*this, o) == 0;
}

int cmp(const PiecewiseMap& f, const PiecewiseMap& g) {
    if (int s = f.domain().kind == g.domain().kind
                    ? 0
                    : (f.domain().kind == Domain::Kind::Line ? -1 : 1);
        s != 0)
        return s;
    if (f.domain().kind == Domain::Kind::Interval) {
        if (f.domain().alpha != g.domain().alpha)
            return f.domain().alpha < g.domain().alpha ? -1 : 1;
        if (f.domain().omega != g.domain().omega)
            return f.domain().omega < g.domain().omega ? -1 : 1;
    }
    const auto& fp = f.pieces();
    const auto& gp = g.pieces();
    if (fp.size() != gp.size()) return fp.size() < gp.size() ? -1 : 1;
    for (std::size_t i = 0; i < fp.size(); ++i) {
        if (int s = cmp(fp[i].left, gp[i].left); s != 0) return s;
        if (int s = cmp(fp[i].right, gp[i].right); s != 0) return s;
        if (int s = cmp(fp[i].map, gp[i].map); s != 0) return s;
    }
    return 0;
}

std::string PiecewiseMap::str() const {
    std::string s = domain_.str() + " {";
    for (const Piece& p : pieces_)
        s += " [" + p.left.str() + "," + p.right.str() + "]" + p.map.str();
    return s + " }";
}

PiecewiseMap compose(const PiecewiseMap& f, const PiecewiseMap& g) {
    if (!(f.domain() == g.domain()))
        throw DomainMismatchError("compose: domain mismatch: " + f.domain().str() + " vs " +
                                  g.domain().str());
    PiecewiseMap finv = f.inverse();
    std::set<Rational> cuts;
    for (const Rational& q : f.breakpoints()) cuts.insert(q);
    for (const Rational& q : g.breakpoints()) cuts.insert(finv.evaluate(q));
    std::vector<ExtPoint> bounds;
    bounds.push_back(f.domain().inf());
    for (const Rational& q : cuts) bounds.push_back(ExtPoint::at(q));
    bounds.push_back(f.domain().sup());
    std::vector<Piece> out;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        Rational probe = midpoint_inside(bounds[i], bounds[i + 1]);
        const FracLinearMap& mf = f.piece_at(ExtPoint::at(probe)).map;
        const FracLinearMap& mg = g.piece_at(ExtPoint::at(mf.apply(probe))).map;
        out.push_back(Piece{bounds[i], bounds[i + 1], compose(mf, mg)});
    }
    return PiecewiseMap::from_pieces(f.domain(), std::move(out));
}

PiecewiseMap power(const PiecewiseMap& f, long n) {
    PiecewiseMap base = n < 0 ? f.inverse() : f;
    long k = n < 0 ? -n : n;
    PiecewiseMap acc = PiecewiseMap::identity(f.domain());
    for (long i = 0; i < k; ++i) acc = compose(acc, base);
    return acc;
}

AlgebraicPoint FixedSet::entry_lo(std::size_t i) const {
    const Entry& e = entries[i];
    if (std::holds_alternative<ClosedInterval>(e))
        return AlgebraicPoint{std::get<ClosedInterval>(e).lo};
    if (std::holds_alternative<Rational>(e))
        return AlgebraicPoint::at(std::get<Rational>(e));
    return AlgebraicPoint{std::get<QuadraticRoot>(e)};
}

AlgebraicPoint FixedSet::entry_hi(std::size_t i) const {
    const Entry& e = entries[i];
    if (std::holds_alternative<ClosedInterval>(e))
        return AlgebraicPoint{std::get<ClosedInterval>(e).hi};
    return entry_lo(i);
}

bool FixedSet::contains(const Rational& x) const {
    AlgebraicPoint p = AlgebraicPoint::at(x);
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (cmp(entry_lo(i), p) <= 0 && cmp(p, entry_hi(i)) <= 0) return true;
    return false;
}

std::string FixedSet::str() const {
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += " ";
        const Entry& e = entries[i];
        if (std::holds_alternative<ClosedInterval>(e)) {
            const auto& iv = std::get<ClosedInterval>(e);
            s += (iv.lo.is_finite() ? "[" : "(") + iv.lo.str() + "," + iv.hi.str() +
                 (iv.hi.is_finite() ? "]" : ")");
        } else if (std::holds_alternative<Rational>(e)) {
            s += "{" + rat_str(std::get<Rational>(e)) + "}";
        } else {
            s += "{" + std::get<QuadraticRoot>(e).str() + "}";
        }
    }
    return s.empty() ? "{}" : s;
}

FixedSet fixed_set(const PiecewiseMap& f) {
    FixedSet out;
    auto push_point = [&](const Rational& q) {
        // absorb a point touching the end of the previous closed interval
        if (!out.entries.empty() &&
            std::holds_alternative<FixedSet::ClosedInterval>(out.entries.back())) {
            const auto& iv = std::get<FixedSet::ClosedInterval>(out.entries.back());
            if (iv.hi == ExtPoint::at(q)) return;
        }
        if (!out.entries.empty() && std::holds_alternative<Rational>(out.entries.back()) &&
            std::get<Rational>(out.entries.back()) == q)
            return;
        out.entries.push_back(q);
    };
    for (const Piece& p : f.pieces()) {
        PieceFixedPoints fp = fixed_points_in(p.map, p.left, p.right);
        if (fp.identity) {
            if (!out.entries.empty() &&
                std::holds_alternative<Rational>(out.entries.back()) &&
                ExtPoint::at(std::get<Rational>(out.entries.back())) == p.left) {
                // isolated point at the seam extends into the interval
                out.entries.pop_back();
            }
            if (!out.entries.empty() &&
                std::holds_alternative<FixedSet::ClosedInterval>(out.entries.back()) &&
                std::get<FixedSet::ClosedInterval>(out.entries.back()).hi == p.left) {
                std::get<FixedSet::ClosedInterval>(out.entries.back()).hi = p.right;
            } else {
                out.entries.push_back(FixedSet::ClosedInterval{p.left, p.right});
            }
            continue;
        }
        // merge roots of the two kinds in ascending order
        std::size_t ri = 0, ii = 0;
        while (ri < fp.rational_roots.size() || ii < fp.irrational_roots.size()) {
            bool take_rational;
            if (ri == fp.rational_roots.size())
                take_rational = false;
            else if (ii == fp.irrational_roots.size())
                take_rational = true;
            else
                take_rational =
                    fp.irrational_roots[ii].cmp_rational(fp.rational_roots[ri]) > 0;
            if (take_rational) {
                push_point(fp.rational_roots[ri++]);
            } else {
                out.entries.push_back(fp.irrational_roots[ii++]);
            }
        }
    }
    return out;
}

FixedSet interior_fixed_set(const PiecewiseMap& f) {
    FixedSet fs = fixed_set(f);
    if (f.domain().kind == Domain::Kind::Line) return fs;
    // Interval endpoints are fixed by every element; drop them as isolated
    // points so that only interior data remains.  Intervals of fixed points
    // touching an endpoint keep their closure (their interior part is what
    // matters to callers, and it is nonempty either way).
    ExtPoint a = f.domain().inf(), w = f.domain().sup();
    FixedSet out;
    for (auto& e : fs.entries) {
        if (std::holds_alternative<Rational>(e)) {
            const Rational& q = std::get<Rational>(e);
            if (ExtPoint::at(q) == a || ExtPoint::at(q) == w) continue;
        }
        out.entries.push_back(e);
    }
    return out;
}

std::string OpenInterval::str() const {
    return "(" + lo.str() + "," + hi.str() + ")";
}

std::vector<OpenInterval> support_components(const PiecewiseMap& f) {
    FixedSet fs = fixed_set(f);
    std::vector<OpenInterval> out;
    AlgebraicPoint cursor{f.domain().inf()};
    for (std::size_t i = 0; i < fs.entries.size(); ++i) {
        AlgebraicPoint lo = fs.entry_lo(i);
        if (cmp(cursor, lo) < 0) out.push_back(OpenInterval{cursor, lo});
        cursor = fs.entry_hi(i);
    }
    AlgebraicPoint end{f.domain().sup()};
    if (cmp(cursor, end) < 0) out.push_back(OpenInterval{cursor, end});
    return out;
}

} // namespace pfl
