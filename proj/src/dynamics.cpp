#include "pfl/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "pfl/errors.hpp"

namespace pfl {

OrbitSample orbit_sample(const GroupSpec& spec, const Rational& start, int depth) {
    if (!(spec.domain.inf() < ExtPoint::at(start) && ExtPoint::at(start) < spec.domain.sup()))
        throw PreconditionError("orbit start outside the domain interior");
    std::vector<PiecewiseMap> maps;
    for (const PiecewiseMap& g : spec.generators) {
        maps.push_back(g);
        maps.push_back(g.inverse());
    }
    std::map<Rational, int> depth_of;
    std::deque<Rational> queue;
    depth_of[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        Rational p = std::move(queue.front());
        queue.pop_front();
        int d = depth_of[p];
        if (d >= depth) continue;
        for (const PiecewiseMap& m : maps) {
            Rational q = m.evaluate(p);
            if (depth_of.count(q)) continue;
            depth_of[q] = d + 1;
            queue.push_back(std::move(q));
        }
    }
    OrbitSample out;
    out.start = start;
    out.depth = depth;
    out.points.reserve(depth_of.size());
    for (auto& [p, _] : depth_of) out.points.push_back(p);
    // std::map iterates in increasing order already
    return out;
}

DensityReport density_report(const OrbitSample& sample, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw PreconditionError("density window is empty");
    DensityReport rep;
    rep.window_lo = lo;
    rep.window_hi = hi;
    Rational prev = lo;
    Rational max_gap(0);
    for (const Rational& p : sample.points) {
        if (p < lo || p > hi) continue;
        ++rep.point_count;
        max_gap = rat_max(max_gap, p - prev);
        prev = p;
    }
    max_gap = rat_max(max_gap, hi - prev);
    rep.max_gap = max_gap;
    return rep;
}

std::string MinimalityProbe::str() const {
    std::string s = pass ? "empirical_pass" : "empirical_fail";
    s += " worst_gap=" + rat_str(worst_gap) + " at start=" + rat_str(worst_start);
    s += " window=[" + rat_str(window_lo) + "," + rat_str(window_hi) + "]";
    return s;
}

MinimalityProbe minimality_probe(const GroupSpec& spec, const std::vector<Rational>& starts,
                                 int depth, const Rational& epsilon) {
    if (starts.empty()) throw PreconditionError("minimality probe needs at least one start");
    OrbitalDecomposition dec = group_orbitals(spec);
    const OrbitalDecomposition::Part* orbital = nullptr;
    for (const auto& part : dec.parts) {
        if (!part.orbital) continue;
        bool all_in = true;
        for (const Rational& s : starts) {
            AlgebraicPoint p = AlgebraicPoint::at(s);
            if (!(cmp(part.lo, p) < 0 && cmp(p, part.hi) < 0)) all_in = false;
        }
        if (all_in) {
            orbital = &part;
            break;
        }
    }
    if (!orbital)
        throw PreconditionError("starts do not lie in a single orbital");
    // Core window: the middle half of a bounded orbital; for unbounded
    // orbitals, a unit margin around the starts, clipped to the orbital.
    Rational lo, hi;
    bool lo_fin = orbital->lo.is_ext() ? orbital->lo.ext().is_finite() : true;
    bool hi_fin = orbital->hi.is_ext() ? orbital->hi.ext().is_finite() : true;
    if (lo_fin && hi_fin && orbital->lo.is_rational() && orbital->hi.is_rational()) {
        Rational a = orbital->lo.rational(), b = orbital->hi.rational();
        Rational quarter = (b - a) / 4;
        lo = a + quarter;
        hi = b - quarter;
    } else {
        lo = *std::min_element(starts.begin(), starts.end()) - 1;
        hi = *std::max_element(starts.begin(), starts.end()) + 1;
        if (cmp(orbital->lo, AlgebraicPoint::at(lo)) >= 0)
            lo = rational_between(orbital->lo, AlgebraicPoint::at(hi));
        if (cmp(AlgebraicPoint::at(hi), orbital->hi) >= 0)
            hi = rational_between(AlgebraicPoint::at(lo), orbital->hi);
    }
    MinimalityProbe probe;
    probe.window_lo = lo;
    probe.window_hi = hi;
    probe.pass = true;
    probe.worst_gap = Rational(0);
    probe.worst_start = starts.front();
    for (const Rational& s : starts) {
        OrbitSample sample = orbit_sample(spec, s, depth);
        DensityReport rep = density_report(sample, lo, hi);
        if (rep.max_gap > probe.worst_gap) {
            probe.worst_gap = rep.max_gap;
            probe.worst_start = s;
        }
        if (rep.max_gap > epsilon) probe.pass = false;
    }
    return probe;
}

} // namespace pfl
