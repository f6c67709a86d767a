#pragma once

#include "pfl/classify.hpp"

namespace pfl {

// Exact images of `start` under all reduced words of length <= depth,
// deduplicated and sorted.  Deterministic.
struct OrbitSample {
    Rational start;
    int depth = 0;
    std::vector<Rational> points;
};
OrbitSample orbit_sample(const GroupSpec& spec, const Rational& start, int depth);

// Largest gap between consecutive sample points (and the window edges)
// inside [lo, hi]; the window length when the sample misses the window.
struct DensityReport {
    Rational window_lo, window_hi;
    Rational max_gap;
    long point_count = 0;
};
DensityReport density_report(const OrbitSample& sample, const Rational& lo, const Rational& hi);

// Empirical minimality probe: every start's orbit must fill the core window
// of its orbital with max gap <= epsilon.  The epsilon/depth pair is a
// calibration constant reported as such, never a proof.
struct MinimalityProbe {
    bool pass = false;
    Rational worst_gap;
    Rational worst_start;
    Rational window_lo, window_hi;
    std::string str() const;
};
MinimalityProbe minimality_probe(const GroupSpec& spec, const std::vector<Rational>& starts,
                                 int depth, const Rational& epsilon);

} // namespace pfl
