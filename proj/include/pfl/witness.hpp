#pragma once

#include "pfl/classify.hpp"
#include "pfl/search.hpp"

namespace pfl {

// Every witness re-verifies its defining relation exactly before it is
// returned; the recorded images make the verification replayable from the
// word alone.
struct VerifiedImage {
    std::string input;
    std::string image;
};

struct TransportWitness {
    Word word;
    std::vector<VerifiedImage> images;
    std::string path; // "recipe" or "search-fallback"
};

// Certifies an F-subgroup: both relators of the two-generator presentation
// evaluate to the identity on the certified pair
//   A = (h^-1 g h)^n,  B = f^m
// (f_word/g_word already carry the orientation sign), and the pair has a
// verified non-commuting point.
struct FCertificate {
    Word f_word, g_word, h_word;
    long m = 1, n = 1;
    bool relations_hold = false;
    Rational nonabelian_witness;
};

struct HigmanWitness {
    Word rho_word;
    Rational cover_lo, cover_hi; // J1, a compact hull of the moved sets
    Rational j2_lo, j2_hi;       // interval with gamma(J2) disjoint from J2
    std::vector<VerifiedImage> disjointness;
};

struct LocalMinWitness {
    Word f1_word;
    long n = 0;
};

// Compactly supported word moving r1 past r2 (both in one orbital), built
// by covering [r1, r2] with conjugated supports of a compactly supported
// seed.
TransportWitness move_point_witness(const GroupSpec& spec, const Rational& r1,
                                    const Rational& r2, const SearchBudget& budget);

// Compactly supported word carrying the compact interval [u_lo, u_hi]
// inside [v_lo, v_hi], both in the orbital interior.
TransportWitness interval_into_witness(const GroupSpec& spec, const Rational& u_lo,
                                       const Rational& u_hi, const Rational& v_lo,
                                       const Rational& v_hi, const SearchBudget& budget);

// Word fixing [u_lo, u_hi] pointwise and pushing [v_lo, v_hi] beyond r.
TransportWitness fix_and_push_witness(const GroupSpec& spec, const Rational& u_lo,
                                      const Rational& u_hi, const Rational& v_lo,
                                      const Rational& v_hi, const Rational& r,
                                      const SearchBudget& budget);

// Word g with U.g inside W and V.g inside (r, sup); sup U < inf V.
TransportWitness push_with_anchor_witness(const GroupSpec& spec, const Rational& u_lo,
                                          const Rational& u_hi, const Rational& v_lo,
                                          const Rational& v_hi, const Rational& w_lo,
                                          const Rational& w_hi, const Rational& r,
                                          const SearchBudget& budget);

// Word g with U1.g in V1 and U2.g in V2 (both input and target pairs
// ordered and disjoint).
TransportWitness pair_transport_witness(const GroupSpec& spec, const Rational& u1_lo,
                                        const Rational& u1_hi, const Rational& u2_lo,
                                        const Rational& u2_hi, const Rational& v1_lo,
                                        const Rational& v1_hi, const Rational& v2_lo,
                                        const Rational& v2_hi, const SearchBudget& budget);

// (f1, n) with supp(f1) inside the open interval V and x.f1^n inside the
// open interval U, for U inside V and x in V.
LocalMinWitness local_minimality_witness(const GroupSpec& spec, const Rational& u_lo,
                                         const Rational& u_hi, const Rational& v_lo,
                                         const Rational& v_hi, const Rational& x,
                                         const SearchBudget& budget);

// rho transporting a compact hull of the moved sets of alpha and beta into
// an interval that gamma moves off itself; exact disjointness verified.
HigmanWitness higman_witness(const GroupSpec& spec, const Word& alpha, const Word& beta,
                             const Word& gamma, const SearchBudget& budget);

// Word whose element has no interior fixed points.
TransportWitness fully_supported_witness(const GroupSpec& spec, const SearchBudget& budget);

struct FRelationCheck {
    bool holds = false;
    bool abelian = false;                  // the pair commutes (degenerate hold)
    std::optional<Rational> witness_point; // a point moved by a failing relator
};

// Exact identity check of the two relators
//   [(ab)^-1 b (ab), a]   and   [(ab)^-2 b (ab)^2, a]
// on the pair (a, b).
FRelationCheck check_f_relations(const PiecewiseMap& a, const PiecewiseMap& b);

// Searches ordered assignments over the given candidate words (evaluated in
// spec) and returns every assignment whose relators hold, with the abelian
// flag.  Used by the catalog build check and the acceptance suite.
struct FAssignmentResult {
    Word a, b;
    bool abelian;
};
std::vector<FAssignmentResult> f_relation_assignment_search(const GroupSpec& spec,
                                                            const std::vector<Word>& candidates);

// Certificate that <(h^-1 g h)^n, f^m> realizes the presentation: exact
// relators plus a non-commuting point.  f must classify TypeB-like (trivial
// lower-end germ) and g TypeA-like.
FCertificate f_subgroup_certificate(const GroupSpec& spec, const Word& f_word,
                                    const Word& g_word, const SearchBudget& budget);

} // namespace pfl
