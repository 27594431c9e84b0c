#ifndef BLOWUP_CLOSURE_HPP
#define BLOWUP_CLOSURE_HPP

#include <functional>
#include <optional>

#include "blowup/blowup_algebras.hpp"
#include "blowup/criteria.hpp"

namespace blowup {

// Integral closure of a monomial ideal in a free polynomial ring: the ideal
// of all integer points of the Newton polyhedron. Minimal points are
// enumerated inside the componentwise bounding box of the generator
// exponents (sound: truncating any point of NP to the box stays in NP; see
// docs/closure_bounds.md), each certified by exact rational feasibility.
Ideal newton_closure(const Ideal& I);

bool is_integrally_closed_monomial(const Ideal& I);

// normality of the first jmax powers
std::vector<Verdict> is_normal(const Ideal& I, int jmax);

// f is integral over I iff I is a reduction of I + (f); the certificate is
// the reduction exponent with the verified power equality, replayable by
// direct ideal arithmetic.
struct ClosureCertificate {
    Poly f;
    int r;
};
std::optional<ClosureCertificate> closure_membership_bounded(const Poly& f, const Ideal& I,
                                                             int rmax);
bool replay_certificate(const ClosureCertificate& cert, const Ideal& I);

// Closedness machinery injected per ring flavor: Newton for monomial ideals
// in free rings, the valuation rule for semigroup lifts. A nullopt from
// `closure` means the question is outside the oracle's reach.
struct ClosureOracle {
    std::function<std::optional<Ideal>(const Ideal&)> closure;

    static ClosureOracle newton();
};

struct KIjClosedReport {
    std::vector<Verdict> perPower;  // j = 0..jmax for K*I^j
    std::string hypothesisFlags;    // user-asserted / NOT-CHECKED bookkeeping
};

// Conclusion checks of the divisorial-ideal proposition: is K*I^j integrally
// closed for j = 0..jmax? Hypotheses that need machinery outside the
// artifact (normality of R, unmixedness of R/KR) are recorded, not computed.
KIjClosedReport check_KIj_closed(const Ideal& I, const Ideal& K, int jmax,
                                 const ClosureOracle& oracle);

struct HublHunekeReport {
    Verdict depthRPositive;      // standing: depth R > 0
    Verdict closedAtS;           // I^s integrally closed
    Verdict closedAtSPlusT;      // I^{s+t} integrally closed
    Verdict depthZero;           // depth R/I^s = 0
    Verdict censusEmpty;         // F has no homogeneous relations in degrees <= s+t
    Verdict conclusionEquality;  // I^t n closure(m I^t) = m I^t
    Verdict mItClosed;           // the "in particular" conclusion, when I^t is closed
    bool hypothesesHold = false;
    bool conclusionImplied = false;
    std::string notes;
};

HublHunekeReport check_hubl_huneke(BlowupData& bd, int s, int t, const ClosureOracle& oracle,
                                   std::uint64_t seed, int trials = 5);

}  // namespace blowup

#endif
