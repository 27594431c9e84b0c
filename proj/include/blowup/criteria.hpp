#ifndef BLOWUP_CRITERIA_HPP
#define BLOWUP_CRITERIA_HPP

#include "blowup/blowup_algebras.hpp"

namespace blowup {

enum class Status { HOLDS, FAILS, INCONCLUSIVE, NOT_CHECKED };

const char* status_name(Status s);

// Three-valued verdict: HOLDS and FAILS carry a witness reproducible from
// the seed; INCONCLUSIVE records a global inequality that cannot refute the
// local statement (some side non-homogeneous); NOT-CHECKED marks hypotheses
// outside the toolkit's reach.
struct Verdict {
    Status status = Status::NOT_CHECKED;
    std::string witness;
    std::uint64_t seed = 0;
    std::string notes;
};

Verdict verdict(Status s, std::string witness = "", std::uint64_t seed = 0,
                std::string notes = "");

// Ideal-equality verdict with the three-valued rule: global equality always
// HOLDS (and implies the local statement); global inequality refutes only
// when both sides are weight-homogeneous.
Verdict equality_verdict(const Ideal& lhs, const Ideal& rhs, std::uint64_t seed = 0);

struct RegularStep {
    Poly form;
    long degree;
    int trialIndex;
};

// Depth probe by homogeneous forms, socle-first:
//  - a nonzero socle (C : m != C) certifies depth == steps exactly;
//  - otherwise random homogeneous forms are tried for regularity via the
//    exact Hilbert-series test, `trials` draws per candidate degree.
// CM verdicts are certificates (an explicit regular sequence + Artinian
// tail); non-CM verdicts are exact when a socle witness exists, otherwise
// labeled probabilistic.
struct DepthReport {
    int dimension = 0;
    int depthLowerBound = 0;
    bool depthExact = false;
    bool isCM = false;
    std::vector<RegularStep> steps;
    std::string socleWitness;
    std::uint64_t seed = 0;
    int trialsPerStep = 0;
    std::string notes;
};

DepthReport cm_test(const Ideal& fullQuotientIdeal, std::uint64_t seed, int trials = 5);

// --- checkers for the intersection/relation-count Cohen-Macaulay theorem

struct ConditionAReport {
    std::vector<Verdict> perIndex;  // i = 0..ell-1
    std::vector<Poly> elements;     // the a_i used
    std::uint64_t seed = 0;
    int attempts = 0;
    bool allHold() const {
        for (const auto& v : perIndex)
            if (v.status != Status::HOLDS) return false;
        return !perIndex.empty() || true;
    }
};

// (a_i I^{t-1} : a_{i+1}) n I^t = a_i I^{t-1} for 0 <= i <= ell-1, with the
// given elements.
ConditionAReport condition_a_for_elements(const Ideal& I, const std::vector<Poly>& elements,
                                          int t);
// Same, with general elements drawn from the seed (5 fresh draws before any
// genericity-dependent FAILS).
ConditionAReport check_condition_a(BlowupData& bd, int t, std::uint64_t seed);

struct LemmaPropagationReport {
    Verdict overall;
    int t = 0;
    int window = 0;
    std::vector<std::string> failures;
};

// Empirical confirmation of the colon-propagation lemma: checks the
// subset-indexed equalities for j = t..t+window given they hold at j = t.
LemmaPropagationReport verify_lemma_propagation(BlowupData& bd, const ReductionData& red, int t,
                                                int window);

struct MainTheoremReport {
    int n = 0, ell = 0, r = 0, t = 0;
    bool kIsMaximal = false;
    ConditionAReport conditionA;
    Verdict conditionB;
    std::map<int, int> census;
    int censusAllowance = 0;
    DepthReport cm;
    Status overall = Status::NOT_CHECKED;  // NOT_CHECKED when t < r
    std::string notes;
};

// Main CM criterion for R/KR: condition (a) + the relation-count condition
// (b) against the n >= ell+2 / n = ell+1 / K != m thresholds, then the CM
// conclusion. If (a) and (b) hold but R/KR is certifiably not CM, an
// InvariantViolation is thrown: theorem statements are toolkit self-checks.
MainTheoremReport check_main_theorem(BlowupData& bd, const Ideal& K, int t, std::uint64_t seed,
                                     int trials = 5);

struct ValabregaVallaReport {
    Verdict precondition;  // the standing intersection hypothesis
    Verdict cmVerdict;     // (i)
    Verdict freeness;      // part of (ii)
    std::vector<Verdict> intersections;  // part of (ii), j = 1..r
    Verdict conditionII;
    bool equivalenceComputed = false;
    bool equivalenceOk = false;
    DepthReport cm;
    int r = 0;
};

ValabregaVallaReport check_valabrega_valla_K(BlowupData& bd, const Ideal& K, std::uint64_t seed,
                                             int trials = 5);

// G_s via Fitting-ideal heights: height Fitt_i(I) >= i+1 for
// height(I) <= i <= s-1.
Verdict check_G_s(const Ideal& I, int s);

struct DepthPowersReport {
    std::vector<DepthReport> perPower;        // j = 1..jmax for R/I^j
    std::vector<bool> corollaryInequality;    // depth R/I^j >= dim R/I - j + 1
    int dimRmodI = 0;
};

DepthPowersReport depth_powers(const Ideal& I, int jmax, std::uint64_t seed, int trials = 5);

struct ThmGCMReport {
    int d = 0, g = 0, r = 0;
    Verdict gCondition;          // G_d
    Verdict depthCondition;      // depth R/I^j >= dim R/I - j + 1, 1 <= j <= d-g
    Verdict heightJI;            // ht(J:I) >= d
    std::vector<Verdict> intersections;  // (ii): j = d-g+1..r-1
    Verdict conditionII;
    DepthReport cmG;
    bool expectedReductionNumber = false;  // r <= d-g+1
    bool biconditionalComputed = false;
    bool biconditionalOk = false;
    ReductionData reduction;
};

ThmGCMReport check_thm_G_CM(BlowupData& bd, std::uint64_t seed, int trials = 5);

struct RLessEllReport {
    Verdict overall;
    int r = 0, ell = 0;
    bool rIsZero = false, rIsEllMinusOne = false;
};

RLessEllReport check_r_less_ell(BlowupData& bd, std::uint64_t seed, int trials = 5);

}  // namespace blowup

#endif
