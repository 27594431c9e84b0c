#ifndef BLOWUP_BLOWUP_ALGEBRAS_HPP
#define BLOWUP_BLOWUP_ALGEBRAS_HPP

#include <map>
#include <optional>

#include "blowup/ideal.hpp"
#include "blowup/rng.hpp"
#include "blowup/syzygy.hpp"

namespace blowup {

// Presentation of a graded quotient of a polynomial extension: the special
// fiber F = k[T]/Q, the associated graded ring G, or R/KR over the Artinian
// base R/K. The ring carries the base-defining relations; `relations` holds
// a minimal homogeneous generating set of Q, minimalized by graded Nakayama
// over the full maximal homogeneous ideal.
struct GradedQuotientPresentation {
    RingPtr ring;                 // presentation ring (base relations included)
    std::vector<int> tIndices;    // positions of the T variables in `ring`
    Ideal relations;              // Q, listed by minimal generators
    std::map<int, int> censusByTDegree;  // T-degree -> number of minimal generators
    Grading tGrading;             // weight 1 on T variables, 0 elsewhere
    std::string baseDescription;

    // Q together with the base relations: the full defining ideal of the
    // quotient, the thing dimension/depth questions are asked of.
    Ideal full_ideal() const { return relations; }  // ring relations are adjoined by the ideal layer
    int t_degree(const Poly& f) const { return static_cast<int>(weighted_degree_max(f, tGrading)); }
};

// One reduction trial: the coefficient matrix lambda_i = sum_j c[i][j] T_j,
// the corresponding elements a_i = sum_j c[i][j] f_j, and the reduction
// number read off the Artinian fiber census by graded Nakayama.
struct ReductionData {
    std::uint64_t seed = 0;
    std::string kind;                       // "coordinate:{...}" or "random:#k"
    std::vector<std::vector<Scalar>> coeff;  // s x n
    std::vector<Poly> reductionGens;         // a_i in the original ring
    std::vector<Poly> fiberForms;            // lambda_i in the fiber ring
    int r = -1;
    std::map<int, long> fiberCensus;  // degree -> vector-space dimension of F/(lambda)
    int trialsRun = 0;
    bool idealSideCertified = false;  // checked I^{r+1} = J I^r when I is equigenerated
    bool homogeneous = false;         // all a_i weight-homogeneous
};

// Lazily-computed blowup data of one ideal. Minimal generators are
// recomputed up front so the number of T variables is always mu(I).
class BlowupData {
public:
    explicit BlowupData(Ideal I);

    const Ideal& ideal() const { return ideal_; }
    const std::vector<Poly>& min_gens() const { return minGens_; }
    int mu() const { return static_cast<int>(minGens_.size()); }

    const RingPtr& rees_ring();   // B = R-vars + T-vars, bigraded via folded weights
    const Ideal& rees_ideal();    // A in B: (T_i - t f_i) + P, t eliminated
    const RingPtr& fiber_ring();  // k[T_1..T_n], all weights 1

    const GradedQuotientPresentation& special_fiber();  // via A mod m, minimalized
    // Independent route to the same relations: (A + m*B) n k[T] by block
    // elimination of the base variables. (For equigenerated ideals this is
    // also the kernel of k[T] -> k[f_i]; for mixed generator degrees the
    // plain subalgebra kernel is a different ideal, so the elimination form
    // is the one that matches the fiber.)
    Ideal fiber_ideal_direct();

    const GradedQuotientPresentation& associated_graded();
    GradedQuotientPresentation quotient_algebra(const Ideal& K,
                                                const std::vector<int>& modOutT = {});

    int analytic_spread();

    // Generic reduction number: coordinate-subset candidates first (these
    // keep the reduction homogeneous whenever possible), then `trials`
    // random draws; the minimum over all valid trials is reported.
    const ReductionData& reduction(std::uint64_t seed, int trials);
    // Same machinery with s generators (s >= analytic spread).
    ReductionData reduction_with_generators(int s, std::uint64_t seed, int trials);

    const Ideal& symmetric_linear_part();  // A_{<=1} in B
    bool is_linear_type();

    const std::vector<long>& t_weights() { return foldedTWeights_; }
    const std::vector<std::string>& t_names() const { return tNames_; }

private:
    void build_rees();
    GradedQuotientPresentation make_presentation(RingPtr presRing, std::vector<Poly> qGens,
                                                 std::vector<int> tIdx, std::string baseDesc);

    Ideal ideal_;
    std::vector<Poly> minGens_;
    std::vector<std::string> tNames_;
    std::vector<long> foldedTWeights_;

    RingPtr reesRing_;
    std::optional<Ideal> reesIdeal_;
    RingPtr fiberRing_;
    std::optional<GradedQuotientPresentation> fiber_;
    std::optional<GradedQuotientPresentation> graded_;
    std::optional<Ideal> symLinear_;
    std::map<std::pair<std::uint64_t, int>, ReductionData> reductionCache_;
};

// Census of minimal homogeneous generating relations in T-degrees <= upTo.
std::map<int, int> relation_census(const GradedQuotientPresentation& pres, int upTo);

}  // namespace blowup

#endif
