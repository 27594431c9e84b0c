#ifndef BLOWUP_HILBERT_HPP
#define BLOWUP_HILBERT_HPP

#include <vector>

#include "blowup/monomial.hpp"

namespace blowup {

// Weighted Hilbert series of a quotient by a monomial ideal:
//    numerator(t) / prod_i (1 - t^{w_i}),
// one denominator factor per ambient variable. The Krull dimension is the
// pole order at t=1, i.e. #vars minus the multiplicity of (1-t) in the
// numerator; `dim == -1` flags the zero ring (unit ideal).
struct HilbertSeries {
    std::vector<long long> numerator;  // numerator[d] = coefficient of t^d
    std::vector<long> denomWeights;
    int dim = 0;
    long long reducedNumeratorAtOne = 0;  // N1(1) after cancelling (1-t)^mult; > 0 unless zero ring

    // Power-series expansion coefficients (the Hilbert function) through
    // degree upTo inclusive.
    std::vector<long long> coefficients(long upTo) const;

    bool equal_series(const HilbertSeries& other) const;

    // this == other * (1 - t^d); exact test used for form-regularity.
    bool equals_shifted_difference(const HilbertSeries& other, long d) const;
};

// From the minimal monomial generators of the leading-term ideal.
HilbertSeries hilbert_from_monomials(std::vector<Monomial> gens, const std::vector<long>& weights);

}  // namespace blowup

#endif
