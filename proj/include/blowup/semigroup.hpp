#ifndef BLOWUP_SEMIGROUP_HPP
#define BLOWUP_SEMIGROUP_HPP

#include <memory>

#include "blowup/ideal.hpp"

namespace blowup {

// Numerical semigroup S = <g_1..g_k> with gcd 1; membership, Apery set,
// Frobenius number and conductor by exact enumeration.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<long> gens);

    const std::vector<long>& gens() const { return gens_; }
    long frobenius() const { return frobenius_; }
    long conductor() const { return frobenius_ + 1; }
    long multiplicity() const { return gens_.front(); }  // smallest generator
    bool contains(long n) const;
    // Apery set with respect to the multiplicity: the least element of S in
    // each residue class.
    std::vector<long> apery() const;

private:
    std::vector<long> gens_;       // sorted ascending
    std::vector<char> member_;     // membership table, 0..bound
    long frobenius_;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

// Exponent-set ideal of k[[t^S]]: the R-span of { t^e : e in gens + S }.
// All arithmetic is closed-form on exponent sets, truncated at
// conductor + 2 * (max exponent involved); beyond that membership is
// periodic (docs/semigroup_truncation.md).
struct SemigroupIdeal {
    SemigroupPtr S;
    std::vector<long> gens;  // minimal, sorted
};

SemigroupIdeal semigroup_ideal(SemigroupPtr S, std::vector<long> exponents);

SemigroupIdeal sg_product(const SemigroupIdeal& A, const SemigroupIdeal& B);
SemigroupIdeal sg_power(const SemigroupIdeal& A, int k);
SemigroupIdeal sg_intersect(const SemigroupIdeal& A, const SemigroupIdeal& B);
SemigroupIdeal sg_colon(const SemigroupIdeal& A, const SemigroupIdeal& B);
// valuation closure: every element of S with exponent >= min(gens)
SemigroupIdeal sg_closure(const SemigroupIdeal& A);
bool sg_equal(const SemigroupIdeal& A, const SemigroupIdeal& B);
// the maximal ideal (all positive elements of S): generated by the
// semigroup generators
SemigroupIdeal sg_maximal(SemigroupPtr S);

// k[x_1..x_k]/P with weights g_i and P the kernel of x_i -> t^{g_i},
// computed by elimination. The domain flag is set: toric ideals are prime.
RingPtr toric_presentation(const SemigroupPtr& S, const Field& fld);

// t^e as a monomial in the toric coordinates, via the lexicographically
// least factorization e = sum c_i g_i; any factorization yields the same
// residue class mod P.
Poly toric_monomial(const SemigroupPtr& S, const RingPtr& toricRing, long exponent);

Ideal lift_to_toric(const SemigroupIdeal& A, const RingPtr& toricRing);

}  // namespace blowup

#endif
