#ifndef BLOWUP_IDEAL_HPP
#define BLOWUP_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "blowup/groebner.hpp"
#include "blowup/hilbert.hpp"

namespace blowup {

// An ideal of a presented ring R = k[x]/P, handled through its ambient
// preimage: every basis computation adjoins P, so "f in I" always means
// membership of the residue class. Equality is extensional (same reduced
// basis), never generator-list identity.
//
// Values are immutable; the per-ideal basis cache is write-once per order
// key and guarded by a mutex, so concurrent readers observe either absence
// or the completed basis.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);
    static Ideal maximal(RingPtr ring);  // all ring variables

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    const GroebnerBasis& gb() const;  // grevlex
    const GroebnerBasis& gb(const MonomialOrder& ord) const;

    Poly nf(const Poly& f) const { return normal_form(f, gb()); }
    bool contains(const Poly& f) const { return nf(f).is_zero(); }
    bool contains_ideal(const Ideal& J) const;
    bool equals(const Ideal& J) const;

    bool is_zero_ideal() const;  // equals the zero ideal of R (i.e. ambient basis == basis of P)
    bool is_unit_ideal() const { return gb().is_unit(); }
    // true iff the ambient preimage has a weight-homogeneous generating set
    // (tested on the reduced basis, which is homogeneous iff the ideal is)
    bool is_homogeneous() const;
    // plain monomial ideal in a relation-free ring
    bool is_monomial() const;
    std::vector<Monomial> monomial_gens() const;

    std::string describe() const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const GroebnerBasis>> byOrder;
    };

    RingPtr ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int k);  // I^0 = (1)

Ideal ideal_intersect(const Ideal& I, const Ideal& J);

// Colon ideal I : J = { f : f*J in I }, computed generator-by-generator via
// intersections and exact division. J = (0) returns the unit ideal
// (lattice-theoretic convention); `zeroDivisorWarning` is set when that
// convention fires.
Ideal ideal_quotient(const Ideal& I, const Ideal& J, bool* zeroDivisorWarning = nullptr);

// I : J^infinity, plus the first exponent at which the chain stabilizes.
struct Saturation {
    Ideal ideal;
    int exponent;
};
Saturation ideal_saturation(const Ideal& I, const Ideal& J);

// Contraction I ∩ k[remaining variables]. Ring relations must not involve
// the eliminated variables. When `target` is provided it must match the
// contracted ring structurally.
Ideal ideal_eliminate(const Ideal& I, const std::vector<int>& varIdx, RingPtr target = nullptr);
RingPtr eliminated_ring(const RingPtr& ring, const std::vector<int>& varIdx);

// Contraction into the FREE polynomial ring on the remaining variables.
// Unlike ideal_eliminate, the eliminated variables may occur in the ring
// relations: their consequences among the remaining variables become part
// of the resulting ideal (this is the subalgebra-kernel flavor of
// elimination). A provided target must agree on variable names and field.
Ideal ideal_eliminate_free(const Ideal& I, const std::vector<int>& varIdx,
                           RingPtr freeTarget = nullptr);

// Minimal homogeneous generators by graded Nakayama (greedy by ascending
// weighted degree; ties keep the earlier generator). Requires a
// weight-homogeneous ideal.
struct MinimalGenerators {
    std::vector<Poly> gens;
    std::map<long, int> censusByDegree;  // ring-weighted degree -> count
};
MinimalGenerators minimal_generators(const Ideal& I);

HilbertSeries hilbert_series(const Ideal& I);
// Krull dimension of R/I (pole order of the Hilbert series); -1 for the
// unit ideal.
int krull_dimension(const Ideal& I);
int ring_dimension(const RingPtr& ring);
// dim R - dim R/I, the graded equidimensional convention. For the unit
// ideal: dim R + 1, the "empty variety" sentinel that compares larger than
// any codimension.
int height(const Ideal& I);

// f = q*g exactly (polynomial ring semantics); throws if not divisible.
Poly poly_exact_divide(const Poly& f, const Poly& g, const RingPtr& ring);

std::vector<Monomial> monomials_of_weighted_degree(const RingPtr& ring, long d);

}  // namespace blowup

#endif
