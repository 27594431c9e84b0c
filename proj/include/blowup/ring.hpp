#ifndef BLOWUP_RING_HPP
#define BLOWUP_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "blowup/poly.hpp"

namespace blowup {

class PresentedRing;
using RingPtr = std::shared_ptr<const PresentedRing>;

// A graded ring k[x_1..x_m]/P with positive weights. "Ideals in the ring"
// are handled as their ambient preimages: every Groebner computation adjoins
// the relations P, so membership, colons and intersections all come out
// right without a separate quotient-ring engine.
//
// Power-series rings of the local theory are modeled by these positively
// graded rings; for weighted-homogeneous inputs the blowup invariants agree
// with the local ones. Reports carry a note to that effect.
class PresentedRing : public std::enable_shared_from_this<PresentedRing> {
public:
    static RingPtr polynomial(std::vector<std::string> vars, Field fld,
                              std::vector<long> weights = {});
    // relations must be homogeneous for the given weights; the domain flag is
    // trusted from the caller (toric presentations and polynomial rings set
    // it), no primality check is attempted.
    static RingPtr presented(std::vector<std::string> vars, Field fld, std::vector<long> weights,
                             std::vector<Poly> relations, bool isDomain);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    int var_index(const std::string& name) const;  // -1 if absent
    const Field& field() const { return fld_; }
    const std::vector<long>& weights() const { return weights_; }
    Grading grading() const { return Grading{weights_}; }
    const std::vector<Poly>& relations() const { return relations_; }
    bool is_domain() const { return domain_; }
    const MonomialOrder& grevlex() const { return grevlex_; }

    Poly var(int i, int exp = 1) const { return poly_var(fld_, nvars(), i, exp); }
    Poly one() const { return poly_one(fld_, nvars()); }
    Poly constant(const Scalar& c) const { return poly_const(fld_, nvars(), c); }

    long weighted_degree(const Monomial& m) const { return m.weighted_degree(weights_); }

    // Extends this ring by fresh variables (appended). Relations are lifted.
    RingPtr extended(const std::vector<std::string>& newVars,
                     const std::vector<long>& newWeights, bool keepDomainFlag = true) const;

    std::string describe() const;

private:
    PresentedRing(std::vector<std::string> vars, Field fld, std::vector<long> weights,
                  std::vector<Poly> relations, bool isDomain);

    std::vector<std::string> vars_;
    Field fld_;
    std::vector<long> weights_;
    std::vector<Poly> relations_;
    bool domain_;
    MonomialOrder grevlex_;
};

// Exponent-vector embedding of a polynomial of `src` into `dst`, where the
// variables of src appear at positions `map[i]` in dst.
Poly poly_embed(const Poly& f, const std::vector<int>& map, std::size_t dstVars,
                const Field& fld, const MonomialOrder& dstOrd);

// Drops the listed variable positions; throws if an exponent there is
// nonzero.
Poly poly_contract(const Poly& f, const std::vector<int>& dropped, const Field& fld,
                   const MonomialOrder& dstOrd);

// Ring homomorphism determined by variable images: evaluates f with
// variable i replaced by images[i] (a polynomial over dst).
Poly poly_apply_map(const Poly& f, const std::vector<Poly>& images, const Field& fld,
                    std::size_t dstVars, const MonomialOrder& dstOrd);

// Same-ring check used by the ideal layer; structural (names, field,
// weights, relations).
bool same_ring(const PresentedRing& a, const PresentedRing& b);

}  // namespace blowup

#endif
