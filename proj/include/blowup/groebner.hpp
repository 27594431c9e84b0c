#ifndef BLOWUP_GROEBNER_HPP
#define BLOWUP_GROEBNER_HPP

#include <vector>

#include "blowup/errors.hpp"
#include "blowup/ring.hpp"

namespace blowup {

// Caps on a single Buchberger run. Exceeding a cap throws BudgetExceeded —
// an explicit error, never a wrong answer. Defaults are generous enough for
// the bundled corpus (eliminations in up to 12 variables).
struct Budget {
    long maxPairs = 400000;   // S-pairs taken off the queue
    long maxDegree = 600;     // total degree of any S-pair lcm
};

Budget& default_budget();  // process-wide, set once by the CLI before work starts

// A reduced Groebner basis of (gens) + ring relations, computed in the
// ambient polynomial ring. Elements are monic, pairwise reduced, stored
// sorted under `order` (terms and element list both), ascending by leading
// monomial.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Poly> elements;

    bool is_unit() const {
        return elements.size() == 1 && !elements[0].is_zero() && elements[0].lt().m.is_one();
    }
    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        out.reserve(elements.size());
        for (const auto& g : elements) out.push_back(g.lt().m);
        return out;
    }
    // Elements re-sorted into the canonical (grevlex) storage order.
    std::vector<Poly> canonical_elements() const;
};

// Buchberger with the normal selection strategy (minimal lcm degree first,
// deterministic tie-break by generator index) and the product and chain
// criteria. Ring relations are adjoined automatically.
GroebnerBasis buchberger(const std::vector<Poly>& gens, const RingPtr& ring,
                         const MonomialOrder& order, const Budget& budget = default_budget());

// Full normal form: no term of the result is divisible by any leading term
// of G; f - result lies in the ideal of G.
Poly normal_form(const Poly& f, const GroebnerBasis& G);

// Minimal monomial generators of the initial ideal of G.
std::vector<Monomial> leading_term_ideal(const GroebnerBasis& G);

// Re-checks that every S-pair of G reduces to zero (test support).
bool verify_spair_certificate(const GroebnerBasis& G);

// --- representation-tracked variant, the substrate for syzygy computation

struct TrackedBasis {
    GroebnerBasis basis;                         // reduced: no (tracking is for the raw loop)
    std::vector<Poly> rawElements;               // basis as computed (monic, not inter-reduced)
    std::vector<std::vector<Poly>> representation;  // rawElements[k] = sum_i rep[k][i] * gens[i]
    std::vector<std::vector<Poly>> syzygies;        // vectors s with sum_i s[i] * gens[i] = 0
};

// Tracked Buchberger: processes every S-pair (no skipping criteria, so the
// recorded zero-reduction syzygies generate the whole syzygy module of the
// raw basis). Intended for small inputs.
TrackedBasis buchberger_tracked(const std::vector<Poly>& gens, const RingPtr& ring,
                                const MonomialOrder& order,
                                const Budget& budget = default_budget());

// Divides f by the raw tracked basis, returning quotients q with
// f = sum_k q[k] * rawElements[k] + remainder.
Poly divide_tracked(const Poly& f, const TrackedBasis& tb, std::vector<Poly>& quotientsOut);

}  // namespace blowup

#endif
