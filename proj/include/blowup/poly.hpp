#ifndef BLOWUP_POLY_HPP
#define BLOWUP_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "blowup/field.hpp"
#include "blowup/monomial.hpp"

namespace blowup {

struct Term {
    Scalar c;
    Monomial m;
};

// Canonical form: no zero coefficients, no duplicate monomials, terms
// strictly decreasing. Polys at rest are sorted under grevlex; the Groebner
// engine re-sorts working copies under its active order and restores the
// canonical sort on output.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const { return terms.front(); }
    std::size_t nterms() const { return terms.size(); }
};

// Normalizes an arbitrary term list: sort descending under `ord`, merge
// duplicates, drop zeros.
Poly poly_normalize(std::vector<Term> ts, const Field& fld, const MonomialOrder& ord);

Poly poly_resort(const Poly& f, const MonomialOrder& ord);

Poly poly_add(const Poly& f, const Poly& g, const Field& fld, const MonomialOrder& ord);
Poly poly_sub(const Poly& f, const Poly& g, const Field& fld, const MonomialOrder& ord);
Poly poly_neg(const Poly& f, const Field& fld);
Poly poly_scale(const Poly& f, const Scalar& c, const Field& fld);
// c * m * g; multiplying every term by a fixed monomial preserves the sort.
Poly poly_mul_term(const Poly& g, const Scalar& c, const Monomial& m, const Field& fld);
Poly poly_mul(const Poly& f, const Poly& g, const Field& fld, const MonomialOrder& ord);
Poly poly_make_monic(const Poly& f, const Field& fld);

bool poly_eq(const Poly& f, const Poly& g, const Field& fld);

// f - (c/lc(g)) ... is left to the engine; here only generic helpers live.

struct MultiDegree {
    enum class Status { zero, homogeneous, mixed };
    Status status = Status::zero;
    long degree = 0;  // valid when homogeneous
};

// Weighted multidegree. The zero polynomial reports a distinguished bottom
// status, never equal to any integer degree.
MultiDegree multidegree(const Poly& f, const Grading& g);
bool is_homogeneous(const Poly& f, const Grading& g);
long weighted_degree_max(const Poly& f, const Grading& g);

Poly poly_one(const Field& fld, std::size_t nvars);
Poly poly_var(const Field& fld, std::size_t nvars, int index, int exponent = 1);
Poly poly_const(const Field& fld, std::size_t nvars, const Scalar& c);

}  // namespace blowup

#endif
