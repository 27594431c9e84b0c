#include "blowup/poly.hpp"

#include <algorithm>

namespace blowup {

Poly poly_normalize(std::vector<Term> ts, const Field& fld, const MonomialOrder& ord) {
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
    Poly out;
    out.terms.reserve(ts.size());
    for (auto& t : ts) {
        if (!out.terms.empty() && out.terms.back().m == t.m) {
            out.terms.back().c = fld.add(out.terms.back().c, t.c);
            if (fld.is_zero(out.terms.back().c)) out.terms.pop_back();
        } else if (!fld.is_zero(t.c)) {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

Poly poly_resort(const Poly& f, const MonomialOrder& ord) {
    Poly out = f;
    std::sort(out.terms.begin(), out.terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
    return out;
}

Poly poly_add(const Poly& f, const Poly& g, const Field& fld, const MonomialOrder& ord) {
    Poly out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = ord.compare(f.terms[i].m, g.terms[j].m);
        if (c > 0) {
            out.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            out.terms.push_back(g.terms[j++]);
        } else {
            Scalar s = fld.add(f.terms[i].c, g.terms[j].c);
            if (!fld.is_zero(s)) out.terms.push_back(Term{std::move(s), f.terms[i].m});
            ++i;
            ++j;
        }
    }
    for (; i < f.terms.size(); ++i) out.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) out.terms.push_back(g.terms[j]);
    return out;
}

Poly poly_neg(const Poly& f, const Field& fld) {
    Poly out = f;
    for (auto& t : out.terms) t.c = fld.neg(t.c);
    return out;
}

Poly poly_sub(const Poly& f, const Poly& g, const Field& fld, const MonomialOrder& ord) {
    return poly_add(f, poly_neg(g, fld), fld, ord);
}

Poly poly_scale(const Poly& f, const Scalar& c, const Field& fld) {
    if (fld.is_zero(c)) return Poly{};
    Poly out = f;
    for (auto& t : out.terms) t.c = fld.mul(t.c, c);
    return out;
}

Poly poly_mul_term(const Poly& g, const Scalar& c, const Monomial& m, const Field& fld) {
    if (fld.is_zero(c)) return Poly{};
    Poly out;
    out.terms.reserve(g.terms.size());
    for (const auto& t : g.terms) out.terms.push_back(Term{fld.mul(t.c, c), mono_mul(t.m, m)});
    return out;
}

Poly poly_mul(const Poly& f, const Poly& g, const Field& fld, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) return Poly{};
    Poly acc;
    for (const auto& t : f.terms)
        acc = poly_add(acc, poly_mul_term(g, t.c, t.m, fld), fld, ord);
    return acc;
}

Poly poly_make_monic(const Poly& f, const Field& fld) {
    if (f.is_zero() || fld.is_one(f.lt().c)) return f;
    return poly_scale(f, fld.inv(f.lt().c), fld);
}

bool poly_eq(const Poly& f, const Poly& g, const Field& fld) {
    if (f.terms.size() != g.terms.size()) return false;
    for (std::size_t i = 0; i < f.terms.size(); ++i)
        if (f.terms[i].m != g.terms[i].m || !fld.eq(f.terms[i].c, g.terms[i].c)) return false;
    return true;
}

MultiDegree multidegree(const Poly& f, const Grading& g) {
    MultiDegree d;
    if (f.is_zero()) return d;
    d.status = MultiDegree::Status::homogeneous;
    d.degree = g.degree(f.terms.front().m);
    for (const auto& t : f.terms)
        if (g.degree(t.m) != d.degree) {
            d.status = MultiDegree::Status::mixed;
            return d;
        }
    return d;
}

bool is_homogeneous(const Poly& f, const Grading& g) {
    return multidegree(f, g).status != MultiDegree::Status::mixed;
}

long weighted_degree_max(const Poly& f, const Grading& g) {
    long d = 0;
    for (const auto& t : f.terms) d = std::max(d, g.degree(t.m));
    return d;
}

Poly poly_one(const Field& fld, std::size_t nvars) {
    Poly p;
    p.terms.push_back(Term{fld.one(), Monomial(nvars)});
    return p;
}

Poly poly_var(const Field& fld, std::size_t nvars, int index, int exponent) {
    Monomial m(nvars);
    m.e[index] = exponent;
    Poly p;
    p.terms.push_back(Term{fld.one(), std::move(m)});
    return p;
}

Poly poly_const(const Field& fld, std::size_t nvars, const Scalar& c) {
    Poly p;
    if (!fld.is_zero(c)) p.terms.push_back(Term{c, Monomial(nvars)});
    return p;
}

}  // namespace blowup
