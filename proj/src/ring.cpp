#include "blowup/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace blowup {

PresentedRing::PresentedRing(std::vector<std::string> vars, Field fld, std::vector<long> weights,
                             std::vector<Poly> relations, bool isDomain)
    : vars_(std::move(vars)),
      fld_(fld),
      weights_(std::move(weights)),
      relations_(std::move(relations)),
      domain_(isDomain),
      grevlex_(MonomialOrder::grevlex(vars_.size())) {}

RingPtr PresentedRing::polynomial(std::vector<std::string> vars, Field fld,
                                  std::vector<long> weights) {
    if (weights.empty()) weights.assign(vars.size(), 1);
    return presented(std::move(vars), fld, std::move(weights), {}, true);
}

RingPtr PresentedRing::presented(std::vector<std::string> vars, Field fld,
                                 std::vector<long> weights, std::vector<Poly> relations,
                                 bool isDomain) {
    if (weights.size() != vars.size())
        throw std::invalid_argument("ring weight vector length mismatch");
    for (long w : weights)
        if (w <= 0) throw std::invalid_argument("ring weights must be strictly positive");
    std::set<std::string> seen;
    for (const auto& v : vars)
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate ring variable name: " + v);
    Grading g{weights};
    for (const auto& r : relations) {
        if (!r.terms.empty() && r.terms.front().m.nvars() != vars.size())
            throw std::invalid_argument("relation variable count mismatch");
        if (!is_homogeneous(r, g))
            throw std::invalid_argument("defining relations must be weight-homogeneous");
    }
    return RingPtr(
        new PresentedRing(std::move(vars), fld, std::move(weights), std::move(relations), isDomain));
}

int PresentedRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr PresentedRing::extended(const std::vector<std::string>& newVars,
                                const std::vector<long>& newWeights, bool keepDomainFlag) const {
    std::vector<std::string> vs = vars_;
    vs.insert(vs.end(), newVars.begin(), newVars.end());
    std::vector<long> ws = weights_;
    ws.insert(ws.end(), newWeights.begin(), newWeights.end());
    std::vector<int> map(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) map[i] = static_cast<int>(i);
    std::vector<Poly> rel;
    MonomialOrder ord = MonomialOrder::grevlex(vs.size());
    rel.reserve(relations_.size());
    for (const auto& r : relations_) rel.push_back(poly_embed(r, map, vs.size(), fld_, ord));
    return presented(std::move(vs), fld_, std::move(ws), std::move(rel),
                     keepDomainFlag && domain_);
}

std::string PresentedRing::describe() const {
    std::string s = fld_.describe() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    s += "]";
    if (!relations_.empty()) s += "/(" + std::to_string(relations_.size()) + " relations)";
    return s;
}

Poly poly_embed(const Poly& f, const std::vector<int>& map, std::size_t dstVars, const Field& fld,
                const MonomialOrder& dstOrd) {
    std::vector<Term> ts;
    ts.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        Monomial m(dstVars);
        for (std::size_t i = 0; i < t.m.e.size(); ++i) m.e[map[i]] = t.m.e[i];
        ts.push_back(Term{t.c, std::move(m)});
    }
    return poly_normalize(std::move(ts), fld, dstOrd);
}

Poly poly_contract(const Poly& f, const std::vector<int>& dropped, const Field& fld,
                   const MonomialOrder& dstOrd) {
    std::vector<char> drop;
    if (!f.terms.empty()) drop.assign(f.terms.front().m.nvars(), 0);
    for (int i : dropped) drop[i] = 1;
    std::vector<Term> ts;
    ts.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        Monomial m;
        m.e.reserve(t.m.e.size() - dropped.size());
        for (std::size_t i = 0; i < t.m.e.size(); ++i) {
            if (drop[i]) {
                if (t.m.e[i] != 0)
                    throw std::domain_error("contraction would lose a variable with nonzero exponent");
            } else {
                m.e.push_back(t.m.e[i]);
            }
        }
        ts.push_back(Term{t.c, std::move(m)});
    }
    return poly_normalize(std::move(ts), fld, dstOrd);
}

Poly poly_apply_map(const Poly& f, const std::vector<Poly>& images, const Field& fld,
                    std::size_t dstVars, const MonomialOrder& dstOrd) {
    Poly acc;
    for (const auto& t : f.terms) {
        Poly prod = poly_const(fld, dstVars, t.c);
        for (std::size_t i = 0; i < t.m.e.size(); ++i)
            for (int k = 0; k < t.m.e[i]; ++k) prod = poly_mul(prod, images[i], fld, dstOrd);
        acc = poly_add(acc, prod, fld, dstOrd);
    }
    return acc;
}

bool same_ring(const PresentedRing& a, const PresentedRing& b) {
    if (&a == &b) return true;
    if (a.var_names() != b.var_names() || a.field() != b.field() || a.weights() != b.weights())
        return false;
    const auto& ra = a.relations();
    const auto& rb = b.relations();
    if (ra.size() != rb.size()) return false;
    for (std::size_t i = 0; i < ra.size(); ++i)
        if (!poly_eq(ra[i], rb[i], a.field())) return false;
    return true;
}

}  // namespace blowup
