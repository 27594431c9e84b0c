#include "blowup/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace blowup {

Budget& default_budget() {
    static Budget b;
    return b;
}

namespace {

struct Engine {
    const RingPtr& ring;
    const MonomialOrder& ord;
    const Budget& budget;
    const Field& fld;

    Engine(const RingPtr& r, const MonomialOrder& o, const Budget& b)
        : ring(r), ord(o), budget(b), fld(r->field()) {}

    // one reduction step: f -= (lc(f)/lc(g)) * (lm(f)/lm(g)) * g
    Poly reduce_step(const Poly& f, const Poly& g) const {
        Scalar c = fld.div(f.lt().c, g.lt().c);
        Monomial m = mono_div(f.lt().m, g.lt().m);
        return poly_sub(f, poly_mul_term(g, c, m, fld), fld, ord);
    }

    int find_reducer(const Monomial& m, const std::vector<Poly>& basis,
                     int skip = -1) const {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (static_cast<int>(k) == skip || basis[k].is_zero()) continue;
            if (mono_divides(basis[k].lt().m, m)) return static_cast<int>(k);
        }
        return -1;
    }

    Poly normal_form(Poly f, const std::vector<Poly>& basis, int skip = -1) const {
        Poly out;
        while (!f.is_zero()) {
            int k = find_reducer(f.lt().m, basis, skip);
            if (k >= 0) {
                f = reduce_step(f, basis[k]);
            } else {
                out.terms.push_back(f.lt());
                f.terms.erase(f.terms.begin());
            }
        }
        return out;
    }

    Poly spoly(const Poly& a, const Poly& b) const {
        Monomial l = mono_lcm(a.lt().m, b.lt().m);
        Poly pa = poly_mul_term(a, fld.div(fld.one(), a.lt().c), mono_div(l, a.lt().m), fld);
        Poly pb = poly_mul_term(b, fld.div(fld.one(), b.lt().c), mono_div(l, b.lt().m), fld);
        return poly_sub(pa, pb, fld, ord);
    }
};

struct Pair {
    long deg;
    int i, j;  // i < j
    bool operator<(const Pair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (j != o.j) return j < o.j;  // older second index first: favors small bases
        return i < o.i;
    }
};

std::vector<Poly> prepare_inputs(const std::vector<Poly>& gens, const RingPtr& ring,
                                 const MonomialOrder& ord) {
    std::vector<Poly> work;
    auto push = [&](const Poly& g) {
        if (g.is_zero()) return;
        work.push_back(poly_make_monic(poly_resort(g, ord), ring->field()));
    };
    for (const auto& g : gens) push(g);
    for (const auto& r : ring->relations()) push(r);
    return work;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, const RingPtr& ring,
                         const MonomialOrder& order, const Budget& budget) {
    Engine eng(ring, order, budget);
    const Field& fld = ring->field();
    std::vector<Poly> basis = prepare_inputs(gens, ring, order);

    std::set<Pair> queue;
    std::set<std::pair<int, int>> inQueue;
    auto lcm_deg = [&](int i, int j) {
        return mono_lcm(basis[i].lt().m, basis[j].lt().m).total_degree();
    };
    auto push_pairs_for = [&](int t) {
        for (int i = 0; i < t; ++i) {
            if (basis[i].is_zero()) continue;
            // product criterion at creation: coprime leading terms reduce to zero
            if (mono_coprime(basis[i].lt().m, basis[t].lt().m)) continue;
            Pair p{lcm_deg(i, t), i, t};
            queue.insert(p);
            inQueue.insert({i, t});
        }
    };
    for (std::size_t t = 1; t < basis.size(); ++t) push_pairs_for(static_cast<int>(t));

    long pairsProcessed = 0;
    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        inQueue.erase({p.i, p.j});

        if (++pairsProcessed > budget.maxPairs)
            throw BudgetExceeded("Groebner pair budget exceeded (" +
                                 std::to_string(budget.maxPairs) + " pairs)");
        if (p.deg > budget.maxDegree)
            throw BudgetExceeded("Groebner degree budget exceeded (lcm degree " +
                                 std::to_string(p.deg) + ")");

        const Monomial lij = mono_lcm(basis[p.i].lt().m, basis[p.j].lt().m);
        // chain criterion: lt(k) | lcm(i,j) with both (i,k), (j,k) already handled
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (static_cast<int>(k) == p.i || static_cast<int>(k) == p.j || basis[k].is_zero())
                continue;
            if (!mono_divides(basis[k].lt().m, lij)) continue;
            const int ik_lo = std::min(p.i, static_cast<int>(k));
            const int ik_hi = std::max(p.i, static_cast<int>(k));
            const int jk_lo = std::min(p.j, static_cast<int>(k));
            const int jk_hi = std::max(p.j, static_cast<int>(k));
            if (!inQueue.count({ik_lo, ik_hi}) && !inQueue.count({jk_lo, jk_hi})) skip = true;
        }
        if (skip) continue;

        Poly h = eng.normal_form(eng.spoly(basis[p.i], basis[p.j]), basis);
        if (h.is_zero()) continue;
        basis.push_back(poly_make_monic(h, fld));
        push_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || basis[j].is_zero()) continue;
            if (mono_divides(basis[j].lt().m, basis[i].lt().m)) {
                int c = order.compare(basis[j].lt().m, basis[i].lt().m);
                // equal leading terms: keep the earlier element
                redundant = (c != 0) || (j < i);
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each survivor against the others
    std::vector<Poly> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        Poly others_nf = eng.normal_form(reduced[i], reduced, static_cast<int>(i));
        reduced[i] = poly_make_monic(others_nf, fld);
    }
    std::erase_if(reduced, [](const Poly& g) { return g.is_zero(); });
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.compare(a.lt().m, b.lt().m) < 0;
    });

    GroebnerBasis out{ring, order, std::move(reduced)};
    return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
    Engine eng(G.ring, G.order, default_budget());
    Poly nf = eng.normal_form(poly_resort(f, G.order), G.elements);
    return poly_resort(nf, G.ring->grevlex());
}

std::vector<Monomial> leading_term_ideal(const GroebnerBasis& G) {
    std::vector<Monomial> lms = G.leading_monomials();
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < lms.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < lms.size() && !redundant; ++j)
            if (i != j && mono_divides(lms[j], lms[i]) && !(lms[i] == lms[j] && j > i))
                redundant = true;
        if (!redundant) minimal.push_back(lms[i]);
    }
    return minimal;
}

bool verify_spair_certificate(const GroebnerBasis& G) {
    Engine eng(G.ring, G.order, default_budget());
    for (std::size_t i = 0; i < G.elements.size(); ++i)
        for (std::size_t j = i + 1; j < G.elements.size(); ++j)
            if (!eng.normal_form(eng.spoly(G.elements[i], G.elements[j]), G.elements).is_zero())
                return false;
    return true;
}

std::vector<Poly> GroebnerBasis::canonical_elements() const {
    std::vector<Poly> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(poly_resort(g, ring->grevlex()));
    return out;
}

// ---------------------------------------------------------------------------
// tracked variant

TrackedBasis buchberger_tracked(const std::vector<Poly>& gens, const RingPtr& ring,
                                const MonomialOrder& order, const Budget& budget) {
    Engine eng(ring, order, budget);
    const Field& fld = ring->field();
    const std::size_t n = gens.size();

    std::vector<Poly> basis;
    std::vector<std::vector<Poly>> rep;
    std::vector<std::vector<Poly>> syz;

    auto unit_rep = [&](std::size_t i, const Scalar& c) {
        std::vector<Poly> r(n);
        r[i] = poly_const(fld, ring->nvars(), c);
        return r;
    };

    for (std::size_t i = 0; i < n; ++i) {
        Poly g = poly_resort(gens[i], order);
        if (g.is_zero()) {
            continue;  // zero input generators carry no information
        }
        Scalar inv = fld.inv(g.lt().c);
        basis.push_back(poly_scale(g, inv, fld));
        rep.push_back(unit_rep(i, inv));
    }

    // reduce f fully, tracking f = sum rep_f[i] gens[i] - sum q_k basis[k]
    auto reduce_tracked = [&](Poly f, std::vector<Poly> frep) {
        Poly out;
        while (!f.is_zero()) {
            int k = eng.find_reducer(f.lt().m, basis);
            if (k >= 0) {
                Scalar c = fld.div(f.lt().c, basis[k].lt().c);
                Monomial m = mono_div(f.lt().m, basis[k].lt().m);
                f = poly_sub(f, poly_mul_term(basis[k], c, m, fld), fld, order);
                for (std::size_t i = 0; i < n; ++i)
                    frep[i] = poly_sub(frep[i], poly_mul_term(rep[k][i], c, m, fld), fld, order);
            } else {
                out.terms.push_back(f.lt());
                f.terms.erase(f.terms.begin());
            }
        }
        return std::make_pair(out, frep);
    };

    // process every pair; no criteria, so zero reductions enumerate a full
    // generating set of syzygies of the raw basis (Schreyer)
    std::set<Pair> queue;
    auto push_pairs_for = [&](int t) {
        for (int i = 0; i < t; ++i)
            queue.insert(Pair{
                mono_lcm(basis[i].lt().m, basis[t].lt().m).total_degree(), i, t});
    };
    for (std::size_t t = 1; t < basis.size(); ++t) push_pairs_for(static_cast<int>(t));

    long pairsProcessed = 0;
    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        if (++pairsProcessed > budget.maxPairs)
            throw BudgetExceeded("tracked Groebner pair budget exceeded");
        if (p.deg > budget.maxDegree)
            throw BudgetExceeded("tracked Groebner degree budget exceeded");

        const Poly &a = basis[p.i], &b = basis[p.j];
        Monomial l = mono_lcm(a.lt().m, b.lt().m);
        Monomial ma = mono_div(l, a.lt().m), mb = mono_div(l, b.lt().m);
        Poly s = poly_sub(poly_mul_term(a, fld.one(), ma, fld),
                          poly_mul_term(b, fld.one(), mb, fld), fld, order);
        std::vector<Poly> srep(n);
        for (std::size_t t = 0; t < n; ++t)
            srep[t] = poly_sub(poly_mul_term(rep[p.i][t], fld.one(), ma, fld),
                               poly_mul_term(rep[p.j][t], fld.one(), mb, fld), fld, order);
        auto [h, hrep] = reduce_tracked(std::move(s), std::move(srep));
        if (h.is_zero()) {
            syz.push_back(std::move(hrep));
        } else {
            Scalar inv = fld.inv(h.lt().c);
            basis.push_back(poly_scale(h, inv, fld));
            for (auto& r : hrep) r = poly_scale(r, inv, fld);
            rep.push_back(std::move(hrep));
            push_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }

    std::vector<Poly> sorted = basis;
    std::sort(sorted.begin(), sorted.end(),
              [&](const Poly& x, const Poly& y) { return order.compare(x.lt().m, y.lt().m) < 0; });
    return TrackedBasis{GroebnerBasis{ring, order, std::move(sorted)}, std::move(basis),
                        std::move(rep), std::move(syz)};
}

Poly divide_tracked(const Poly& f, const TrackedBasis& tb, std::vector<Poly>& quotientsOut) {
    const RingPtr& ring = tb.basis.ring;
    const Field& fld = ring->field();
    const MonomialOrder& ord = tb.basis.order;
    Engine eng(ring, ord, default_budget());
    quotientsOut.assign(tb.rawElements.size(), Poly{});
    Poly p = poly_resort(f, ord);
    Poly rem;
    while (!p.is_zero()) {
        int k = eng.find_reducer(p.lt().m, tb.rawElements);
        if (k >= 0) {
            Scalar c = fld.div(p.lt().c, tb.rawElements[k].lt().c);
            Monomial m = mono_div(p.lt().m, tb.rawElements[k].lt().m);
            p = poly_sub(p, poly_mul_term(tb.rawElements[k], c, m, fld), fld, ord);
            quotientsOut[k] = poly_add(quotientsOut[k], poly_mul_term(poly_one(fld, ring->nvars()), c, m, fld),
                                       fld, ord);
        } else {
            rem.terms.push_back(p.lt());
            p.terms.erase(p.terms.begin());
        }
    }
    return poly_resort(rem, ring->grevlex());
}

}  // namespace blowup
