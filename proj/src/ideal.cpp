#include "blowup/ideal.hpp"

#include <algorithm>

namespace blowup {

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.terms.front().m.nvars() != ring_->nvars())
            throw std::invalid_argument("generator does not live in the given ring");
        gens_.push_back(poly_resort(g, ring_->grevlex()));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    std::vector<Poly> g{poly_one(ring->field(), ring->nvars())};
    return Ideal(std::move(ring), std::move(g));
}

Ideal Ideal::maximal(RingPtr ring) {
    std::vector<Poly> g;
    for (std::size_t i = 0; i < ring->nvars(); ++i) g.push_back(ring->var(static_cast<int>(i)));
    return Ideal(std::move(ring), std::move(g));
}

const GroebnerBasis& Ideal::gb() const { return gb(ring_->grevlex()); }

const GroebnerBasis& Ideal::gb(const MonomialOrder& ord) const {
    const std::string key = ord.key();
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->byOrder.find(key);
        if (it != cache_->byOrder.end()) return *it->second;
    }
    auto computed = std::make_shared<GroebnerBasis>(buchberger(gens_, ring_, ord));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->byOrder.emplace(key, std::move(computed));
    return *it->second;
}

bool Ideal::contains_ideal(const Ideal& J) const {
    for (const auto& g : J.gens())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::equals(const Ideal& J) const {
    const auto& A = gb().elements;
    const auto& B = J.gb().elements;
    if (A.size() != B.size()) return false;
    for (std::size_t i = 0; i < A.size(); ++i)
        if (!poly_eq(A[i], B[i], ring_->field())) return false;
    return true;
}

bool Ideal::is_zero_ideal() const { return equals(Ideal::zero(ring_)); }

bool Ideal::is_homogeneous() const {
    Grading g = ring_->grading();
    for (const auto& b : gb().elements)
        if (!blowup::is_homogeneous(b, g)) return false;
    return true;
}

bool Ideal::is_monomial() const {
    if (!ring_->relations().empty()) return false;
    for (const auto& b : gb().elements)
        if (b.nterms() != 1) return false;
    return true;
}

std::vector<Monomial> Ideal::monomial_gens() const {
    if (!is_monomial()) throw std::domain_error("not a monomial ideal in a free ring");
    return leading_term_ideal(gb());
}

std::string Ideal::describe() const {
    return "ideal with " + std::to_string(gens_.size()) + " generators in " + ring_->describe();
}

// ---------------------------------------------------------------------------

namespace {

void check_same_ring(const Ideal& I, const Ideal& J, const char* what) {
    if (!same_ring(*I.ring(), *J.ring()))
        throw std::invalid_argument(std::string(what) + ": ideals live in different rings");
}

// cheap divisibility pruning for all-monomial generator lists
std::vector<Poly> monomial_prune(std::vector<Poly> gens, const Field& fld) {
    bool allMono = true;
    for (const auto& g : gens)
        if (g.nterms() != 1) {
            allMono = false;
            break;
        }
    if (!allMono) return gens;
    std::vector<Poly> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool red = false;
        for (std::size_t j = 0; j < gens.size() && !red; ++j) {
            if (i == j) continue;
            if (mono_divides(gens[j].lt().m, gens[i].lt().m) &&
                !(gens[i].lt().m == gens[j].lt().m && j > i))
                red = true;
        }
        if (!red) out.push_back(gens[i]);
    }
    return out;
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J, "sum");
    std::vector<Poly> g = I.gens();
    g.insert(g.end(), J.gens().begin(), J.gens().end());
    return Ideal(I.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J, "product");
    const auto& fld = I.ring()->field();
    const auto& ord = I.ring()->grevlex();
    std::vector<Poly> g;
    g.reserve(I.gens().size() * J.gens().size());
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) g.push_back(poly_mul(a, b, fld, ord));
    return Ideal(I.ring(), monomial_prune(std::move(g), fld));
}

Ideal ideal_power(const Ideal& I, int k) {
    if (k < 0) throw std::invalid_argument("negative ideal power");
    if (k == 0) return Ideal::unit(I.ring());
    Ideal acc = I;
    for (int i = 1; i < k; ++i) acc = ideal_product(acc, I);
    return acc;
}

RingPtr eliminated_ring(const RingPtr& ring, const std::vector<int>& varIdx) {
    std::vector<char> drop(ring->nvars(), 0);
    for (int i : varIdx) drop[i] = 1;
    std::vector<std::string> vars;
    std::vector<long> w;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (!drop[i]) {
            vars.push_back(ring->var_name(i));
            w.push_back(ring->weights()[i]);
        }
    std::vector<Poly> rel;
    MonomialOrder ord = MonomialOrder::grevlex(vars.size());
    std::vector<int> dropped(varIdx);
    for (const auto& r : ring->relations())
        rel.push_back(poly_contract(r, dropped, ring->field(), ord));
    return PresentedRing::presented(std::move(vars), ring->field(), std::move(w), std::move(rel),
                                    ring->is_domain());
}

Ideal ideal_eliminate(const Ideal& I, const std::vector<int>& varIdx, RingPtr target) {
    const RingPtr& ring = I.ring();
    for (const auto& r : ring->relations())
        for (const auto& t : r.terms)
            for (int v : varIdx)
                if (t.m.e[v] != 0)
                    throw std::domain_error(
                        "cannot eliminate a variable occurring in the ring relations");

    MonomialOrder ord = MonomialOrder::elimination(ring->nvars(), varIdx);
    const GroebnerBasis& G = I.gb(ord);
    std::vector<char> elim(ring->nvars(), 0);
    for (int v : varIdx) elim[v] = 1;

    RingPtr small = target ? target : eliminated_ring(ring, varIdx);
    if (target) {
        RingPtr expected = eliminated_ring(ring, varIdx);
        if (!same_ring(*target, *expected))
            throw std::invalid_argument("elimination target ring does not match");
    }
    std::vector<Poly> keep;
    for (const auto& g : G.elements) {
        bool pure = true;
        for (const auto& t : g.terms) {
            for (int v : varIdx)
                if (t.m.e[v] != 0) {
                    pure = false;
                    break;
                }
            if (!pure) break;
        }
        if (pure) keep.push_back(poly_contract(g, varIdx, ring->field(), small->grevlex()));
    }
    return Ideal(small, std::move(keep));
}

Ideal ideal_eliminate_free(const Ideal& I, const std::vector<int>& varIdx, RingPtr freeTarget) {
    const RingPtr& ring = I.ring();
    MonomialOrder ord = MonomialOrder::elimination(ring->nvars(), varIdx);
    const GroebnerBasis& G = I.gb(ord);

    std::vector<char> elim(ring->nvars(), 0);
    for (int v : varIdx) elim[v] = 1;
    std::vector<std::string> names;
    std::vector<long> w;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (!elim[i]) {
            names.push_back(ring->var_name(i));
            w.push_back(ring->weights()[i]);
        }
    RingPtr small =
        freeTarget ? freeTarget : PresentedRing::polynomial(std::move(names), ring->field(), w);
    if (freeTarget) {
        if (!freeTarget->relations().empty())
            throw std::invalid_argument("ideal_eliminate_free target must be a free ring");
        std::size_t k = 0;
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            if (!elim[i] && freeTarget->var_name(k++) != ring->var_name(i))
                throw std::invalid_argument("ideal_eliminate_free target variable mismatch");
        if (freeTarget->field() != ring->field())
            throw std::invalid_argument("ideal_eliminate_free target field mismatch");
    }
    std::vector<Poly> keep;
    for (const auto& g : G.elements) {
        bool pure = true;
        for (const auto& t : g.terms) {
            for (int v : varIdx)
                if (t.m.e[v] != 0) {
                    pure = false;
                    break;
                }
            if (!pure) break;
        }
        if (pure) keep.push_back(poly_contract(g, varIdx, ring->field(), small->grevlex()));
    }
    return Ideal(small, std::move(keep));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J, "intersect");
    const RingPtr& ring = I.ring();
    RingPtr ext = ring->extended({"@u"}, {1});
    const Field& fld = ring->field();
    const MonomialOrder& eord = ext->grevlex();
    const std::size_t n = ring->nvars();
    std::vector<int> embed(n);
    for (std::size_t i = 0; i < n; ++i) embed[i] = static_cast<int>(i);

    Poly u = ext->var(static_cast<int>(n));
    Poly oneMinusU = poly_sub(ext->one(), u, fld, eord);
    std::vector<Poly> gens;
    for (const auto& g : I.gens())
        gens.push_back(poly_mul(u, poly_embed(g, embed, n + 1, fld, eord), fld, eord));
    for (const auto& g : J.gens())
        gens.push_back(poly_mul(oneMinusU, poly_embed(g, embed, n + 1, fld, eord), fld, eord));
    Ideal E(ext, std::move(gens));
    return ideal_eliminate(E, {static_cast<int>(n)}, ring);
}

Poly poly_exact_divide(const Poly& f, const Poly& g, const RingPtr& ring) {
    if (g.is_zero()) throw std::domain_error("exact division by zero");
    const Field& fld = ring->field();
    const MonomialOrder& ord = ring->grevlex();
    Poly p = f;
    Poly q;
    while (!p.is_zero()) {
        if (!mono_divides(g.lt().m, p.lt().m))
            throw std::domain_error("exact division failed: not a multiple");
        Scalar c = fld.div(p.lt().c, g.lt().c);
        Monomial m = mono_div(p.lt().m, g.lt().m);
        q.terms.push_back(Term{c, m});
        p = poly_sub(p, poly_mul_term(g, c, m, fld), fld, ord);
    }
    return poly_normalize(std::move(q.terms), fld, ord);
}

namespace {

// ambient colon of the preimage by a single nonzero polynomial: the
// intersection with the ambient principal ideal (h), divided by h. Note the
// principal side must NOT adjoin the ring relations, so this builds the
// u-trick ideal in a relation-free copy of the ambient ring.
Ideal colon_by_element(const Ideal& I, const Poly& h) {
    const RingPtr& ring = I.ring();
    const Field& fld = ring->field();
    const std::size_t n = ring->nvars();
    RingPtr freeAmbient =
        PresentedRing::polynomial(ring->var_names(), fld, ring->weights());
    RingPtr ext = freeAmbient->extended({"@u"}, {1});
    const MonomialOrder& eord = ext->grevlex();
    std::vector<int> embed(n);
    for (std::size_t i = 0; i < n; ++i) embed[i] = static_cast<int>(i);

    Poly u = ext->var(static_cast<int>(n));
    Poly oneMinusU = poly_sub(ext->one(), u, fld, eord);
    std::vector<Poly> gens;
    for (const auto& g : I.gens())
        gens.push_back(poly_mul(u, poly_embed(g, embed, n + 1, fld, eord), fld, eord));
    for (const auto& r : ring->relations())
        gens.push_back(poly_mul(u, poly_embed(r, embed, n + 1, fld, eord), fld, eord));
    gens.push_back(poly_mul(oneMinusU, poly_embed(h, embed, n + 1, fld, eord), fld, eord));

    Ideal E(ext, std::move(gens));
    Ideal W = ideal_eliminate(E, {static_cast<int>(n)}, freeAmbient);
    std::vector<Poly> quot;
    for (const auto& w : W.gens()) quot.push_back(poly_exact_divide(w, h, freeAmbient));
    return Ideal(ring, std::move(quot));
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Ideal& J, bool* zeroDivisorWarning) {
    check_same_ring(I, J, "quotient");
    if (zeroDivisorWarning) *zeroDivisorWarning = false;
    std::vector<Poly> divisors;
    for (const auto& g : J.gens()) {
        Poly r = I.ring()->relations().empty() ? g : Ideal::zero(I.ring()).nf(g);
        if (!r.is_zero()) divisors.push_back(r);
    }
    if (divisors.empty()) {
        if (zeroDivisorWarning) *zeroDivisorWarning = true;
        return Ideal::unit(I.ring());
    }
    std::optional<Ideal> acc;
    for (const auto& h : divisors) {
        Ideal c = colon_by_element(I, h);
        acc = acc ? ideal_intersect(*acc, c) : c;
    }
    return *acc;
}

Saturation ideal_saturation(const Ideal& I, const Ideal& J) {
    Ideal cur = I;
    for (int k = 0;; ++k) {
        Ideal next = ideal_quotient(cur, J);
        if (next.equals(cur)) return Saturation{cur, k};
        cur = next;
        if (k > 1000) throw BudgetExceeded("saturation chain did not stabilize");
    }
}

MinimalGenerators minimal_generators(const Ideal& I) {
    if (!I.is_homogeneous())
        throw std::domain_error("minimal_generators requires a weight-homogeneous ideal");
    const RingPtr& ring = I.ring();
    Grading g = ring->grading();

    // reduce generators mod the ring relations, drop zeros
    std::vector<Poly> cands;
    Ideal zero = Ideal::zero(ring);
    for (const auto& c : I.gens()) {
        Poly r = ring->relations().empty() ? c : zero.nf(c);
        if (!r.is_zero()) cands.push_back(r);
    }
    std::stable_sort(cands.begin(), cands.end(), [&](const Poly& a, const Poly& b) {
        return weighted_degree_max(a, g) < weighted_degree_max(b, g);
    });

    MinimalGenerators out;
    for (const auto& c : cands) {
        Ideal kept(ring, out.gens);
        // store the reduced form: same ideal, same degree, tidier presentations
        Poly r = kept.nf(c);
        if (!r.is_zero()) {
            out.gens.push_back(poly_make_monic(r, ring->field()));
            out.censusByDegree[weighted_degree_max(r, g)]++;
        }
    }
    return out;
}

HilbertSeries hilbert_series(const Ideal& I) {
    if (!I.is_homogeneous())
        throw std::domain_error("Hilbert series requires a weight-homogeneous ideal");
    return hilbert_from_monomials(leading_term_ideal(I.gb()), I.ring()->weights());
}

int krull_dimension(const Ideal& I) { return hilbert_series(I).dim; }

int ring_dimension(const RingPtr& ring) { return krull_dimension(Ideal::zero(ring)); }

int height(const Ideal& I) {
    int rd = ring_dimension(I.ring());
    int qd = krull_dimension(I);
    return rd - qd;  // unit ideal: qd == -1, one more than any codimension
}

std::vector<Monomial> monomials_of_weighted_degree(const RingPtr& ring, long d) {
    std::vector<Monomial> out;
    Monomial cur(ring->nvars());
    const auto& w = ring->weights();
    // enumerate exponent vectors with sum e_i w_i == d
    auto rec = [&](auto&& self, std::size_t i, long rem) -> void {
        if (i + 1 == ring->nvars()) {
            if (rem % w[i] == 0) {
                cur.e[i] = static_cast<int>(rem / w[i]);
                out.push_back(cur);
                cur.e[i] = 0;
            }
            return;
        }
        for (long e = 0; e * w[i] <= rem; ++e) {
            cur.e[i] = static_cast<int>(e);
            self(self, i + 1, rem - e * w[i]);
        }
        cur.e[i] = 0;
    };
    if (ring->nvars() == 0) return out;
    rec(rec, 0, d);
    return out;
}

}  // namespace blowup
