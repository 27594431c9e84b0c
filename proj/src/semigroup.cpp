#include "blowup/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace blowup {

NumericalSemigroup::NumericalSemigroup(std::vector<long> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("semigroup needs at least one generator");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    for (long g : gens_)
        if (g <= 0) throw std::invalid_argument("semigroup generators must be positive");
    long g = gens_[0];
    for (long x : gens_) g = std::gcd(g, x);
    if (g != 1) throw std::invalid_argument("semigroup generators must have gcd 1");

    // Frobenius < g_min * g_max always (two-generator bound dominates)
    long bound = gens_.front() * gens_.back() + 2 * gens_.back() + 2;
    member_.assign(static_cast<std::size_t>(bound) + 1, 0);
    member_[0] = 1;
    for (long n = 1; n <= bound; ++n)
        for (long gg : gens_)
            if (n >= gg && member_[static_cast<std::size_t>(n - gg)]) {
                member_[static_cast<std::size_t>(n)] = 1;
                break;
            }
    frobenius_ = -1;
    for (long n = 0; n <= bound; ++n)
        if (!member_[static_cast<std::size_t>(n)]) frobenius_ = n;
}

bool NumericalSemigroup::contains(long n) const {
    if (n < 0) return false;
    if (n >= static_cast<long>(member_.size())) return true;  // beyond the conductor
    return member_[static_cast<std::size_t>(n)] != 0;
}

std::vector<long> NumericalSemigroup::apery() const {
    long m = multiplicity();
    std::vector<long> ap(static_cast<std::size_t>(m), -1);
    for (long r = 0; r < m; ++r)
        for (long n = r;; n += m)
            if (contains(n)) {
                ap[static_cast<std::size_t>(r)] = n;
                break;
            }
    return ap;
}

// ---------------------------------------------------------------------------

namespace {

long max_exponent(const SemigroupIdeal& A) {
    return A.gens.empty() ? 0 : *std::max_element(A.gens.begin(), A.gens.end());
}

// membership table of the ideal set gens + S, up to `bound`
std::vector<char> ideal_set_table(const SemigroupIdeal& A, long bound) {
    std::vector<char> t(static_cast<std::size_t>(bound) + 1, 0);
    for (long e : A.gens)
        for (long n = e; n <= bound; ++n)
            if (n == e || A.S->contains(n - e)) t[static_cast<std::size_t>(n)] = 1;
    return t;
}

// minimal generators of an ideal set given by its table: n is redundant iff
// n - s is in the set for some semigroup generator s
std::vector<long> minimalize_set(const SemigroupPtr& S, const std::vector<char>& table) {
    std::vector<long> out;
    for (long n = 0; n < static_cast<long>(table.size()); ++n) {
        if (!table[static_cast<std::size_t>(n)]) continue;
        bool red = false;
        for (long s : S->gens())
            if (n - s >= 0 && table[static_cast<std::size_t>(n - s)]) {
                red = true;
                break;
            }
        if (!red) out.push_back(n);
    }
    return out;
}

long truncation_bound(const SemigroupPtr& S, long maxExp) {
    return S->conductor() + 2 * maxExp + 2 * S->gens().back();
}

}  // namespace

SemigroupIdeal semigroup_ideal(SemigroupPtr S, std::vector<long> exponents) {
    for (long e : exponents)
        if (!S->contains(e))
            throw std::invalid_argument("exponent " + std::to_string(e) +
                                        " does not lie in the semigroup");
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    SemigroupIdeal A{std::move(S), std::move(exponents)};
    long bound = truncation_bound(A.S, max_exponent(A));
    A.gens = minimalize_set(A.S, ideal_set_table(A, bound));
    return A;
}

SemigroupIdeal sg_product(const SemigroupIdeal& A, const SemigroupIdeal& B) {
    std::vector<long> sums;
    for (long a : A.gens)
        for (long b : B.gens) sums.push_back(a + b);
    return semigroup_ideal(A.S, std::move(sums));
}

SemigroupIdeal sg_power(const SemigroupIdeal& A, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    if (k == 0) return semigroup_ideal(A.S, {0});
    SemigroupIdeal acc = A;
    for (int i = 1; i < k; ++i) acc = sg_product(acc, A);
    return acc;
}

SemigroupIdeal sg_intersect(const SemigroupIdeal& A, const SemigroupIdeal& B) {
    long bound = truncation_bound(A.S, std::max(max_exponent(A), max_exponent(B)));
    std::vector<char> ta = ideal_set_table(A, bound), tb = ideal_set_table(B, bound);
    std::vector<char> t(ta.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = ta[i] && tb[i];
    SemigroupIdeal out{A.S, minimalize_set(A.S, t)};
    return out;
}

SemigroupIdeal sg_colon(const SemigroupIdeal& A, const SemigroupIdeal& B) {
    long bound = truncation_bound(A.S, max_exponent(A) + max_exponent(B));
    std::vector<char> ta = ideal_set_table(A, bound);
    std::vector<char> t(ta.size(), 0);
    long lim = bound - max_exponent(B);
    for (long n = 0; n <= lim; ++n) {
        if (!A.S->contains(n)) continue;
        bool all = true;
        for (long b : B.gens)
            if (!ta[static_cast<std::size_t>(n + b)]) {
                all = false;
                break;
            }
        if (all) t[static_cast<std::size_t>(n)] = 1;
    }
    SemigroupIdeal out{A.S, minimalize_set(A.S, t)};
    return out;
}

SemigroupIdeal sg_closure(const SemigroupIdeal& A) {
    if (A.gens.empty()) return A;
    long a = A.gens.front();
    long bound = truncation_bound(A.S, a);
    std::vector<char> t(static_cast<std::size_t>(bound) + 1, 0);
    for (long n = a; n <= bound; ++n)
        if (A.S->contains(n)) t[static_cast<std::size_t>(n)] = 1;
    SemigroupIdeal out{A.S, minimalize_set(A.S, t)};
    return out;
}

bool sg_equal(const SemigroupIdeal& A, const SemigroupIdeal& B) { return A.gens == B.gens; }

SemigroupIdeal sg_maximal(SemigroupPtr S) {
    std::vector<long> g = S->gens();
    return semigroup_ideal(std::move(S), std::move(g));
}

RingPtr toric_presentation(const SemigroupPtr& S, const Field& fld) {
    const auto& g = S->gens();
    std::vector<std::string> vars;
    std::vector<long> w;
    for (std::size_t i = 0; i < g.size(); ++i) {
        vars.push_back("x" + std::to_string(i + 1));
        w.push_back(g[i]);
    }
    RingPtr free = PresentedRing::polynomial(vars, fld, w);
    RingPtr ext = free->extended({"@t"}, {1});
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Poly tt = ext->var(static_cast<int>(g.size()), static_cast<int>(g[i]));
        gens.push_back(poly_sub(ext->var(static_cast<int>(i)), tt, fld, ext->grevlex()));
    }
    Ideal E(ext, std::move(gens));
    Ideal P = ideal_eliminate(E, {static_cast<int>(g.size())}, free);
    return PresentedRing::presented(vars, fld, w, P.gens(), true);
}

Poly toric_monomial(const SemigroupPtr& S, const RingPtr& toricRing, long exponent) {
    const auto& g = S->gens();
    std::vector<int> c(g.size(), 0);
    // lexicographically least factorization: minimize c_1, then c_2, ...
    auto rec = [&](auto&& self, std::size_t i, long rem) -> bool {
        if (i + 1 == g.size()) {
            if (rem % g[i] != 0) return false;
            c[i] = static_cast<int>(rem / g[i]);
            return true;
        }
        for (long e = 0; e * g[i] <= rem; ++e) {
            c[i] = static_cast<int>(e);
            if (self(self, i + 1, rem - e * g[i])) return true;
        }
        c[i] = 0;
        return false;
    };
    if (exponent < 0 || !rec(rec, 0, exponent))
        throw std::domain_error("exponent " + std::to_string(exponent) +
                                " is not expressible in the toric coordinates");
    Monomial m(toricRing->nvars());
    for (std::size_t i = 0; i < g.size(); ++i) m.e[i] = c[i];
    Poly p;
    p.terms.push_back(Term{toricRing->field().one(), std::move(m)});
    return p;
}

Ideal lift_to_toric(const SemigroupIdeal& A, const RingPtr& toricRing) {
    std::vector<Poly> gens;
    for (long e : A.gens) gens.push_back(toric_monomial(A.S, toricRing, e));
    return Ideal(toricRing, std::move(gens));
}

}  // namespace blowup
