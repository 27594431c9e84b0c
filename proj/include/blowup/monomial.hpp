#ifndef BLOWUP_MONOMIAL_HPP
#define BLOWUP_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace blowup {

// Exponent vector; its length must equal the variable count of the owning
// ring. Kept as a bare struct: polynomials are the unit of encapsulation.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    bool is_one() const {
        for (int x : e)
            if (x) return false;
        return true;
    }
    long total_degree() const { return std::accumulate(e.begin(), e.end(), 0L); }
    long weighted_degree(const std::vector<long>& w) const {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
        return d;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.e);
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(b.e);
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] -= a.e[i];
        if (r.e[i] < 0) throw std::domain_error("monomial division with negative exponent");
    }
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e);
    for (std::size_t i = 0; i < r.e.size(); ++i)
        if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

// A weighting of the ambient variables. Strictly positive weights for ring
// gradings; auxiliary gradings (e.g. T-degree with weight 0 on base
// variables) relax that, so positivity is checked by the callers that need
// it.
struct Grading {
    std::vector<long> weights;

    long degree(const Monomial& m) const { return m.weighted_degree(weights); }
};

// Total orders on monomials. All kinds are multiplicative well-orders;
// `elimination` puts every monomial involving a first-block variable above
// all monomials in the remaining variables (graded-reverse-lex inside each
// block).
class MonomialOrder {
public:
    enum class Kind { lex, grlex, grevlex, elimination, weighted };

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder grlex(std::size_t nvars);
    static MonomialOrder grevlex(std::size_t nvars);
    // firstBlock: indices of the variables to be eliminated (sorted set).
    static MonomialOrder elimination(std::size_t nvars, std::vector<int> firstBlock);
    // weight vector first, grevlex tie-break.
    static MonomialOrder weighted(std::vector<long> w);

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<int>& first_block() const { return block_; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // Stable identity for caching keyed by order.
    std::string key() const;

private:
    MonomialOrder(Kind k, std::size_t n) : kind_(k), nvars_(n) {}

    Kind kind_;
    std::size_t nvars_;
    std::vector<int> block_;       // elimination: first block, ascending
    std::vector<int> rest_;        // elimination: complement, ascending
    std::vector<long> weights_;    // weighted
};

}  // namespace blowup

#endif
