#include "blowup/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace blowup {

namespace {

using NumPoly = std::vector<long long>;  // coefficient vector, index = degree

NumPoly np_one() { return NumPoly{1}; }

void np_trim(NumPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

NumPoly np_add(const NumPoly& a, const NumPoly& b) {
    NumPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    np_trim(r);
    return r;
}

NumPoly np_mul(const NumPoly& a, const NumPoly& b) {
    if (a.empty() || b.empty()) return {};
    NumPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    np_trim(r);
    return r;
}

NumPoly np_shift(NumPoly a, long d) {
    if (a.empty()) return a;
    a.insert(a.begin(), static_cast<std::size_t>(d), 0);
    return a;
}

// 1 - t^d
NumPoly np_one_minus_power(long d) {
    NumPoly r(static_cast<std::size_t>(d) + 1, 0);
    r[0] = 1;
    r[static_cast<std::size_t>(d)] = -1;
    return r;
}

long long np_at_one(const NumPoly& a) {
    long long s = 0;
    for (long long c : a) s += c;
    return s;
}

// exact division by (1 - t); caller guarantees a(1) == 0
NumPoly np_div_one_minus_t(const NumPoly& a) {
    NumPoly q(a.size() ? a.size() - 1 : 0, 0);
    long long run = 0;
    for (std::size_t d = 0; d < q.size(); ++d) {
        run += a[d];
        q[d] = run;
    }
    np_trim(q);
    return q;
}

void minimalize_monomials(std::vector<Monomial>& gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool red = false;
        for (std::size_t j = 0; j < gens.size() && !red; ++j) {
            if (i == j) continue;
            if (mono_divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)) red = true;
        }
        if (!red) out.push_back(gens[i]);
    }
    gens = std::move(out);
}

// numerator of the Hilbert series of S/(gens), via pivot splitting on the
// exact sequence 0 -> S/(M:v)(-w_v) -> S/M -> S/(M+v) -> 0
NumPoly numerator(std::vector<Monomial> gens, const std::vector<long>& w) {
    minimalize_monomials(gens);
    if (gens.empty()) return np_one();
    for (const auto& g : gens)
        if (g.is_one()) return NumPoly{};  // unit ideal: zero ring

    bool allPure = true;
    for (const auto& g : gens) {
        int nz = 0;
        for (int e : g.e)
            if (e) ++nz;
        if (nz > 1) {
            allPure = false;
            break;
        }
    }
    if (allPure) {
        NumPoly r = np_one();
        for (const auto& g : gens) r = np_mul(r, np_one_minus_power(g.weighted_degree(w)));
        return r;
    }

    // pivot: the variable occurring in the most non-pure generators
    std::size_t nv = gens.front().nvars();
    std::vector<int> freq(nv, 0);
    for (const auto& g : gens) {
        int nz = 0;
        for (int e : g.e)
            if (e) ++nz;
        if (nz > 1)
            for (std::size_t i = 0; i < nv; ++i)
                if (g.e[i]) ++freq[i];
    }
    std::size_t v = std::max_element(freq.begin(), freq.end()) - freq.begin();

    std::vector<Monomial> plus = gens;  // M + (v)
    Monomial mv(nv);
    mv.e[v] = 1;
    plus.push_back(mv);
    std::vector<Monomial> colon;  // M : v
    colon.reserve(gens.size());
    for (auto g : gens) {
        if (g.e[v] > 0) --g.e[v];
        colon.push_back(std::move(g));
    }
    return np_add(numerator(std::move(plus), w), np_shift(numerator(std::move(colon), w), w[v]));
}

}  // namespace

HilbertSeries hilbert_from_monomials(std::vector<Monomial> gens, const std::vector<long>& weights) {
    HilbertSeries hs;
    hs.denomWeights = weights;
    hs.numerator = numerator(std::move(gens), weights);
    if (hs.numerator.empty()) {
        hs.dim = -1;  // zero ring
        hs.reducedNumeratorAtOne = 0;
        return hs;
    }
    NumPoly n = hs.numerator;
    int mult = 0;
    while (np_at_one(n) == 0) {
        n = np_div_one_minus_t(n);
        ++mult;
    }
    hs.dim = static_cast<int>(weights.size()) - mult;
    hs.reducedNumeratorAtOne = np_at_one(n);
    return hs;
}

std::vector<long long> HilbertSeries::coefficients(long upTo) const {
    std::vector<long long> c(static_cast<std::size_t>(upTo) + 1, 0);
    for (std::size_t d = 0; d < numerator.size() && d <= static_cast<std::size_t>(upTo); ++d)
        c[d] = numerator[d];
    for (long w : denomWeights)
        for (long d = w; d <= upTo; ++d) c[d] += c[d - w];
    return c;
}

bool HilbertSeries::equal_series(const HilbertSeries& other) const {
    if (denomWeights == other.denomWeights) return numerator == other.numerator;
    // cross-multiply
    NumPoly a = numerator;
    for (long w : other.denomWeights) a = np_mul(a, np_one_minus_power(w));
    NumPoly b = other.numerator;
    for (long w : denomWeights) b = np_mul(b, np_one_minus_power(w));
    return a == b;
}

bool HilbertSeries::equals_shifted_difference(const HilbertSeries& other, long d) const {
    if (denomWeights != other.denomWeights)
        throw std::invalid_argument("Hilbert series comparison across different rings");
    return numerator == np_mul(other.numerator, np_one_minus_power(d));
}

}  // namespace blowup
