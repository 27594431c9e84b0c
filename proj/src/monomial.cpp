#include "blowup/monomial.hpp"

#include <algorithm>

namespace blowup {

MonomialOrder MonomialOrder::lex(std::size_t n) { return MonomialOrder(Kind::lex, n); }
MonomialOrder MonomialOrder::grlex(std::size_t n) { return MonomialOrder(Kind::grlex, n); }
MonomialOrder MonomialOrder::grevlex(std::size_t n) { return MonomialOrder(Kind::grevlex, n); }

MonomialOrder MonomialOrder::elimination(std::size_t n, std::vector<int> firstBlock) {
    MonomialOrder o(Kind::elimination, n);
    std::sort(firstBlock.begin(), firstBlock.end());
    o.block_ = firstBlock;
    std::vector<char> in(n, 0);
    for (int i : firstBlock) {
        if (i < 0 || static_cast<std::size_t>(i) >= n)
            throw std::invalid_argument("elimination block index out of range");
        in[i] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!in[i]) o.rest_.push_back(static_cast<int>(i));
    return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<long> w) {
    MonomialOrder o(Kind::weighted, w.size());
    o.weights_ = std::move(w);
    return o;
}

namespace {

// graded-reverse-lex on the listed coordinates
int grevlex_on(const Monomial& a, const Monomial& b, const std::vector<int>& idx) {
    long da = 0, db = 0;
    for (int i : idx) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        int d = a.e[*it] - b.e[*it];
        if (d != 0) return d > 0 ? -1 : 1;  // larger exponent in the last position loses
    }
    return 0;
}

int lex_all(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        int d = a.e[i] - b.e[i];
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

std::vector<int> all_indices(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
    return v;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != nvars_ || b.nvars() != nvars_)
        throw std::invalid_argument("monomial/order variable count mismatch");
    switch (kind_) {
        case Kind::lex:
            return lex_all(a, b);
        case Kind::grlex: {
            long da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db ? -1 : 1;
            return lex_all(a, b);
        }
        case Kind::grevlex: {
            static thread_local std::vector<int> idx;
            if (idx.size() != nvars_) idx = all_indices(nvars_);
            return grevlex_on(a, b, idx);
        }
        case Kind::elimination: {
            int c = grevlex_on(a, b, block_);
            if (c != 0) return c;
            return grevlex_on(a, b, rest_);
        }
        case Kind::weighted: {
            long da = a.weighted_degree(weights_), db = b.weighted_degree(weights_);
            if (da != db) return da < db ? -1 : 1;
            static thread_local std::vector<int> idx;
            if (idx.size() != nvars_) idx = all_indices(nvars_);
            return grevlex_on(a, b, idx);
        }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    switch (kind_) {
        case Kind::lex: return "lex";
        case Kind::grlex: return "grlex";
        case Kind::grevlex: return "grevlex";
        case Kind::elimination: {
            std::string s = "elim:";
            for (int i : block_) s += std::to_string(i) + ",";
            return s;
        }
        case Kind::weighted: {
            std::string s = "wt:";
            for (long w : weights_) s += std::to_string(w) + ",";
            return s;
        }
    }
    return "?";
}

}  // namespace blowup
