#include "blowup/syzygy.hpp"

#include <map>

namespace blowup {

PresentationMatrix syzygy_matrix(const RingPtr& ring, const std::vector<Poly>& gens) {
    const Field& fld = ring->field();
    const MonomialOrder& ord = ring->grevlex();
    const std::size_t n = gens.size();

    RingPtr freeAmbient = PresentedRing::polynomial(ring->var_names(), fld, ring->weights());
    std::vector<Poly> all = gens;
    for (const auto& r : ring->relations()) all.push_back(r);
    const std::size_t total = all.size();

    TrackedBasis tb = buchberger_tracked(all, freeAmbient, ord);
    const std::size_t s = tb.rawElements.size();

    // B: all[i] = sum_k B[i][k] * raw[k]
    std::vector<std::vector<Poly>> B(total);
    for (std::size_t i = 0; i < total; ++i) {
        Poly rem = divide_tracked(all[i], tb, B[i]);
        if (!rem.is_zero())
            throw InvariantViolation("generator failed to reduce against its own basis");
    }

    std::vector<std::vector<Poly>> syzAll;
    // rows of (Id - B*A)
    for (std::size_t i = 0; i < total; ++i) {
        std::vector<Poly> row(total);
        row[i] = poly_one(fld, ring->nvars());
        for (std::size_t k = 0; k < s; ++k)
            for (std::size_t j = 0; j < total; ++j)
                row[j] = poly_sub(row[j], poly_mul(B[i][k], tb.representation[k][j], fld, ord),
                                  fld, ord);
        syzAll.push_back(std::move(row));
    }
    for (const auto& z : tb.syzygies) syzAll.push_back(z);

    // project to the generator coordinates, canonicalize entries mod the
    // ring relations, drop zero columns and duplicates
    Ideal zero = Ideal::zero(ring);
    const bool hasRel = !ring->relations().empty();
    PresentationMatrix M;
    M.ring = ring;
    M.generators = gens;
    for (const auto& z : syzAll) {
        std::vector<Poly> col(z.begin(), z.begin() + static_cast<long>(n));
        bool zeroCol = true;
        for (auto& e : col) {
            if (hasRel) e = zero.nf(e);
            if (!e.is_zero()) zeroCol = false;
        }
        if (zeroCol) continue;
        bool dup = false;
        for (const auto& existing : M.columns) {
            bool same = true;
            for (std::size_t i = 0; i < n && same; ++i)
                if (!poly_eq(existing[i], col[i], fld)) same = false;
            if (same) {
                dup = true;
                break;
            }
        }
        if (!dup) M.columns.push_back(std::move(col));
    }
    return M;
}

namespace {

// Laplace expansion along successive rows of the selected submatrix,
// memoized on the remaining-column mask (the row is determined by it).
Poly subdeterminant(const std::vector<std::vector<const Poly*>>& sub, std::size_t row,
                    unsigned colMask, std::map<unsigned, Poly>& memo, const Field& fld,
                    const MonomialOrder& ord, std::size_t nvars) {
    if (colMask == 0) return poly_one(fld, nvars);
    auto it = memo.find(colMask);
    if (it != memo.end()) return it->second;
    Poly acc;
    int sign = 1;
    for (std::size_t c = 0; c < sub[row].size(); ++c) {
        if (!(colMask & (1u << c))) continue;
        if (!sub[row][c]->is_zero()) {
            Poly minor = subdeterminant(sub, row + 1, colMask & ~(1u << c), memo, fld, ord, nvars);
            Poly term = poly_mul(*sub[row][c], minor, fld, ord);
            acc = sign > 0 ? poly_add(acc, term, fld, ord) : poly_sub(acc, term, fld, ord);
        }
        sign = -sign;
    }
    memo.emplace(colMask, acc);
    return acc;
}

}  // namespace

Ideal minors_ideal(const RingPtr& ring, const std::vector<std::vector<Poly>>& matrix, int size) {
    const std::size_t nr = matrix.size();
    const std::size_t nc = nr ? matrix[0].size() : 0;
    if (size <= 0 || static_cast<std::size_t>(size) > nr || static_cast<std::size_t>(size) > nc)
        throw std::invalid_argument("minor size exceeds matrix dimensions");
    const Field& fld = ring->field();
    const MonomialOrder& ord = ring->grevlex();

    std::vector<Poly> gens;
    std::vector<int> rowSel(size), colSel(size);
    auto emitMinor = [&]() {
        std::vector<std::vector<const Poly*>> sub(size);
        for (int r = 0; r < size; ++r) {
            sub[r].resize(size);
            for (int c = 0; c < size; ++c) sub[r][c] = &matrix[rowSel[r]][colSel[c]];
        }
        std::map<unsigned, Poly> memo;
        gens.push_back(
            subdeterminant(sub, 0, (1u << size) - 1, memo, fld, ord, ring->nvars()));
    };
    // row and column subsets in lexicographic order
    auto colRec = [&](auto&& self, int start, int depth) -> void {
        if (depth == size) {
            emitMinor();
            return;
        }
        for (int c = start; c <= static_cast<int>(nc) - (size - depth); ++c) {
            colSel[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    auto rowRec = [&](auto&& self, int start, int depth) -> void {
        if (depth == size) {
            colRec(colRec, 0, 0);
            return;
        }
        for (int r = start; r <= static_cast<int>(nr) - (size - depth); ++r) {
            rowSel[depth] = r;
            self(self, r + 1, depth + 1);
        }
    };
    rowRec(rowRec, 0, 0);
    return Ideal(ring, std::move(gens));
}

Ideal fitting_ideal(const Ideal& I, int i) {
    if (i < 0) throw std::invalid_argument("Fitting index must be non-negative");
    MinimalGenerators mg = minimal_generators(I);
    const int n = static_cast<int>(mg.gens.size());
    if (i >= n) return Ideal::unit(I.ring());
    PresentationMatrix M = syzygy_matrix(I.ring(), mg.gens);
    const int k = n - i;
    if (k > static_cast<int>(M.cols())) return Ideal::zero(I.ring());
    std::vector<std::vector<Poly>> mat(M.rows());
    for (std::size_t r = 0; r < M.rows(); ++r) {
        mat[r].resize(M.cols());
        for (std::size_t c = 0; c < M.cols(); ++c) mat[r][c] = M.columns[c][r];
    }
    return minors_ideal(I.ring(), mat, k);
}

bool vector_in_column_span(const PresentationMatrix& M, const std::vector<Poly>& v) {
    const RingPtr& ring = M.ring;
    const Field& fld = ring->field();
    const std::size_t n = M.rows();
    if (v.size() != n) throw std::invalid_argument("vector length mismatch");

    std::vector<std::string> tags;
    std::vector<long> tagW;
    for (std::size_t i = 0; i < n; ++i) {
        tags.push_back("@e" + std::to_string(i + 1));
        tagW.push_back(1);
    }
    RingPtr ext = ring->extended(tags, tagW, false);
    const MonomialOrder& eord = ext->grevlex();
    std::vector<int> embed(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) embed[i] = static_cast<int>(i);

    auto vectorize = [&](const std::vector<Poly>& col) {
        Poly acc;
        for (std::size_t i = 0; i < n; ++i) {
            Poly e = ext->var(static_cast<int>(ring->nvars() + i));
            acc = poly_add(acc,
                           poly_mul(poly_embed(col[i], embed, ext->nvars(), fld, eord), e, fld,
                                    eord),
                           fld, eord);
        }
        return acc;
    };

    std::vector<Poly> gens;
    for (const auto& col : M.columns) gens.push_back(vectorize(col));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Monomial m(ext->nvars());
            m.e[ring->nvars() + i] += 1;
            m.e[ring->nvars() + j] += 1;
            Poly q;
            q.terms.push_back(Term{fld.one(), m});
            gens.push_back(q);
        }
    Ideal T(ext, std::move(gens));
    return T.contains(vectorize(v));
}

}  // namespace blowup
