#ifndef BLOWUP_SYZYGY_HPP
#define BLOWUP_SYZYGY_HPP

#include "blowup/ideal.hpp"

namespace blowup {

// Presentation of an ideal on a fixed generator list: rows index the
// generators, columns the syzygies; (row vector of generators) * matrix = 0
// in the ring (i.e. modulo its relations).
struct PresentationMatrix {
    RingPtr ring;
    std::vector<Poly> generators;            // n entries
    std::vector<std::vector<Poly>> columns;  // each of length n

    std::size_t rows() const { return generators.size(); }
    std::size_t cols() const { return columns.size(); }
};

// Full syzygy module of the given generators over the presented ring,
// via representation-tracked Buchberger in the ambient ring with the ring
// relations adjoined as extra generators, then projected back.
PresentationMatrix syzygy_matrix(const RingPtr& ring, const std::vector<Poly>& gens);

// Ideal of all (size x size)-minors of a polynomial matrix, by cofactor
// expansion with memoization on column masks.
Ideal minors_ideal(const RingPtr& ring, const std::vector<std::vector<Poly>>& matrix, int size);

// Fitting ideal Fitt_i(I): (n-i)-minors of a presentation matrix on a
// minimal generating set (n = mu(I)); the unit ideal for i >= n, the zero
// ideal when n-i exceeds the number of syzygy columns.
Ideal fitting_ideal(const Ideal& I, int i);

// Exact membership of a vector in the column span of a presentation matrix,
// via the tag-variable trick: v in span(columns) iff sum v_i e_i lies in
// (sum c_i e_i : columns c) + (e_i e_j : all i,j) in R[e_1..e_n].
bool vector_in_column_span(const PresentationMatrix& M, const std::vector<Poly>& v);

}  // namespace blowup

#endif
