#ifndef BLOWUP_LP_HPP
#define BLOWUP_LP_HPP

#include <vector>

namespace blowup {

// Exact rational feasibility of
//   lambda_i >= 0,  sum_i lambda_i = 1,  sum_i lambda_i * V[i][j] <= a[j],
// i.e. membership of `a` in the Newton polyhedron conv(V) + R_{>=0}^n.
// Phase-1 simplex over mpq with Bland's rule; no floating point anywhere.
bool newton_polyhedron_contains(const std::vector<std::vector<int>>& V, const std::vector<int>& a);

}  // namespace blowup

#endif
