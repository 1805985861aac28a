/*
  This is chevalley.hpp, part of smallchar.

  Integral structure constants for the simple Lie algebras, and exact
  arithmetic in the resulting Z-form and its reductions mod p.

  Basis order is (X_gamma for every root, in root-index order, then
  H_{alpha_1}..H_{alpha_n}).  The constants satisfy the classical relations:
  [H_i, X_gamma] = <gamma, alpha_i^vee> X_gamma, [X_gamma, X_{-gamma}] is
  the coroot of gamma over the H_i, and [X_gamma, X_delta] = N(gamma,delta)
  X_{gamma+delta} with |N| = r+1 read off the delta-string through gamma.
  Signs come from the extraspecial-pair normalization: for each positive sum
  the least special pair in the height-then-lex order gets the plus sign.
*/

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rootsys.hpp"

namespace smallchar {

struct StructureConstants {
  explicit StructureConstants(RootSystem r) : rs(std::move(r)) {}

  RootSystem rs;
  std::vector<int> nmat;     // [a * nroots + b] = N(a,b); 0 when a+b is not a root
  std::vector<Coeffs> hvec;  // per positive root: its coroot over the simple basis

  int nroots() const { return int(rs.roots.size()); }
  int dim() const { return nroots() + rs.n; }
  int N(int a, int b) const { return nmat[a * nroots() + b]; }
  // Coroot of an arbitrary root index, with sign.
  Coeffs h_of(int k) const;
};

// Builds the table and verifies the Jacobi identity over Z on all basis
// triples; any violation aborts the construction.
StructureConstants compute_structure_constants(const RootSystem& rs);

// An element of the Lie algebra over Z (p = 0) or over F_p.
struct LieElement {
  long long p = 0;
  std::map<int, long long> root_coeffs;  // root index -> coefficient, never zero
  std::vector<long long> toral;          // over H_{alpha_1}..H_{alpha_n}
};

LieElement lie_zero(const StructureConstants& sc, long long p);
LieElement lie_root(const StructureConstants& sc, long long p, int root_index,
                    long long c = 1);
LieElement lie_toral(const StructureConstants& sc, long long p,
                     const std::vector<long long>& t);
LieElement lie_add(const StructureConstants& sc, const LieElement& x,
                   const LieElement& y);
LieElement lie_scale(const StructureConstants& sc, const LieElement& x,
                     long long c);
bool lie_is_zero(const LieElement& x);
bool lie_equal(const LieElement& x, const LieElement& y);

LieElement bracket(const StructureConstants& sc, const LieElement& x,
                   const LieElement& y);

// x^[p] for p in {2,3}; other characteristics are rejected.  Computed from
// the basis rules X_gamma^[p] = 0 and H^[p] = H by Jacobson's formula.
LieElement p_power(const StructureConstants& sc, const LieElement& x);

// Dense dim() x dim() matrix of ad(x), row-major, reduced mod x.p.
std::vector<long long> ad_matrix(const StructureConstants& sc,
                                 const LieElement& x);

// Divided powers (ad X_gamma)^k / k! over Z for k = 0..3.  The fourth power
// vanishes and every division is exact; both facts are asserted.
std::array<std::vector<long long>, 4> exp_ad_divided(
    const StructureConstants& sc, int root_index);

// exp(lambda ad X_gamma) as a dense matrix over F_p (p = 0 for Z).
std::vector<long long> exp_ad_root(const StructureConstants& sc,
                                   int root_index, long long lambda,
                                   long long p);

std::string structure_constants_csv(const StructureConstants& sc);

}  // namespace smallchar
