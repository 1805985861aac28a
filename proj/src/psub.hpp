/*
  This is psub.hpp, part of smallchar.

  Restricted (p-) subalgebra machinery over F_p for p in {2,3}: torus-stable
  subspaces spanned by full root spaces plus a toral lattice, closure under
  bracket, p-power and the divided powers of root directions, enumeration of
  the subalgebras strictly between a parabolic and the whole algebra, the
  canonical short-root ideal, simplicity testing, and the F4 weight-orbit
  bookkeeping behind the rank-two-edge case analysis.

  Toral coordinates depend on the chosen lattice form.  In the simply
  connected form a vector lists coefficients over H_{alpha_1}..H_{alpha_n};
  in the adjoint image form it lists coefficients over the basis dual to the
  simple roots, so a coroot turns into its row of the Cartan matrix and the
  pairing of a root against a toral vector reads off root coefficients.
*/

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "chevalley.hpp"

namespace smallchar {

enum class lattice_form { simply_connected, adjoint_image };

// Span of full root spaces g_gamma for gamma in root_part plus the toral
// subspace spanned mod p by the rows of toral_part.  The rows are kept in
// reduced echelon form, so equal subspaces compare equal componentwise.
struct TSubspace {
  const StructureConstants* sc = nullptr;
  long long p = 0;
  lattice_form form = lattice_form::simply_connected;
  std::set<int> root_part;
  std::vector<std::vector<long long>> toral_part;
};

TSubspace make_subspace(const StructureConstants& sc, long long p,
                        const std::set<int>& roots,
                        const std::vector<std::vector<long long>>& torals,
                        lattice_form form = lattice_form::simply_connected);

// Lie P_I: every positive root space, the negative ones with support inside
// I (simple root positions, 0-based), and the full toral subspace.
TSubspace lie_parabolic(const StructureConstants& sc, const std::set<int>& I,
                        long long p,
                        lattice_form form = lattice_form::simply_connected);
// The maximal parabolic omitting one simple root: I = all positions but one.
TSubspace lie_maximal_parabolic(const StructureConstants& sc, int alpha_pos,
                                long long p,
                                lattice_form form = lattice_form::simply_connected);
TSubspace lie_borel(const StructureConstants& sc, long long p,
                    lattice_form form = lattice_form::simply_connected);
TSubspace lie_full(const StructureConstants& sc, long long p,
                   lattice_form form = lattice_form::simply_connected);

int dim(const TSubspace& s);
bool subspace_equal(const TSubspace& a, const TSubspace& b);
bool subspace_leq(const TSubspace& a, const TSubspace& b);

// Closure under brackets of basis pairs and p-powers of basis vectors;
// Jacobson's formula reduces p-powers of sums to these.
bool is_p_subalgebra(const TSubspace& s);
// Additionally closed under bracketing with the whole algebra.
bool is_p_ideal(const TSubspace& s);

// Smallest extension of the seed closed under basis brackets, basis
// p-powers, and the divided powers (ad X_gamma)^k / k! of every positive
// root direction gamma present in it.  Positive directions carry full root
// subgroups for the subspaces of interest, so their one-parameter orbits
// must stay inside; negative directions are only present infinitesimally.
// A closure operator: extensive, monotone, idempotent.
TSubspace p_closure(const TSubspace& seed);

// All torus-stable p-subalgebras strictly between lower and the whole
// algebra that are stable under the divided powers of every root direction
// of lower.  Requires lower to contain the Borel subalgebra.  Results are
// sorted by dimension, then by root set.  Visiting more candidate sets than
// the cap raises a resource error.
std::vector<TSubspace> intermediate_p_subalgebras(const TSubspace& lower,
                                                  std::uint64_t cap = 1ull << 24);

// The ideal spanned by the short root spaces and the span of the short
// coroots.  Defined exactly when the diagram has an edge of multiplicity p
// (B, C, F4 with p = 2, G2 with p = 3); otherwise a precondition error.
TSubspace n_ideal(const StructureConstants& sc, long long p,
                  lattice_form form = lattice_form::simply_connected);

// True when the simply connected form has no toral center and the ideal
// generated by each root vector is everything.
bool is_simple_restricted(const StructureConstants& sc, long long p);

// Checks that every subspace spanned by root spaces and torals, closed
// under the divided powers of all root directions and different from the
// toral center, contains the short-root ideal.  Requires the edge
// hypothesis; ranks above the cap raise a resource error.
bool minimal_g_submodule_check(const StructureConstants& sc, long long p,
                               int rank_cap = 4);

struct ClaimReport {
  std::string claim_id;
  bool verified = false;
  std::string witness;
};

// For each maximal parabolic of F4, recomputes the weights of the quotient
// module, partitions them into Weyl orbits of the Levi, verifies the
// bracket implications between the orbit classes, and confirms that the
// only nonempty unions of classes closed under those implications are the
// short part and everything.  At p = 3 the short-to-long bracket with
// constant 2 joins the rule set and only the full union survives.
std::vector<ClaimReport> f4_orbit_partition_check(const StructureConstants& sc,
                                                  long long p = 2);

std::string reports_to_json(const std::vector<ClaimReport>& reports);

}  // namespace smallchar
