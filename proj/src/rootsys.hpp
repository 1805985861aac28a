/*
  This is rootsys.hpp, part of smallchar.

  Reduced irreducible root systems in the Bourbaki numbering. A root is an
  integer coefficient vector over the simple basis. The Cartan matrices are
  embedded constants; the root list is generated from them by string closure.

  Conventions used throughout the library:

    - cartan(i,j) = <alpha_j, alpha_i^vee>, so the G2 matrix is
      [[2,-3],[-1,2]] with alpha_1 short.
    - positive roots are stored first, ordered by height and then
      lexicographically; the negative of index k is index k + npos.
    - the invariant inner product is scaled so short roots have squared
      length 2 (simply laced systems count as long by convention).
*/

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace smallchar {

struct SimpleType {
  char family = 0;  // 'A'..'G'
  int rank = 0;

  // Validates the pair; invalid combinations do not construct.
  SimpleType(char family, int rank);
  std::string name() const;  // "F4", "B3", ...
  bool simply_laced() const;
};

using Coeffs = std::vector<int>;

// Coefficient vectors of roots are pure-sign: all entries >= 0 or all <= 0.
struct Root {
  Coeffs c;
  explicit Root(Coeffs v);
  int height() const;
  bool positive() const { return height() > 0; }
  bool operator==(const Root&) const = default;
};

struct RootSystem {
  explicit RootSystem(SimpleType t) : type(t) {}

  SimpleType type;
  int n = 0;                 // rank
  std::vector<int> cartan;   // n*n, cartan[i*n+j] = <alpha_j, alpha_i^vee>
  std::vector<int> d;        // half squared lengths of the simple roots
  std::vector<Root> roots;   // positives first, then their negatives
  int npos = 0;
  std::vector<bool> islong;  // per root index

  int a(int i, int j) const { return cartan[i * n + j]; }
  const Root& root(int k) const { return roots[k]; }
  int index_of(const Coeffs& c) const;  // -1 when c is not a root
  bool is_root(const Coeffs& c) const { return index_of(c) >= 0; }
  int negate(int k) const { return k < npos ? k + npos : k - npos; }
  bool is_positive_index(int k) const { return k < npos; }

  // W-invariant form; integral with short length^2 = 2.
  int64_t inner(const Coeffs& x, const Coeffs& y) const;
  int64_t norm2(const Coeffs& x) const { return inner(x, x); }

  // <gamma, alpha_i^vee> for arbitrary integer vectors gamma
  int pairing_simple(const Coeffs& gamma, int i) const;
  // <gamma, delta^vee> for a root delta
  int pairing(const Coeffs& gamma, const Coeffs& delta) const;

  // gamma^vee in the simple-coroot basis; integral for every root.
  Coeffs coroot(const Coeffs& gamma) const;

 private:
  std::map<Coeffs, int> index_;
  friend RootSystem build_root_system(SimpleType);
};

RootSystem build_root_system(SimpleType t);

std::vector<int> support(const Root& gamma);

// s_i(gamma) = gamma - <gamma, alpha_i^vee> alpha_i
Root reflect(const RootSystem& rs, const Root& gamma, int i);
// reflection in an arbitrary root delta
Root reflect_by(const RootSystem& rs, const Root& gamma, const Root& delta);

// The delta-string through gamma runs from gamma - r delta to gamma + q delta.
// Requires gamma != +-delta. Always r - q = <gamma, delta^vee> and r + q <= 3.
std::pair<int, int> root_string(const RootSystem& rs, const Root& gamma,
                                const Root& delta);

// Orbit of a root under W, as a sorted list of root indices.
std::vector<int> weyl_orbit(const RootSystem& rs, int root_index);

int highest_root(const RootSystem& rs);
int highest_short_root(const RootSystem& rs);

std::vector<int> short_positive(const RootSystem& rs);
std::vector<int> long_positive(const RootSystem& rs);

// Coordinates in the standard epsilon basis, defined for families B and C.
std::vector<int> to_epsilon(const RootSystem& rs, const Coeffs& gamma);
Coeffs from_epsilon(const RootSystem& rs, const std::vector<int>& e);

std::string root_system_json(const RootSystem& rs);

}  // namespace smallchar
