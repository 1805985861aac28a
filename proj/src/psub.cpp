/*
  This is psub.cpp, part of smallchar.

  Everything here manipulates torus-stable subspaces: unions of full root
  spaces together with a subspace of the toral part, represented by root
  index sets and reduced echelon bases mod p.  Brackets between root spaces
  reduce to the integral structure constants, brackets with torals reduce to
  pairings, and the divided powers of ad along a root direction reduce to
  products of string constants divided by factorials, all of which stay
  exact until the final reduction mod p.
*/

#include "psub.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <sstream>

#include "json.hpp"

namespace smallchar {

namespace {

long long mod_p(long long v, long long p) { return ((v % p) + p) % p; }

// Reduced echelon basis of a subspace of F_p^n, rows ordered by pivot.
// Canonical: two spans are equal exactly when their row lists are equal.
struct FpSpan {
  long long p = 0;
  int n = 0;
  std::vector<std::vector<long long>> rows;

  FpSpan(long long p_, int n_) : p(p_), n(n_) {}

  static int pivot_of(const std::vector<long long>& r) {
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) return int(i);
    return -1;
  }

  std::vector<long long> reduce(std::vector<long long> v) const {
    for (auto& x : v) x = mod_p(x, p);
    for (const auto& r : rows) {
      int piv = pivot_of(r);
      if (v[piv] != 0) {
        long long c = v[piv];
        for (int i = 0; i < n; ++i) v[i] = mod_p(v[i] - c * r[i], p);
      }
    }
    return v;
  }

  bool contains(const std::vector<long long>& v) const {
    auto w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; });
  }

  // Returns true when the rank grows.
  bool add(const std::vector<long long>& v) {
    auto w = reduce(v);
    int piv = pivot_of(w);
    if (piv < 0) return false;
    long long inv = 1;
    while (mod_p(inv * w[piv], p) != 1) ++inv;
    for (auto& x : w) x = mod_p(x * inv, p);
    for (auto& r : rows) {
      if (r[piv] != 0) {
        long long c = r[piv];
        for (int i = 0; i < n; ++i) r[i] = mod_p(r[i] - c * w[i], p);
      }
    }
    rows.push_back(w);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return pivot_of(a) < pivot_of(b); });
    return true;
  }

  int rank() const { return int(rows.size()); }
};

void validate(const TSubspace& s) {
  if (!s.sc) fail(errc::invalid_argument, "subspace carries no structure constants");
  if (s.p != 2 && s.p != 3)
    fail(errc::unsupported_characteristic, "characteristic must be 2 or 3");
}

// <delta, t> in the coordinates of the given form.
long long toral_pairing(const RootSystem& rs, lattice_form form,
                        const Coeffs& delta, const std::vector<long long>& t) {
  long long s = 0;
  for (int i = 0; i < rs.n; ++i) {
    if (t[i] == 0) continue;
    long long f = form == lattice_form::simply_connected ? rs.pairing_simple(delta, i)
                                                         : delta[i];
    s += t[i] * f;
  }
  return s;
}

// Coordinates of the coroot of root k.  In the adjoint image form the
// simple coroot alpha_i^vee becomes row i of the Cartan matrix.
std::vector<long long> coroot_vec(const StructureConstants& sc, lattice_form form,
                                  int k) {
  Coeffs h = sc.h_of(k);
  std::vector<long long> v(h.begin(), h.end());
  if (form == lattice_form::adjoint_image) {
    std::vector<long long> w(sc.rs.n, 0);
    for (int j = 0; j < sc.rs.n; ++j)
      for (int i = 0; i < sc.rs.n; ++i) w[j] += v[i] * sc.rs.a(i, j);
    v = w;
  }
  return v;
}

// Coefficient of X_{a+kg} in (ad X_g)^k / k! X_a for a != g, -g; the target
// index lands in *target, or -1 when the image vanishes over Z.  The product
// of string constants (r+1)(r+2)..(r+k) is divisible by k!.
long long divided_coeff(const StructureConstants& sc, int g, int a, int k,
                        int* target) {
  static const long long fact[4] = {1, 1, 2, 6};
  const RootSystem& rs = sc.rs;
  long long c = 1;
  int cur = a;
  for (int j = 0; j < k; ++j) {
    Coeffs nx = rs.root(cur).c;
    const Coeffs& gg = rs.root(g).c;
    for (int i = 0; i < rs.n; ++i) nx[i] += gg[i];
    int ni = rs.index_of(nx);
    if (ni < 0) {
      *target = -1;
      return 0;
    }
    c *= sc.N(g, cur);
    cur = ni;
  }
  check(c % fact[k] == 0, "divided power coefficient not integral");
  *target = cur;
  return c / fact[k];
}

FpSpan span_of(const TSubspace& s) {
  FpSpan sp(s.p, s.sc->rs.n);
  for (const auto& r : s.toral_part) sp.add(r);
  return sp;
}

TSubspace assemble(const StructureConstants& sc, long long p, lattice_form form,
                   std::set<int> roots, const FpSpan& torals) {
  TSubspace s;
  s.sc = &sc;
  s.p = p;
  s.form = form;
  s.root_part = std::move(roots);
  s.toral_part = torals.rows;
  return s;
}

std::vector<std::vector<long long>> identity_rows(int n) {
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  return rows;
}

bool has_edge_of_multiplicity_p(const RootSystem& rs, long long p) {
  char f = rs.type.family;
  return (p == 2 && (f == 'B' || f == 'C' || f == 'F')) || (p == 3 && f == 'G');
}

// Rank of the Cartan matrix mod p; a deficiency means central torals.
int cartan_rank_mod_p(const RootSystem& rs, long long p) {
  int n = rs.n;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = mod_p(rs.a(i, j), p);
  FpSpan sp(p, n);
  for (auto& r : m) sp.add(r);
  return sp.rank();
}

// t is central exactly when it pairs to zero with every simple root, in the
// simply connected coordinates this means t times the Cartan matrix is zero.
bool toral_is_central(const RootSystem& rs, long long p,
                      const std::vector<long long>& t) {
  for (int j = 0; j < rs.n; ++j) {
    long long s = 0;
    for (int i = 0; i < rs.n; ++i) s += t[i] * rs.a(i, j);
    if (mod_p(s, p) != 0) return false;
  }
  return true;
}

}  // namespace

TSubspace make_subspace(const StructureConstants& sc, long long p,
                        const std::set<int>& roots,
                        const std::vector<std::vector<long long>>& torals,
                        lattice_form form) {
  if (p != 2 && p != 3)
    fail(errc::unsupported_characteristic, "characteristic must be 2 or 3");
  for (int k : roots)
    if (k < 0 || k >= sc.nroots()) fail(errc::invalid_argument, "root index out of range");
  FpSpan sp(p, sc.rs.n);
  for (const auto& t : torals) {
    if (int(t.size()) != sc.rs.n)
      fail(errc::invalid_argument, "toral vector has wrong length");
    sp.add(t);
  }
  return assemble(sc, p, form, roots, sp);
}

TSubspace lie_parabolic(const StructureConstants& sc, const std::set<int>& I,
                        long long p, lattice_form form) {
  if (p != 2 && p != 3)
    fail(errc::unsupported_characteristic, "characteristic must be 2 or 3");
  for (int i : I)
    if (i < 0 || i >= sc.rs.n) fail(errc::invalid_argument, "simple position out of range");
  std::set<int> roots;
  for (int k = 0; k < sc.rs.npos; ++k) roots.insert(k);
  for (int k = sc.rs.npos; k < sc.nroots(); ++k) {
    bool inside = true;
    for (int i : support(sc.rs.root(k)))
      if (!I.count(i)) {
        inside = false;
        break;
      }
    if (inside) roots.insert(k);
  }
  TSubspace s;
  s.sc = &sc;
  s.p = p;
  s.form = form;
  s.root_part = std::move(roots);
  s.toral_part = identity_rows(sc.rs.n);
  return s;
}

TSubspace lie_maximal_parabolic(const StructureConstants& sc, int alpha_pos,
                                long long p, lattice_form form) {
  if (alpha_pos < 0 || alpha_pos >= sc.rs.n)
    fail(errc::invalid_argument, "simple position out of range");
  std::set<int> I;
  for (int i = 0; i < sc.rs.n; ++i)
    if (i != alpha_pos) I.insert(i);
  return lie_parabolic(sc, I, p, form);
}

TSubspace lie_borel(const StructureConstants& sc, long long p, lattice_form form) {
  return lie_parabolic(sc, {}, p, form);
}

TSubspace lie_full(const StructureConstants& sc, long long p, lattice_form form) {
  std::set<int> I;
  for (int i = 0; i < sc.rs.n; ++i) I.insert(i);
  return lie_parabolic(sc, I, p, form);
}

int dim(const TSubspace& s) {
  validate(s);
  return int(s.root_part.size()) + int(s.toral_part.size());
}

bool subspace_equal(const TSubspace& a, const TSubspace& b) {
  validate(a);
  validate(b);
  if (a.sc != b.sc || a.p != b.p || a.form != b.form)
    fail(errc::invalid_argument, "subspaces live in different algebras");
  return a.root_part == b.root_part && a.toral_part == b.toral_part;
}

bool subspace_leq(const TSubspace& a, const TSubspace& b) {
  validate(a);
  validate(b);
  if (a.sc != b.sc || a.p != b.p || a.form != b.form)
    fail(errc::invalid_argument, "subspaces live in different algebras");
  if (!std::includes(b.root_part.begin(), b.root_part.end(), a.root_part.begin(),
                     a.root_part.end()))
    return false;
  FpSpan sp = span_of(b);
  for (const auto& t : a.toral_part)
    if (!sp.contains(t)) return false;
  return true;
}

bool is_p_subalgebra(const TSubspace& s) {
  validate(s);
  const StructureConstants& sc = *s.sc;
  const RootSystem& rs = sc.rs;
  FpSpan torals = span_of(s);
  std::vector<int> rl(s.root_part.begin(), s.root_part.end());
  // Root pair brackets; toral brackets vanish, torals act on root spaces by
  // scalars, basis p-powers are zero on root vectors and fix torals, and
  // Jacobson's formula reduces p-powers of sums to brackets.
  for (size_t x = 0; x < rl.size(); ++x)
    for (size_t y = x + 1; y < rl.size(); ++y) {
      int a = rl[x], b = rl[y];
      if (b == rs.negate(a)) {
        if (!torals.contains(coroot_vec(sc, s.form, a))) return false;
        continue;
      }
      Coeffs sum = rs.root(a).c;
      for (int i = 0; i < rs.n; ++i) sum[i] += rs.root(b).c[i];
      int idx = rs.index_of(sum);
      if (idx >= 0 && mod_p(sc.N(a, b), s.p) != 0 && !s.root_part.count(idx))
        return false;
    }
  return true;
}

bool is_p_ideal(const TSubspace& s) {
  if (!is_p_subalgebra(s)) return false;
  const StructureConstants& sc = *s.sc;
  const RootSystem& rs = sc.rs;
  FpSpan torals = span_of(s);
  for (int g = 0; g < sc.nroots(); ++g) {
    if (s.root_part.count(rs.negate(g)) && !torals.contains(coroot_vec(sc, s.form, g)))
      return false;
    for (int a : s.root_part) {
      if (a == g || a == rs.negate(g)) continue;
      Coeffs sum = rs.root(a).c;
      for (int i = 0; i < rs.n; ++i) sum[i] += rs.root(g).c[i];
      int idx = rs.index_of(sum);
      if (idx >= 0 && mod_p(sc.N(g, a), s.p) != 0 && !s.root_part.count(idx))
        return false;
    }
    for (const auto& t : s.toral_part)
      if (mod_p(toral_pairing(rs, s.form, rs.root(g).c, t), s.p) != 0 &&
          !s.root_part.count(g))
        return false;
  }
  return true;
}

TSubspace p_closure(const TSubspace& seed) {
  validate(seed);
  const StructureConstants& sc = *seed.sc;
  const RootSystem& rs = sc.rs;
  std::set<int> roots = seed.root_part;
  FpSpan torals(seed.p, rs.n);
  for (const auto& t : seed.toral_part) torals.add(t);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> rl(roots.begin(), roots.end());
    for (size_t x = 0; x < rl.size(); ++x)
      for (size_t y = x + 1; y < rl.size(); ++y) {
        int a = rl[x], b = rl[y];
        if (b == rs.negate(a)) {
          if (torals.add(coroot_vec(sc, seed.form, a))) changed = true;
          continue;
        }
        Coeffs sum = rs.root(a).c;
        for (int i = 0; i < rs.n; ++i) sum[i] += rs.root(b).c[i];
        int idx = rs.index_of(sum);
        if (idx >= 0 && mod_p(sc.N(a, b), seed.p) != 0 && !roots.count(idx)) {
          roots.insert(idx);
          changed = true;
        }
      }
    // One-parameter orbits of the positive directions present: close under
    // the divided squares and cubes as well, the brackets were done above.
    for (int g : rl) {
      if (!rs.is_positive_index(g)) continue;
      for (int a : rl) {
        if (a == g) continue;
        if (a == rs.negate(g)) {
          if (torals.add(coroot_vec(sc, seed.form, g))) changed = true;
          continue;
        }
        for (int k = 2; k <= 3; ++k) {
          int tgt = -1;
          long long c = divided_coeff(sc, g, a, k, &tgt);
          if (tgt >= 0 && mod_p(c, seed.p) != 0 && !roots.count(tgt)) {
            roots.insert(tgt);
            changed = true;
          }
        }
      }
    }
  }
  return assemble(sc, seed.p, seed.form, std::move(roots), torals);
}

std::vector<TSubspace> intermediate_p_subalgebras(const TSubspace& lower,
                                                  std::uint64_t cap) {
  validate(lower);
  const StructureConstants& sc = *lower.sc;
  const RootSystem& rs = sc.rs;
  for (int k = 0; k < rs.npos; ++k)
    if (!lower.root_part.count(k))
      fail(errc::precondition, "lower bound must contain the Borel subalgebra");
  if (int(lower.toral_part.size()) != rs.n)
    fail(errc::precondition, "lower bound must contain the full toral subspace");

  const int R = sc.nroots();
  FpSpan full(lower.p, rs.n);
  for (const auto& t : identity_rows(rs.n)) full.add(t);

  auto closure_roots = [&](const std::set<int>& roots) {
    return p_closure(assemble(sc, lower.p, lower.form, roots, full)).root_part;
  };

  std::uint64_t examined = 0;
  std::set<std::set<int>> visited;
  std::deque<std::set<int>> queue;
  std::set<int> base = closure_roots(lower.root_part);
  visited.insert(base);
  queue.push_back(base);
  while (!queue.empty()) {
    std::set<int> cur = queue.front();
    queue.pop_front();
    for (int m = rs.npos; m < R; ++m) {
      if (cur.count(m)) continue;
      if (++examined > cap)
        fail(errc::resource_limit, "candidate set cap exceeded");
      std::set<int> seed = cur;
      seed.insert(m);
      std::set<int> cl = closure_roots(seed);
      if (visited.insert(cl).second) queue.push_back(cl);
    }
  }

  // Keep the strict intermediates whose root set is carried into itself by
  // every one-parameter orbit attached to a root direction of lower, the
  // negative ones included.
  std::vector<std::set<int>> keep;
  for (const auto& s : visited) {
    if (int(s.size()) == R || s == lower.root_part) continue;
    bool stable = true;
    for (int g : lower.root_part) {
      for (int a : s) {
        if (a == g || a == rs.negate(g)) continue;
        for (int k = 1; k <= 3 && stable; ++k) {
          int tgt = -1;
          long long c = divided_coeff(sc, g, a, k, &tgt);
          if (tgt >= 0 && mod_p(c, lower.p) != 0 && !s.count(tgt)) stable = false;
        }
        if (!stable) break;
      }
      if (!stable) break;
    }
    if (stable) keep.push_back(s);
  }
  std::sort(keep.begin(), keep.end(), [](const std::set<int>& a, const std::set<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  std::vector<TSubspace> out;
  for (auto& s : keep) out.push_back(assemble(sc, lower.p, lower.form, std::move(s), full));
  return out;
}

TSubspace n_ideal(const StructureConstants& sc, long long p, lattice_form form) {
  if (p != 2 && p != 3)
    fail(errc::unsupported_characteristic, "characteristic must be 2 or 3");
  if (!has_edge_of_multiplicity_p(sc.rs, p))
    fail(errc::precondition,
         "no such ideal: the diagram has no edge of multiplicity p");
  std::set<int> roots;
  FpSpan torals(p, sc.rs.n);
  for (int k = 0; k < sc.nroots(); ++k)
    if (!sc.rs.islong[k]) {
      roots.insert(k);
      if (sc.rs.is_positive_index(k)) torals.add(coroot_vec(sc, form, k));
    }
  TSubspace s = assemble(sc, p, form, std::move(roots), torals);
  check(is_p_ideal(s), "short root ideal fails ideality");
  return s;
}

bool is_simple_restricted(const StructureConstants& sc, long long p) {
  if (p != 2 && p != 3)
    fail(errc::unsupported_characteristic, "characteristic must be 2 or 3");
  const RootSystem& rs = sc.rs;
  // A toral center is a nonzero ideal.  Coordinates are simply connected.
  if (cartan_rank_mod_p(rs, p) < rs.n) return false;
  // Any nonzero torus-stable ideal contains a root vector or a noncentral
  // toral, and a noncentral toral pulls in a root vector, so it is enough
  // that each root vector generates everything as an ideal.
  const int R = sc.nroots();
  for (int start = 0; start < R; ++start) {
    std::set<int> roots = {start};
    FpSpan torals(p, rs.n);
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> rl(roots.begin(), roots.end());
      for (int a : rl)
        for (int g = 0; g < R; ++g) {
          if (g == a) continue;
          if (g == rs.negate(a)) {
            if (torals.add(coroot_vec(sc, lattice_form::simply_connected, a)))
              changed = true;
            continue;
          }
          Coeffs sum = rs.root(a).c;
          for (int i = 0; i < rs.n; ++i) sum[i] += rs.root(g).c[i];
          int idx = rs.index_of(sum);
          if (idx >= 0 && mod_p(sc.N(g, a), p) != 0 && !roots.count(idx)) {
            roots.insert(idx);
            changed = true;
          }
        }
      for (const auto& t : torals.rows)
        for (int g = 0; g < R; ++g)
          if (!roots.count(g) &&
              mod_p(toral_pairing(rs, lattice_form::simply_connected, rs.root(g).c, t),
                    p) != 0) {
            roots.insert(g);
            changed = true;
          }
    }
    if (int(roots.size()) != R) return false;
    check(torals.rank() == rs.n, "full root set without full coroot span");
  }
  return true;
}

bool minimal_g_submodule_check(const StructureConstants& sc, long long p,
                               int rank_cap) {
  if (p != 2 && p != 3)
    fail(errc::unsupported_characteristic, "characteristic must be 2 or 3");
  if (!has_edge_of_multiplicity_p(sc.rs, p))
    fail(errc::precondition,
         "the diagram has no edge of multiplicity p, no short root ideal exists");
  const RootSystem& rs = sc.rs;
  if (rs.n > rank_cap) fail(errc::resource_limit, "rank exceeds the configured cap");
  TSubspace nid = n_ideal(sc, p, lattice_form::simply_connected);
  const int R = sc.nroots();

  // Closure under the divided powers of every root direction; this is
  // stability under all root subgroups with a polynomial parameter, taken
  // coefficient by coefficient, and contains no bracket shortcuts.
  auto module_closure_contains_n = [&](std::set<int> roots, FpSpan torals) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> rl(roots.begin(), roots.end());
      for (int g = 0; g < R; ++g) {
        for (int a : rl) {
          if (a == g) continue;
          if (a == rs.negate(g)) {
            // First divided power is the coroot, the second returns X_g.
            if (torals.add(coroot_vec(sc, lattice_form::simply_connected, g)))
              changed = true;
            if (!roots.count(g)) {
              roots.insert(g);
              changed = true;
            }
            continue;
          }
          for (int k = 1; k <= 3; ++k) {
            int tgt = -1;
            long long c = divided_coeff(sc, g, a, k, &tgt);
            if (tgt >= 0 && mod_p(c, p) != 0 && !roots.count(tgt)) {
              roots.insert(tgt);
              changed = true;
            }
          }
        }
        for (const auto& t : torals.rows)
          if (!roots.count(g) &&
              mod_p(toral_pairing(rs, lattice_form::simply_connected, rs.root(g).c, t),
                    p) != 0) {
            roots.insert(g);
            changed = true;
          }
      }
    }
    for (int k : nid.root_part)
      if (!roots.count(k)) return false;
    for (const auto& t : nid.toral_part)
      if (!torals.contains(t)) return false;
    return true;
  };

  for (int start = 0; start < R; ++start)
    if (!module_closure_contains_n({start}, FpSpan(p, rs.n))) return false;

  // Toral lines outside the center; the center itself is a submodule and is
  // the one admitted exception.
  std::vector<long long> t(rs.n, 0);
  long long total = 1;
  for (int i = 0; i < rs.n; ++i) total *= p;
  for (long long code = 1; code < total; ++code) {
    long long c = code;
    bool leading_one = false;
    for (int i = 0; i < rs.n; ++i) {
      t[i] = c % p;
      c /= p;
    }
    for (int i = 0; i < rs.n; ++i) {
      if (t[i] == 0) continue;
      leading_one = t[i] == 1;
      break;
    }
    if (!leading_one || toral_is_central(rs, p, t)) continue;
    FpSpan sp(p, rs.n);
    sp.add(t);
    if (!module_closure_contains_n({}, sp)) return false;
  }
  return true;
}

namespace {

struct OrbitImplication {
  std::string name;
  std::array<int, 4> gamma;   // negated root, listed by positive coefficients
  bool gamma_negative;
  std::array<int, 4> delta;
  bool delta_negative;
  std::array<int, 4> target;  // positive coefficients of the produced weight
  std::vector<int> premises;  // class indices whose presence is assumed
  int target_class;
};

struct OrbitCase {
  int omitted;  // 0-based simple position defining the parabolic
  std::vector<std::string> class_names;
  std::vector<std::vector<std::array<int, 4>>> classes;
  std::vector<bool> class_long;
  std::vector<OrbitImplication> impls;
  int bridge_class;  // class holding the long weight produced at p = 3
};

std::vector<OrbitCase> f4_cases() {
  using A = std::array<int, 4>;
  std::vector<OrbitCase> cs;
  {
    OrbitCase c;
    c.omitted = 0;
    c.class_names = {"highest", "longs", "shorts"};
    c.classes = {
        {A{2, 3, 4, 2}},
        {A{1, 0, 0, 0}, A{1, 1, 0, 0}, A{1, 1, 2, 0}, A{1, 2, 2, 0}, A{1, 1, 2, 2},
         A{1, 2, 2, 2}, A{1, 2, 4, 2}, A{1, 3, 4, 2}},
        {A{1, 1, 1, 0}, A{1, 1, 1, 1}, A{1, 1, 2, 1}, A{1, 2, 2, 1}, A{1, 2, 3, 1},
         A{1, 2, 3, 2}}};
    c.class_long = {true, true, false};
    c.impls = {
        {"a", A{2, 3, 4, 2}, true, A{1, 2, 2, 0}, false, A{1, 1, 2, 2}, {0}, 1},
        {"b", A{1, 2, 2, 0}, true, A{1, 1, 2, 2}, true, A{2, 3, 4, 2}, {1}, 0},
        {"c", A{1, 2, 2, 2}, true, A{0, 0, 1, 0}, true, A{1, 2, 3, 2}, {1}, 2}};
    c.bridge_class = 1;
    cs.push_back(std::move(c));
  }
  {
    OrbitCase c;
    c.omitted = 1;
    c.class_names = {"sigma1", "sigma2", "sigma3", "sigma4", "sigma5"};
    c.classes = {
        {A{1, 3, 4, 2}, A{2, 3, 4, 2}},
        {A{1, 2, 2, 0}, A{1, 2, 2, 2}, A{1, 2, 4, 2}},
        {A{1, 2, 2, 1}, A{1, 2, 3, 1}, A{1, 2, 3, 2}},
        {A{0, 1, 1, 0}, A{1, 1, 1, 0}, A{1, 1, 1, 1}, A{1, 1, 2, 1}, A{0, 1, 2, 1},
         A{0, 1, 1, 1}},
        {A{0, 1, 2, 2}, A{0, 1, 2, 0}, A{1, 1, 0, 0}, A{0, 1, 0, 0}, A{1, 1, 2, 0},
         A{1, 1, 2, 2}}};
    c.class_long = {true, true, false, false, true};
    c.impls = {
        {"a", A{1, 3, 4, 2}, true, A{0, 1, 0, 0}, false, A{1, 2, 4, 2}, {0}, 1},
        {"b", A{1, 2, 4, 2}, true, A{0, 1, 2, 0}, false, A{1, 1, 2, 2}, {1}, 4},
        {"c", A{1, 1, 0, 0}, true, A{0, 1, 2, 0}, true, A{1, 2, 2, 0}, {4}, 1},
        {"d", A{1, 1, 2, 2}, true, A{1, 2, 2, 0}, true, A{2, 3, 4, 2}, {4, 1}, 0},
        {"e", A{1, 2, 2, 1}, true, A{0, 1, 0, 0}, false, A{1, 1, 2, 1}, {2}, 3},
        {"f", A{1, 1, 1, 1}, true, A{0, 1, 2, 1}, true, A{1, 2, 3, 2}, {3}, 2},
        {"g", A{1, 2, 2, 2}, true, A{0, 0, 1, 0}, true, A{1, 2, 3, 2}, {1}, 2}};
    c.bridge_class = 1;
    cs.push_back(std::move(c));
  }
  {
    OrbitCase c;
    c.omitted = 2;
    c.class_names = {"lambda1", "lambda2", "lambda3", "lambda4", "lambda5"};
    c.classes = {
        {A{1, 2, 4, 2}, A{1, 3, 4, 2}, A{2, 3, 4, 2}},
        {A{1, 2, 2, 0}, A{1, 2, 2, 2}, A{1, 1, 2, 2}, A{0, 1, 2, 2}, A{0, 1, 2, 0},
         A{1, 1, 2, 0}},
        {A{1, 2, 3, 2}, A{1, 2, 3, 1}},
        {A{1, 2, 2, 1}, A{1, 1, 2, 1}, A{0, 1, 2, 1}},
        {A{0, 1, 1, 1}, A{1, 1, 1, 1}, A{1, 1, 1, 0}, A{0, 1, 1, 0}, A{0, 0, 1, 0},
         A{0, 0, 1, 1}}};
    c.class_long = {true, true, false, false, false};
    c.impls = {
        {"a", A{2, 3, 4, 2}, true, A{1, 2, 2, 0}, false, A{1, 1, 2, 2}, {0}, 1},
        {"b", A{1, 2, 2, 0}, true, A{1, 1, 2, 2}, true, A{2, 3, 4, 2}, {1}, 0},
        {"c", A{1, 2, 3, 2}, true, A{0, 0, 1, 1}, false, A{1, 2, 2, 1}, {2}, 3},
        {"d", A{0, 1, 2, 1}, true, A{0, 0, 1, 0}, false, A{0, 1, 1, 1}, {3}, 4},
        {"e", A{0, 0, 1, 1}, true, A{0, 1, 1, 0}, true, A{0, 1, 2, 1}, {4}, 3},
        {"f", A{1, 1, 1, 1}, true, A{0, 1, 2, 1}, true, A{1, 2, 3, 2}, {4, 3}, 2},
        {"g", A{1, 2, 4, 2}, true, A{0, 0, 1, 0}, false, A{1, 2, 3, 2}, {0}, 2}};
    c.bridge_class = 0;
    cs.push_back(std::move(c));
  }
  {
    OrbitCase c;
    c.omitted = 3;
    c.class_names = {"apex", "shorts", "longs"};
    c.classes = {
        {A{1, 2, 3, 2}},
        {A{0, 0, 0, 1}, A{0, 0, 1, 1}, A{0, 1, 1, 1}, A{1, 1, 1, 1}, A{0, 1, 2, 1},
         A{1, 1, 2, 1}, A{1, 2, 2, 1}, A{1, 2, 3, 1}},
        {A{0, 1, 2, 2}, A{1, 1, 2, 2}, A{1, 2, 2, 2}, A{1, 2, 4, 2}, A{1, 3, 4, 2},
         A{2, 3, 4, 2}}};
    c.class_long = {false, false, true};
    c.impls = {
        {"a", A{0, 1, 2, 2}, true, A{1, 1, 1, 0}, true, A{1, 2, 3, 2}, {2}, 0},
        {"b", A{1, 2, 3, 2}, true, A{1, 1, 1, 1}, false, A{0, 1, 2, 1}, {0}, 1},
        {"c", A{0, 0, 1, 1}, true, A{0, 0, 1, 0}, false, A{0, 0, 0, 1}, {1}, 1},
        {"d", A{0, 0, 0, 1}, true, A{0, 0, 1, 0}, true, A{0, 0, 1, 1}, {1}, 1},
        {"e", A{0, 0, 0, 1}, true, A{1, 2, 3, 1}, true, A{1, 2, 3, 2}, {1}, 0}};
    c.bridge_class = 2;
    cs.push_back(std::move(c));
  }
  return cs;
}

Coeffs to_coeffs(const std::array<int, 4>& a, bool negative) {
  Coeffs c(a.begin(), a.end());
  if (negative)
    for (auto& x : c) x = -x;
  return c;
}

std::string coeff_str(const Coeffs& c) {
  std::ostringstream os;
  for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
  return os.str();
}

}  // namespace

std::vector<ClaimReport> f4_orbit_partition_check(const StructureConstants& sc,
                                                  long long p) {
  if (p != 2 && p != 3)
    fail(errc::unsupported_characteristic, "characteristic must be 2 or 3");
  const RootSystem& rs = sc.rs;
  if (rs.type.family != 'F') fail(errc::invalid_argument, "an F4 root system is required");

  std::vector<ClaimReport> out;
  auto push = [&out](std::string id, bool ok, std::string w) {
    out.push_back({std::move(id), ok, std::move(w)});
  };

  for (const OrbitCase& oc : f4_cases()) {
    std::string tag = "f4-p" + std::to_string(oc.omitted + 1);

    // The weights of the quotient module are the positive roots using the
    // omitted simple root; the classes must partition them and respect the
    // length split.
    std::set<Coeffs> gamma_all, gamma_long, gamma_short;
    for (int k = 0; k < rs.npos; ++k)
      if (rs.root(k).c[oc.omitted] > 0) {
        gamma_all.insert(rs.root(k).c);
        (rs.islong[k] ? gamma_long : gamma_short).insert(rs.root(k).c);
      }
    std::set<Coeffs> cls_union, cls_long, cls_short;
    bool weights_ok = true;
    size_t total = 0;
    for (size_t ci = 0; ci < oc.classes.size(); ++ci)
      for (const auto& a : oc.classes[ci]) {
        Coeffs v = to_coeffs(a, false);
        int idx = rs.index_of(v);
        if (idx < 0 || rs.islong[idx] != oc.class_long[ci]) weights_ok = false;
        if (!cls_union.insert(v).second) weights_ok = false;  // duplicate
        (oc.class_long[ci] ? cls_long : cls_short).insert(v);
        ++total;
      }
    weights_ok = weights_ok && cls_union == gamma_all && cls_long == gamma_long &&
                 cls_short == gamma_short;
    {
      std::ostringstream w;
      w << total << " weights in " << oc.classes.size() << " classes, "
        << gamma_long.size() << " long and " << gamma_short.size() << " short";
      push(tag + "-weights", weights_ok, w.str());
    }

    // Each class is a single orbit of the Weyl group of the Levi.
    bool stab_ok = true;
    std::ostringstream stabw;
    for (size_t ci = 0; ci < oc.classes.size(); ++ci) {
      std::set<Coeffs> cls;
      for (const auto& a : oc.classes[ci]) cls.insert(to_coeffs(a, false));
      std::set<Coeffs> orbit = {*cls.begin()};
      std::deque<Coeffs> q = {*cls.begin()};
      while (!q.empty()) {
        Coeffs cur = q.front();
        q.pop_front();
        for (int j = 0; j < rs.n; ++j) {
          if (j == oc.omitted) continue;
          Coeffs img = reflect(rs, Root(cur), j).c;
          if (orbit.insert(img).second) q.push_back(img);
        }
      }
      if (orbit != cls) stab_ok = false;
      stabw << (ci ? " " : "") << oc.class_names[ci] << ":" << cls.size();
    }
    push(tag + "-stability", stab_ok, "orbit sizes " + stabw.str());

    // Bracket implications between classes.  Each source root space must be
    // available: a positive root, a negative root of the Levi, or a negative
    // root whose weight lies in a premise class.
    bool imp_ok = true;
    std::ostringstream impw;
    for (const auto& im : oc.impls) {
      Coeffs g = to_coeffs(im.gamma, im.gamma_negative);
      Coeffs d = to_coeffs(im.delta, im.delta_negative);
      int gi = rs.index_of(g), di = rs.index_of(d);
      bool one_ok = gi >= 0 && di >= 0;
      auto source_ok = [&](const Coeffs& v) {
        if (Root(v).positive()) return true;
        Coeffs pos = v;
        for (auto& x : pos) x = -x;
        if (pos[oc.omitted] == 0) return true;  // inside the Levi
        for (int ci : im.premises) {
          for (const auto& a : oc.classes[ci])
            if (to_coeffs(a, false) == pos) return true;
        }
        return false;
      };
      one_ok = one_ok && source_ok(g) && source_ok(d);
      if (one_ok) {
        Coeffs sum = g;
        for (int i = 0; i < rs.n; ++i) sum[i] += d[i];
        int si = rs.index_of(sum);
        long long n = si >= 0 ? sc.N(gi, di) : 0;
        Coeffs tpos = to_coeffs(im.target, false);
        Coeffs texp = tpos;
        for (auto& x : texp) x = -x;
        bool target_in_class = false;
        for (const auto& a : oc.classes[im.target_class])
          if (to_coeffs(a, false) == tpos) target_in_class = true;
        one_ok = si >= 0 && sum == texp && mod_p(n, p) != 0 && target_in_class;
        impw << im.name << ":N=" << n << " ";
      } else {
        impw << im.name << ":bad-source ";
      }
      imp_ok = imp_ok && one_ok;
    }
    push(tag + "-implications", imp_ok, impw.str());

    // The only nonempty unions of classes closed under the implication
    // rules are the short part and everything; at p = 3 the short to long
    // bracket joins the rules and only everything is left.
    std::vector<std::pair<std::set<int>, int>> rules;
    for (const auto& im : oc.impls)
      rules.push_back({std::set<int>(im.premises.begin(), im.premises.end()),
                       im.target_class});
    if (p == 3) {
      std::set<int> shorts;
      for (size_t ci = 0; ci < oc.classes.size(); ++ci)
        if (!oc.class_long[ci]) shorts.insert(int(ci));
      rules.push_back({shorts, oc.bridge_class});
    }
    std::set<std::set<int>> closed;
    const int nc = int(oc.classes.size());
    for (int mask = 1; mask < (1 << nc); ++mask) {
      std::set<int> u;
      for (int ci = 0; ci < nc; ++ci)
        if (mask & (1 << ci)) u.insert(ci);
      bool is_closed = true;
      for (const auto& [pre, tgt] : rules) {
        bool all_in = std::all_of(pre.begin(), pre.end(),
                                  [&](int ci) { return u.count(ci); });
        if (all_in && !u.count(tgt)) {
          is_closed = false;
          break;
        }
      }
      if (is_closed) closed.insert(std::move(u));
    }
    std::set<std::set<int>> expected;
    std::set<int> all, shorts;
    for (int ci = 0; ci < nc; ++ci) {
      all.insert(ci);
      if (!oc.class_long[ci]) shorts.insert(ci);
    }
    expected.insert(all);
    if (p == 2) expected.insert(shorts);
    {
      std::ostringstream w;
      w << closed.size() << " closed unions, expected " << expected.size();
      push(tag + "-conclusion", closed == expected, w.str());
    }
  }

  // The short to long bridge: bracketing the lowest short weight space with
  // a short simple direction has constant of absolute value 2, so it
  // vanishes at p = 2 and produces a long weight at p = 3.
  {
    Coeffs g = {-1, -2, -3, -2}, d = {0, 0, 1, 0}, t = {-1, -2, -4, -2};
    int gi = rs.index_of(g), di = rs.index_of(d), ti = rs.index_of(t);
    bool ok = gi >= 0 && di >= 0 && ti >= 0;
    long long n = ok ? sc.N(gi, di) : 0;
    ok = ok && (n == 2 || n == -2) && rs.islong[ti] && !rs.islong[gi];
    std::ostringstream w;
    w << "bracket of " << coeff_str(g) << " and " << coeff_str(d) << " gives "
      << n << " times the vector at " << coeff_str(t);
    push("f4-bridge-short-to-long", ok, w.str());
  }
  return out;
}

std::string reports_to_json(const std::vector<ClaimReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["claim_id"] = r.claim_id;
    j["status"] = r.verified ? "verified" : "failed";
    j["witness"] = r.witness;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace smallchar
