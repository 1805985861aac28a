#include "chevalley.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "errors.hpp"

namespace smallchar {

namespace {

Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// r of the b-string through a: largest k with a - k*b still a root.
int backlen(const RootSystem& rs, int a, int b) {
  int r = 0;
  Coeffs v = rs.roots[a].c;
  for (;;) {
    v = sub(v, rs.roots[b].c);
    if (!rs.is_root(v)) break;
    ++r;
  }
  return r;
}

long long floordiv_exact(long long num, long long den, const char* what) {
  check(den != 0 && num % den == 0, what);
  return num / den;
}

void reduce_mod(LieElement& x) {
  if (x.p == 0) return;
  for (auto it = x.root_coeffs.begin(); it != x.root_coeffs.end();) {
    long long c = ((it->second % x.p) + x.p) % x.p;
    if (c == 0) {
      it = x.root_coeffs.erase(it);
    } else {
      it->second = c;
      ++it;
    }
  }
  for (auto& t : x.toral) t = ((t % x.p) + x.p) % x.p;
}

void require_same_field(const LieElement& x, const LieElement& y) {
  if (x.p != y.p)
    fail(errc::invalid_argument, "elements live over different characteristics");
}

std::vector<long long> mat_mul(const std::vector<long long>& a,
                               const std::vector<long long>& b, int d) {
  std::vector<long long> c(size_t(d) * d, 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      long long aik = a[size_t(i) * d + k];
      if (aik == 0) continue;
      for (int j = 0; j < d; ++j) c[size_t(i) * d + j] += aik * b[size_t(k) * d + j];
    }
  return c;
}

}  // namespace

Coeffs StructureConstants::h_of(int k) const {
  if (k < 0 || k >= nroots()) fail(errc::invalid_argument, "root index out of range");
  if (k < rs.npos) return hvec[k];
  Coeffs h = hvec[k - rs.npos];
  for (auto& v : h) v = -v;
  return h;
}

StructureConstants compute_structure_constants(const RootSystem& rs) {
  StructureConstants sc(rs);
  const int npos = rs.npos;
  const int R = int(rs.roots.size());
  sc.nmat.assign(size_t(R) * R, 0);
  sc.hvec.resize(npos);
  for (int k = 0; k < npos; ++k) sc.hvec[k] = rs.coroot(rs.roots[k].c);

  auto nm = [&](int a, int b) -> int& { return sc.nmat[size_t(a) * R + b]; };
  auto set_pair = [&](int a, int b, int v) {
    nm(a, b) = v;
    nm(b, a) = -v;
  };

  // N(a,b) for arbitrary sign combinations, assuming every positive pair it
  // falls back on is already in the table.  Mixed signs reduce through the
  // cyclic ratio rule for x + y + z = 0:
  //   N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y).
  std::function<long long(int, int)> cval = [&](int a, int b) -> long long {
    const bool na = a >= npos, nb = b >= npos;
    if (!na && !nb) return nm(a, b);
    if (na && nb) return -nm(a - npos, b - npos);
    if (na) return -cval(b, a);
    const int g = a, d = b - npos;
    const int s = rs.index_of(sub(rs.roots[g].c, rs.roots[d].c));
    check(s >= 0, "mixed constant outside the bracketing range");
    if (s < npos)
      return -floordiv_exact((long long)rs.norm2(rs.roots[s].c) * nm(d, s),
                             rs.norm2(rs.roots[g].c), "length ratio not integral");
    const int tau = s - npos;
    return floordiv_exact((long long)rs.norm2(rs.roots[tau].c) * nm(tau, g),
                          rs.norm2(rs.roots[d].c), "length ratio not integral");
  };

  // Positive pairs, one sum at a time in increasing height-then-lex order.
  for (int xi = 0; xi < npos; ++xi) {
    std::vector<std::pair<int, int>> pairs;
    for (int g = 0; g < npos; ++g) {
      Coeffs rest = sub(rs.roots[xi].c, rs.roots[g].c);
      int d = rs.index_of(rest);
      if (d >= 0 && d < npos && g < d) pairs.emplace_back(g, d);
    }
    if (pairs.empty()) continue;
    std::sort(pairs.begin(), pairs.end());
    const int eps = pairs[0].first, eta = pairs[0].second;
    set_pair(eps, eta, backlen(rs, eps, eta) + 1);

    // Every other special pair follows from a Jacobi relation against
    // X_{-eps}, whose ingredients are the seeded constant and pairs whose
    // sums sit strictly below xi:
    //   N(g,d) N(xi,-eps) = -N(d,-eps) N(d-eps,g) - N(-eps,g) N(g-eps,d).
    const long long denom = cval(xi, eps + npos);
    for (size_t t = 1; t < pairs.size(); ++t) {
      const int g = pairs[t].first, d = pairs[t].second;
      long long t2 = 0, t3 = 0;
      const int dme = rs.index_of(sub(rs.roots[d].c, rs.roots[eps].c));
      if (dme >= 0) t2 = cval(d, eps + npos) * cval(dme, g);
      const int gme = rs.index_of(sub(rs.roots[g].c, rs.roots[eps].c));
      if (gme >= 0) t3 = cval(eps + npos, g) * cval(gme, d);
      long long val = floordiv_exact(-t2 - t3, denom,
                                     "structure constant relation not divisible");
      check(val != 0, "special pair resolved to zero");
      set_pair(g, d, int(val));
    }
  }

  // Both arguments negative.
  for (int a = 0; a < npos; ++a)
    for (int b = 0; b < npos; ++b)
      if (nm(a, b) != 0) sc.nmat[size_t(a + npos) * R + (b + npos)] = -nm(a, b);

  // Mixed signs, from the cyclic ratio rule for x + y + z = 0:
  // N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y).
  for (int g = 0; g < npos; ++g)
    for (int d = 0; d < npos; ++d) {
      if (g == d) continue;
      Coeffs diff = sub(rs.roots[g].c, rs.roots[d].c);
      if (!rs.is_root(diff)) continue;
      const int s = rs.index_of(diff);
      long long v;
      if (s < npos) {
        v = -floordiv_exact((long long)rs.norm2(rs.roots[s].c) * nm(d, s),
                            rs.norm2(rs.roots[g].c), "length ratio not integral");
      } else {
        const int tau = s - npos;
        v = floordiv_exact((long long)rs.norm2(rs.roots[tau].c) * nm(tau, g),
                           rs.norm2(rs.roots[d].c), "length ratio not integral");
      }
      sc.nmat[size_t(g) * R + (d + npos)] = int(v);
      sc.nmat[size_t(d + npos) * R + g] = int(-v);
    }

  // Magnitude law: |N(a,b)| = r + 1 for every bracketing pair.
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      Coeffs s = rs.roots[a].c;
      for (int i = 0; i < rs.n; ++i) s[i] += rs.roots[b].c[i];
      bool sum_root = rs.is_root(s);
      if (!sum_root) {
        check(nm(a, b) == 0, "nonzero constant for a non-root sum");
        continue;
      }
      check(nm(a, b) != 0, "missing constant for a root sum");
      check(std::abs(nm(a, b)) == backlen(rs, a, b) + 1, "constant magnitude violates the string law");
      check(std::abs(nm(a, b)) <= 4, "constant magnitude out of range");
    }

  // Jacobi identity over Z on all distinct basis triples.
  const int D = R + rs.n;
  auto basis = [&](int i) {
    LieElement e;
    e.p = 0;
    if (i < R) {
      e.root_coeffs[i] = 1;
      e.toral.assign(rs.n, 0);
    } else {
      e.toral.assign(rs.n, 0);
      e.toral[i - R] = 1;
    }
    return e;
  };
  for (int i = 0; i < D; ++i) {
    LieElement x = basis(i);
    for (int j = i + 1; j < D; ++j) {
      LieElement y = basis(j);
      LieElement xy = bracket(sc, x, y);
      for (int k = j + 1; k < D; ++k) {
        LieElement z = basis(k);
        LieElement s = bracket(sc, xy, z);
        s = lie_add(sc, s, bracket(sc, bracket(sc, y, z), x));
        s = lie_add(sc, s, bracket(sc, bracket(sc, z, x), y));
        check(lie_is_zero(s), "Jacobi identity fails on a basis triple");
      }
    }
  }

  return sc;
}

LieElement lie_zero(const StructureConstants& sc, long long p) {
  if (p < 0) fail(errc::invalid_argument, "negative characteristic");
  LieElement e;
  e.p = p;
  e.toral.assign(sc.rs.n, 0);
  return e;
}

LieElement lie_root(const StructureConstants& sc, long long p, int root_index,
                    long long c) {
  if (root_index < 0 || root_index >= sc.nroots())
    fail(errc::invalid_argument, "root index out of range");
  LieElement e = lie_zero(sc, p);
  if (c != 0) e.root_coeffs[root_index] = c;
  reduce_mod(e);
  return e;
}

LieElement lie_toral(const StructureConstants& sc, long long p,
                     const std::vector<long long>& t) {
  if (int(t.size()) != sc.rs.n)
    fail(errc::invalid_argument, "toral coordinate length mismatch");
  LieElement e = lie_zero(sc, p);
  e.toral = t;
  reduce_mod(e);
  return e;
}

LieElement lie_add(const StructureConstants& sc, const LieElement& x,
                   const LieElement& y) {
  (void)sc;
  require_same_field(x, y);
  LieElement r = x;
  for (auto& [k, c] : y.root_coeffs) {
    auto it = r.root_coeffs.find(k);
    if (it == r.root_coeffs.end()) {
      r.root_coeffs[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.root_coeffs.erase(it);
    }
  }
  for (size_t i = 0; i < r.toral.size(); ++i) r.toral[i] += y.toral[i];
  reduce_mod(r);
  return r;
}

LieElement lie_scale(const StructureConstants& sc, const LieElement& x,
                     long long c) {
  (void)sc;
  LieElement r = x;
  if (c == 0) {
    r.root_coeffs.clear();
    std::fill(r.toral.begin(), r.toral.end(), 0);
    return r;
  }
  for (auto& [k, v] : r.root_coeffs) v *= c;
  for (auto& v : r.toral) v *= c;
  reduce_mod(r);
  return r;
}

bool lie_is_zero(const LieElement& x) {
  if (!x.root_coeffs.empty()) return false;
  for (auto v : x.toral)
    if (v != 0) return false;
  return true;
}

bool lie_equal(const LieElement& x, const LieElement& y) {
  return x.p == y.p && x.root_coeffs == y.root_coeffs && x.toral == y.toral;
}

LieElement bracket(const StructureConstants& sc, const LieElement& x,
                   const LieElement& y) {
  require_same_field(x, y);
  const RootSystem& rs = sc.rs;
  LieElement r = lie_zero(sc, x.p);

  // [X_a, X_b]
  for (auto& [a, ca] : x.root_coeffs)
    for (auto& [b, cb] : y.root_coeffs) {
      if (rs.negate(a) == b) {
        Coeffs h = sc.h_of(a);
        for (int i = 0; i < rs.n; ++i) r.toral[i] += ca * cb * h[i];
        continue;
      }
      Coeffs s = rs.roots[a].c;
      for (int i = 0; i < rs.n; ++i) s[i] += rs.roots[b].c[i];
      int k = rs.index_of(s);
      if (k < 0) continue;
      long long c = ca * cb * sc.N(a, b);
      if (c == 0) continue;
      auto it = r.root_coeffs.find(k);
      if (it == r.root_coeffs.end())
        r.root_coeffs[k] = c;
      else {
        it->second += c;
        if (it->second == 0) r.root_coeffs.erase(it);
      }
    }

  // [H, X_b] and [X_a, H]
  auto toral_action = [&](const std::vector<long long>& t, int b) {
    long long c = 0;
    for (int i = 0; i < rs.n; ++i)
      if (t[i] != 0) c += t[i] * rs.pairing_simple(rs.roots[b].c, i);
    return c;
  };
  for (auto& [b, cb] : y.root_coeffs) {
    long long c = toral_action(x.toral, b) * cb;
    if (c == 0) continue;
    auto it = r.root_coeffs.find(b);
    if (it == r.root_coeffs.end())
      r.root_coeffs[b] = c;
    else {
      it->second += c;
      if (it->second == 0) r.root_coeffs.erase(it);
    }
  }
  for (auto& [a, ca] : x.root_coeffs) {
    long long c = -toral_action(y.toral, a) * ca;
    if (c == 0) continue;
    auto it = r.root_coeffs.find(a);
    if (it == r.root_coeffs.end())
      r.root_coeffs[a] = c;
    else {
      it->second += c;
      if (it->second == 0) r.root_coeffs.erase(it);
    }
  }

  reduce_mod(r);
  return r;
}

LieElement p_power(const StructureConstants& sc, const LieElement& x) {
  const long long p = x.p;
  if (p != 2 && p != 3)
    fail(errc::unsupported_characteristic, "p-power needs characteristic 2 or 3");

  // Split into summands: one per root term, plus the whole toral part
  // (the H_i commute, and H^[p] = H term by term).
  std::vector<LieElement> parts;
  for (auto& [k, c] : x.root_coeffs) parts.push_back(lie_root(sc, p, k, c));
  bool has_toral = false;
  for (auto v : x.toral) has_toral = has_toral || v != 0;
  if (has_toral) parts.push_back(lie_toral(sc, p, x.toral));

  auto base_power = [&](const LieElement& a) {
    LieElement r = lie_zero(sc, p);
    // (c X_gamma)^[p] = c^p X_gamma^[p] = 0; the toral case is coordinatewise.
    for (size_t i = 0; i < a.toral.size(); ++i) {
      long long t = 1;
      for (long long j = 0; j < p; ++j) t = (t * a.toral[i]) % p;
      r.toral[i] = t;
    }
    return r;
  };

  LieElement acc = lie_zero(sc, p);
  LieElement partial = lie_zero(sc, p);  // sum of parts already folded in
  for (size_t i = 0; i < parts.size(); ++i) {
    const LieElement& a = parts[i];
    if (i == 0) {
      acc = base_power(a);
      partial = a;
      continue;
    }
    // (a + b)^[p] with b = partial, acc = b^[p] known.
    LieElement next = lie_add(sc, base_power(a), acc);
    if (p == 2) {
      next = lie_add(sc, next, bracket(sc, a, partial));
    } else {
      LieElement ba = bracket(sc, partial, a);
      next = lie_add(sc, next, bracket(sc, partial, ba));
      next = lie_add(sc, next, lie_scale(sc, bracket(sc, a, ba), 2));
    }
    acc = next;
    partial = lie_add(sc, partial, a);
  }
  return acc;
}

std::vector<long long> ad_matrix(const StructureConstants& sc,
                                 const LieElement& x) {
  const int D = sc.dim();
  std::vector<long long> m(size_t(D) * D, 0);
  for (int j = 0; j < D; ++j) {
    LieElement e = j < sc.nroots()
                       ? lie_root(sc, x.p, j)
                       : lie_toral(sc, x.p, [&] {
                           std::vector<long long> t(sc.rs.n, 0);
                           t[j - sc.nroots()] = 1;
                           return t;
                         }());
    LieElement im = bracket(sc, x, e);
    for (auto& [k, c] : im.root_coeffs) m[size_t(k) * D + j] = c;
    for (int i = 0; i < sc.rs.n; ++i) m[size_t(sc.nroots() + i) * D + j] = im.toral[i];
  }
  return m;
}

std::array<std::vector<long long>, 4> exp_ad_divided(
    const StructureConstants& sc, int root_index) {
  const int D = sc.dim();
  std::array<std::vector<long long>, 4> out;
  out[0].assign(size_t(D) * D, 0);
  for (int i = 0; i < D; ++i) out[0][size_t(i) * D + i] = 1;
  LieElement xg = lie_root(sc, 0, root_index);
  std::vector<long long> a = ad_matrix(sc, xg);
  out[1] = a;
  std::vector<long long> a2 = mat_mul(a, a, D);
  std::vector<long long> a3 = mat_mul(a2, a, D);
  std::vector<long long> a4 = mat_mul(a3, a, D);
  for (auto v : a4) check(v == 0, "fourth power of ad on a root vector is nonzero");
  out[2].resize(a2.size());
  out[3].resize(a3.size());
  for (size_t i = 0; i < a2.size(); ++i)
    out[2][i] = floordiv_exact(a2[i], 2, "divided square not integral");
  for (size_t i = 0; i < a3.size(); ++i)
    out[3][i] = floordiv_exact(a3[i], 6, "divided cube not integral");
  return out;
}

std::vector<long long> exp_ad_root(const StructureConstants& sc,
                                   int root_index, long long lambda,
                                   long long p) {
  auto dp = exp_ad_divided(sc, root_index);
  const int D = sc.dim();
  std::vector<long long> m(size_t(D) * D, 0);
  long long lk = 1;
  for (int k = 0; k < 4; ++k) {
    for (size_t i = 0; i < m.size(); ++i) m[i] += lk * dp[k][i];
    lk *= lambda;
  }
  if (p > 0)
    for (auto& v : m) v = ((v % p) + p) % p;
  return m;
}

std::string structure_constants_csv(const StructureConstants& sc) {
  std::ostringstream os;
  os << "gamma,delta,N\n";
  const int R = sc.nroots();
  auto put = [&](const Coeffs& c) {
    for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
  };
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      if (sc.N(a, b) == 0) continue;
      put(sc.rs.roots[a].c);
      os << ',';
      put(sc.rs.roots[b].c);
      os << ',' << sc.N(a, b) << '\n';
    }
  return os.str();
}

}  // namespace smallchar
