/*
  This is rootsys.cpp, part of smallchar.

  Construction of the root list by string closure over the embedded Cartan
  matrices, plus reflections, strings, orbits and coordinate conversions.
*/

#include "rootsys.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace smallchar {

SimpleType::SimpleType(char fam, int r) : family(fam), rank(r) {
  bool ok = false;
  switch (fam) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 2; break;
    case 'D': ok = r >= 3; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: break;
  }
  if (!ok)
    fail(errc::invalid_argument,
         std::string("no simple type ") + fam + std::to_string(r));
}

std::string SimpleType::name() const {
  return std::string(1, family) + std::to_string(rank);
}

bool SimpleType::simply_laced() const {
  return family == 'A' || family == 'D' || family == 'E';
}

Root::Root(Coeffs v) : c(std::move(v)) {
  bool nonneg = true, nonpos = true;
  for (int x : c) {
    if (x < 0) nonneg = false;
    if (x > 0) nonpos = false;
  }
  if (!(nonneg || nonpos))
    fail(errc::invalid_argument, "mixed-sign root coefficient vector");
  if (c.empty()) fail(errc::invalid_argument, "empty root coefficient vector");
}

int Root::height() const { return std::accumulate(c.begin(), c.end(), 0); }

namespace {

/* cartan[i*n+j] = <alpha_j, alpha_i^vee>.  Off-diagonal entries are -1
   except along the marked edges below.  The exceptional matrices follow the
   usual plates; for the infinite families the pattern is spelled out. */
std::vector<int> cartan_matrix(SimpleType t) {
  const int n = t.rank;
  std::vector<int> a(n * n, 0);
  auto link = [&](int i, int j) { a[i * n + j] = a[j * n + i] = -1; };
  for (int i = 0; i < n; ++i) a[i * n + i] = 2;
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      // alpha_n is the short root: <alpha_{n-1}, alpha_n^vee> = -2
      a[(n - 1) * n + (n - 2)] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      // alpha_n is the long root: <alpha_n, alpha_{n-1}^vee> = -2
      a[(n - 2) * n + (n - 1)] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      // chain 1-3-4-5-6(-7(-8)) with node 2 hanging off node 4
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2 * n + 1] = -2;  // <alpha_2, alpha_3^vee> = -2
      break;
    case 'G':
      a[0 * n + 1] = -3;  // <alpha_2, alpha_1^vee> = -3
      a[1 * n + 0] = -1;
      break;
  }
  return a;
}

std::vector<int> length_vector(SimpleType t) {
  const int n = t.rank;
  std::vector<int> d(n, 1);
  switch (t.family) {
    case 'B':
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':
      d[n - 1] = 2;
      break;
    case 'F':
      d[0] = d[1] = 2;
      break;
    case 'G':
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

int RootSystem::index_of(const Coeffs& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

int64_t RootSystem::inner(const Coeffs& x, const Coeffs& y) const {
  int64_t s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s += int64_t(d[i]) * a(i, j) * x[i] * y[j];
  return s;
}

int RootSystem::pairing_simple(const Coeffs& gamma, int i) const {
  int s = 0;
  for (int j = 0; j < n; ++j) s += a(i, j) * gamma[j];
  return s;
}

int RootSystem::pairing(const Coeffs& gamma, const Coeffs& delta) const {
  int64_t num = 2 * inner(gamma, delta);
  int64_t den = norm2(delta);
  check(den != 0 && num % den == 0, "non-integral root pairing");
  return int(num / den);
}

Coeffs RootSystem::coroot(const Coeffs& gamma) const {
  int64_t dg2 = norm2(gamma);
  check(dg2 > 0 && dg2 % 2 == 0, "coroot of a vector of bad length");
  int64_t dg = dg2 / 2;
  Coeffs v(n);
  for (int i = 0; i < n; ++i) {
    int64_t num = int64_t(gamma[i]) * d[i];
    check(num % dg == 0, "non-integral coroot coefficient");
    v[i] = int(num / dg);
  }
  return v;
}

RootSystem build_root_system(SimpleType t) {
  RootSystem rs(t);
  rs.n = t.rank;
  rs.cartan = cartan_matrix(t);
  rs.d = length_vector(t);
  const int n = rs.n;

  // Generate positive roots level by level: gamma + alpha_i is a root iff
  // the backward string length r satisfies r - <gamma, alpha_i^vee> > 0.
  std::map<Coeffs, int> seen;  // value unused during generation
  std::vector<std::vector<Coeffs>> levels(2);
  for (int i = 0; i < n; ++i) {
    Coeffs e(n, 0);
    e[i] = 1;
    levels[1].push_back(e);
    seen.emplace(e, 0);
  }
  for (size_t h = 1; h < levels.size(); ++h) {
    if (levels[h].empty()) break;
    levels.resize(std::max(levels.size(), h + 2));
    for (const Coeffs& g : levels[h]) {
      for (int i = 0; i < n; ++i) {
        int r = 0;
        Coeffs back = g;
        for (;;) {
          back[i] -= 1;
          bool zero = std::all_of(back.begin(), back.end(),
                                  [](int x) { return x == 0; });
          if (zero || !seen.count(back)) break;
          ++r;
        }
        int q = r - rs.pairing_simple(g, i);
        if (q <= 0) continue;
        Coeffs fwd = g;
        fwd[i] += 1;
        if (seen.emplace(fwd, 0).second) levels[h + 1].push_back(fwd);
      }
    }
  }

  for (auto& lv : levels) std::sort(lv.begin(), lv.end());
  for (auto& lv : levels)
    for (auto& g : lv) rs.roots.push_back(Root(g));
  rs.npos = int(rs.roots.size());
  for (int k = 0; k < rs.npos; ++k) {
    Coeffs neg = rs.roots[k].c;
    for (int& x : neg) x = -x;
    rs.roots.push_back(Root(neg));
  }
  for (int k = 0; k < int(rs.roots.size()); ++k)
    rs.index_.emplace(rs.roots[k].c, k);

  int64_t maxlen = 0;
  for (int k = 0; k < rs.npos; ++k)
    maxlen = std::max(maxlen, rs.norm2(rs.roots[k].c));
  for (const Root& g : rs.roots)
    rs.islong.push_back(rs.norm2(g.c) == maxlen);

  // Closure under reflection, checked once here for the whole set.
  for (const Root& g : rs.roots)
    for (int i = 0; i < n; ++i) {
      Coeffs s = g.c;
      int p = rs.pairing_simple(g.c, i);
      s[i] -= p;
      check(rs.is_root(s), "root set not closed under simple reflection");
    }
  return rs;
}

std::vector<int> support(const Root& gamma) {
  std::vector<int> s;
  for (int i = 0; i < int(gamma.c.size()); ++i)
    if (gamma.c[i] != 0) s.push_back(i);
  return s;
}

Root reflect(const RootSystem& rs, const Root& gamma, int i) {
  if (i < 0 || i >= rs.n) fail(errc::invalid_argument, "simple index out of range");
  Coeffs s = gamma.c;
  s[i] -= rs.pairing_simple(gamma.c, i);
  return Root(s);
}

Root reflect_by(const RootSystem& rs, const Root& gamma, const Root& delta) {
  if (!rs.is_root(delta.c)) fail(errc::invalid_argument, "reflect_by needs a root");
  int p = rs.pairing(gamma.c, delta.c);
  Coeffs s = gamma.c;
  for (int i = 0; i < rs.n; ++i) s[i] -= p * delta.c[i];
  return Root(s);
}

std::pair<int, int> root_string(const RootSystem& rs, const Root& gamma,
                                const Root& delta) {
  if (!rs.is_root(gamma.c) || !rs.is_root(delta.c))
    fail(errc::invalid_argument, "root_string arguments must be roots");
  bool eq = true, opp = true;
  for (int i = 0; i < rs.n; ++i) {
    if (gamma.c[i] != delta.c[i]) eq = false;
    if (gamma.c[i] != -delta.c[i]) opp = false;
  }
  if (eq || opp) fail(errc::invalid_argument, "root_string needs gamma != +-delta");
  auto walk = [&](int dir) {
    int k = 0;
    Coeffs v = gamma.c;
    for (;;) {
      for (int i = 0; i < rs.n; ++i) v[i] += dir * delta.c[i];
      if (!rs.is_root(v)) break;
      ++k;
    }
    return k;
  };
  int r = walk(-1), q = walk(+1);
  check(r - q == rs.pairing(gamma.c, delta.c), "string length mismatch");
  check(r + q <= 3, "root string longer than 3");
  check(r + q < 3 || rs.type.family == 'G', "length-3 string outside G2");
  return {r, q};
}

std::vector<int> weyl_orbit(const RootSystem& rs, int root_index) {
  if (root_index < 0 || root_index >= int(rs.roots.size()))
    fail(errc::invalid_argument, "root index out of range");
  std::vector<bool> in(rs.roots.size(), false);
  std::vector<int> queue{root_index};
  in[root_index] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    const Root& g = rs.roots[queue[head]];
    for (int i = 0; i < rs.n; ++i) {
      int k = rs.index_of(reflect(rs, g, i).c);
      if (!in[k]) {
        in[k] = true;
        queue.push_back(k);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

namespace {
int extreme_root(const RootSystem& rs, bool want_long) {
  int best = -1, besth = -1;
  for (int k = 0; k < rs.npos; ++k) {
    if (rs.islong[k] != want_long) continue;
    int h = rs.roots[k].height();
    if (h > besth) {
      besth = h;
      best = k;
    }
  }
  check(best >= 0, "no root in the requested length class");
  return best;
}
}  // namespace

int highest_root(const RootSystem& rs) { return extreme_root(rs, true); }

int highest_short_root(const RootSystem& rs) {
  if (rs.type.simply_laced()) return highest_root(rs);
  return extreme_root(rs, false);
}

std::vector<int> short_positive(const RootSystem& rs) {
  std::vector<int> v;
  for (int k = 0; k < rs.npos; ++k)
    if (!rs.islong[k]) v.push_back(k);
  return v;
}

std::vector<int> long_positive(const RootSystem& rs) {
  std::vector<int> v;
  for (int k = 0; k < rs.npos; ++k)
    if (rs.islong[k]) v.push_back(k);
  return v;
}

std::vector<int> to_epsilon(const RootSystem& rs, const Coeffs& gamma) {
  char f = rs.type.family;
  if (f != 'B' && f != 'C')
    fail(errc::invalid_argument, "epsilon coordinates defined for B and C only");
  const int n = rs.n;
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) {
    int prev = i > 0 ? gamma[i - 1] : 0;
    e[i] = gamma[i] - prev;
  }
  if (f == 'C') e[n - 1] = 2 * gamma[n - 1] - (n > 1 ? gamma[n - 2] : 0);
  return e;
}

Coeffs from_epsilon(const RootSystem& rs, const std::vector<int>& e) {
  char f = rs.type.family;
  if (f != 'B' && f != 'C')
    fail(errc::invalid_argument, "epsilon coordinates defined for B and C only");
  const int n = rs.n;
  Coeffs k(n);
  int run = 0;
  for (int i = 0; i < n; ++i) {
    run += e[i];
    k[i] = run;
  }
  if (f == 'C') {
    int prev = n > 1 ? k[n - 2] : 0;
    int num = e[n - 1] + prev;
    if (num % 2 != 0)
      fail(errc::invalid_argument, "not in the C-type root lattice");
    k[n - 1] = num / 2;
  }
  return k;
}

std::string root_system_json(const RootSystem& rs) {
  nlohmann::json j;
  j["type"] = rs.type.name();
  auto arr = nlohmann::json::array();
  for (int k = 0; k < rs.npos; ++k) arr.push_back(rs.roots[k].c);
  j["positive_roots"] = arr;
  auto sh = nlohmann::json::array();
  for (int k : short_positive(rs)) sh.push_back(rs.roots[k].c);
  j["short"] = sh;
  return j.dump();
}

}  // namespace smallchar
