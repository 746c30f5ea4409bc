#include "tradekit/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tradekit {

namespace {

// Arithmetic tables for GF(p^e), q <= 32. Elements are 0..q-1, encoding
// polynomials over GF(p) with digits base p. Extension fields reduce by a
// fixed irreducible polynomial; primes fall back to plain modular arithmetic.
struct GaloisField {
  int q = 0;
  int p = 0;
  int e = 1;
  std::vector<int> add_table;
  std::vector<int> mul_table;

  int add(int a, int b) const { return add_table[a * q + b]; }
  int mul(int a, int b) const { return mul_table[a * q + b]; }
};

int small_prime_factor(int n) {
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

// x^e = sum of reduction[i] * x^i, coefficients mod p.
const std::map<int, std::vector<int>>& reduction_polys() {
  static const std::map<int, std::vector<int>> polys = {
      {4, {1, 1}},           // x^2 = x + 1
      {8, {1, 1, 0}},        // x^3 = x + 1
      {9, {2, 0}},           // x^2 = 2
      {16, {1, 1, 0, 0}},    // x^4 = x + 1
      {25, {4, 4}},          // x^2 = 4x + 4
      {27, {2, 1, 0}},       // x^3 = x + 2
      {32, {1, 0, 1, 0, 0}}  // x^5 = x^2 + 1
  };
  return polys;
}

std::vector<int> digits_of(int value, int p, int e) {
  std::vector<int> d(e, 0);
  for (int i = 0; i < e; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

int value_of(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
    v = v * p + d[i];
  }
  return v;
}

const GaloisField& field(int q) {
  static std::map<int, GaloisField> cache;
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  if (!is_prime_power(q) || q > 32) {
    throw std::invalid_argument(std::to_string(q) +
                                " is not a supported prime power (<= 32)");
  }
  GaloisField f;
  f.q = q;
  f.p = small_prime_factor(q);
  f.e = 0;
  for (int v = q; v > 1; v /= f.p) ++f.e;
  f.add_table.resize(q * q);
  f.mul_table.resize(q * q);

  std::vector<int> reduction;
  if (f.e > 1) reduction = reduction_polys().at(q);

  for (int a = 0; a < q; ++a) {
    auto da = digits_of(a, f.p, f.e);
    for (int b = 0; b < q; ++b) {
      auto db = digits_of(b, f.p, f.e);
      std::vector<int> sum(f.e, 0);
      for (int i = 0; i < f.e; ++i) sum[i] = (da[i] + db[i]) % f.p;
      f.add_table[a * q + b] = value_of(sum, f.p);

      std::vector<int> prod(2 * f.e - 1, 0);
      for (int i = 0; i < f.e; ++i) {
        for (int j = 0; j < f.e; ++j) {
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
        }
      }
      for (int d = 2 * f.e - 2; d >= f.e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < f.e; ++i) {
          prod[d - f.e + i] = (prod[d - f.e + i] + c * reduction[i]) % f.p;
        }
      }
      prod.resize(f.e);
      f.mul_table[a * q + b] = value_of(prod, f.p);
    }
  }
  return cache.emplace(q, std::move(f)).first->second;
}

}  // namespace

bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = small_prime_factor(q);
  while (q % p == 0) q /= p;
  return q == 1;
}

TradeSystem one_factorization(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("one-factorization needs an even n >= 2");
  }
  std::vector<BlockCollection> classes;
  if (n == 2) {
    classes.push_back(BlockCollection{{Block{1, 2}}});
    return TradeSystem::make(std::move(classes), 2, 1);
  }
  // Circle method: fix point n, rotate 1..n-1.
  const int c = n - 1;
  for (int r = 0; r < c; ++r) {
    BlockCollection cls;
    cls.blocks.push_back(Block{n, r + 1});
    for (int i = 1; i <= n / 2 - 1; ++i) {
      int a = (r + i) % c;
      int b = (r - i + c) % c;
      cls.blocks.push_back(Block{a + 1, b + 1});
    }
    std::sort(cls.blocks.begin(), cls.blocks.end());
    classes.push_back(std::move(cls));
  }
  // Lexicographic class order; class j then pairs point 1 with point j+1.
  std::sort(classes.begin(), classes.end());
  return TradeSystem::make(std::move(classes), 2, 1);
}

ResolvableDesign affine_plane_rb(int q) {
  const GaloisField& f = field(q);
  auto label = [q](int x, int y) { return x * q + y + 1; };
  ResolvableDesign d;
  d.v = q * q;
  d.block_size = q;
  d.lambda = 1;

  BlockCollection vertical;
  for (int x = 0; x < q; ++x) {
    std::vector<Element> line;
    for (int y = 0; y < q; ++y) line.push_back(label(x, y));
    vertical.blocks.push_back(Block(line));
  }
  d.classes.push_back(std::move(vertical));

  for (int a = 0; a < q; ++a) {
    BlockCollection cls;
    for (int b = 0; b < q; ++b) {
      std::vector<Element> line;
      for (int x = 0; x < q; ++x) {
        line.push_back(label(x, f.add(f.mul(a, x), b)));
      }
      cls.blocks.push_back(Block(line));
    }
    d.classes.push_back(std::move(cls));
  }
  return d;
}

VerificationReport verify_resolvable_design(const ResolvableDesign& d) {
  VerificationReport report;
  std::set<Element> points;
  for (const auto& cls : d.classes) {
    for (const auto& b : cls.blocks) {
      points.insert(b.elems.begin(), b.elems.end());
    }
  }
  // Each class covers every point exactly once.
  for (size_t c = 0; c < d.classes.size(); ++c) {
    std::map<Element, int> seen;
    for (const auto& b : d.classes[c].blocks) {
      for (Element e : b.elems) ++seen[e];
    }
    for (Element e : points) {
      int cnt = seen.count(e) ? seen[e] : 0;
      if (cnt != 1) {
        report.add(ClassCoverage{static_cast<int>(c), e, cnt});
      }
    }
  }
  // Every pair of points in exactly lambda blocks overall.
  std::map<std::pair<Element, Element>, int> pairs;
  for (const auto& cls : d.classes) {
    for (const auto& b : cls.blocks) {
      for (size_t i = 0; i < b.elems.size(); ++i) {
        for (size_t j = i + 1; j < b.elems.size(); ++j) {
          ++pairs[{b.elems[i], b.elems[j]}];
        }
      }
    }
  }
  for (Element a : points) {
    for (Element b : points) {
      if (a >= b) continue;
      auto it = pairs.find({a, b});
      int cnt = it == pairs.end() ? 0 : it->second;
      if (cnt != d.lambda) {
        report.add(PairReuse{a, b, cnt});
      }
    }
  }
  return report;
}

RbParams rb_params(long v, int k, int lambda) {
  if (v < k || k < 2 || lambda < 1) {
    throw std::invalid_argument("rb_params needs v >= k >= 2 and lambda >= 1");
  }
  if ((lambda * (v - 1)) % (k - 1) != 0) {
    throw NecessaryConditionFailure(
        "lambda(v-1) == 0 (mod k-1) fails: " + std::to_string(lambda) + "*(" +
        std::to_string(v) + "-1) not divisible by " + std::to_string(k - 1));
  }
  if (v % k != 0) {
    throw NecessaryConditionFailure("v == 0 (mod k) fails: " +
                                    std::to_string(v) + " not divisible by " +
                                    std::to_string(k));
  }
  RbParams out;
  out.parallel_classes = lambda * (v - 1) / (k - 1);
  out.block_count = out.parallel_classes * (v / k);
  return out;
}

ExistenceVerdict rb4_exists(long v) {
  if (v % 12 == 4) {
    return {Existence::exists, "v == 4 (mod 12)"};
  }
  return {Existence::not_exists,
          "RB(v,4,1) exists exactly when v == 4 (mod 12); v == " +
              std::to_string(v % 12) + " (mod 12)"};
}

RgddParams rgdd_solve(int g, int u, int k) {
  if (g < 1 || u < 2 || k < 2) {
    throw std::invalid_argument("rgdd_solve needs g >= 1, u >= 2, k >= 2");
  }
  const long v = static_cast<long>(g) * u;
  if ((v - g) % (k - 1) != 0) {
    throw NecessaryConditionFailure(
        "v = (k-1)r* + g fails: (" + std::to_string(v) + " - " +
        std::to_string(g) + ") not divisible by k-1 = " + std::to_string(k - 1));
  }
  RgddParams out;
  out.group_size = g;
  out.group_count = u;
  out.block_size = k;
  out.parallel_classes = (v - g) / (k - 1);
  const long lhs = (out.parallel_classes + 1) * v - v;  // kb = (r*+1)v - gu
  if (lhs % k != 0) {
    throw NecessaryConditionFailure(
        "(r*+1)v = kb + gu fails: " + std::to_string(lhs) +
        " not divisible by k = " + std::to_string(k));
  }
  out.block_count = lhs / k;
  // Re-substitution check of both counting equations.
  if (v != (k - 1) * out.parallel_classes + g ||
      (out.parallel_classes + 1) * v != k * out.block_count + v) {
    throw std::logic_error("rgdd_solve output fails re-substitution");
  }
  return out;
}

ExistenceVerdict rgdd4_exists(int g, int u) {
  if (u < 4) {
    return {Existence::not_exists, "u >= 4 fails"};
  }
  if ((static_cast<long>(g) * u) % 4 != 0) {
    return {Existence::not_exists, "gu == 0 (mod 4) fails"};
  }
  if ((static_cast<long>(g) * (u - 1)) % 3 != 0) {
    return {Existence::not_exists, "g(u-1) == 0 (mod 3) fails"};
  }
  static const std::vector<std::pair<int, int>> definite = {
      {2, 4}, {3, 4}, {6, 4}, {2, 10}};
  for (auto [dg, du] : definite) {
    if (g == dg && u == du) {
      return {Existence::not_exists, "tabulated definite exception (g,u)=(" +
                                         std::to_string(g) + "," +
                                         std::to_string(u) + ")"};
    }
  }
  auto possible = [&]() -> bool {
    static const std::vector<int> g2_u = {34,  46,  52,  70,  82,  94,
                                          100, 118, 130, 142, 178, 184,
                                          202, 214, 238, 250, 334, 346};
    if (g == 2 &&
        std::find(g2_u.begin(), g2_u.end(), u) != g2_u.end())
      return true;
    static const std::vector<int> g10_u = {4, 34, 52, 94};
    if (g == 10 &&
        std::find(g10_u.begin(), g10_u.end(), u) != g10_u.end())
      return true;
    static const std::vector<int> big_g = {478, 502, 514, 526, 614, 626, 686};
    bool g_in_band =
        (g >= 14 && g <= 454) ||
        std::find(big_g.begin(), big_g.end(), g) != big_g.end();
    if (g_in_band && (u == 10 || u == 70 || u == 82)) return true;
    if (g == 6 && (u == 6 || u == 54 || u == 68)) return true;
    if (g == 18 && (u == 18 || u == 38 || u == 62)) return true;
    if (g == 9 && u == 44) return true;
    if (g == 12 && u == 27) return true;
    if (g == 24 && u == 23) return true;
    static const std::vector<int> g36_u = {11, 14, 15, 18, 23};
    if (g == 36 &&
        std::find(g36_u.begin(), g36_u.end(), u) != g36_u.end())
      return true;
    return false;
  };
  if (possible()) {
    return {Existence::possible_exception,
            "tabulated possible exception (g,u)=(" + std::to_string(g) + "," +
                std::to_string(u) + ")"};
  }
  return {Existence::exists, "necessary conditions hold and (g,u) is not a "
                             "tabulated exception"};
}

TradeSystem rb_to_sbs(const ResolvableDesign& design) {
  if (design.lambda != 1) {
    throw std::invalid_argument(
        "rb_to_sbs needs lambda = 1; repeated pairs would break the "
        "solely-balanced property");
  }
  if (design.v % design.block_size != 0) {
    throw std::invalid_argument("design points not divisible by block size");
  }
  return TradeSystem::make(design.classes, design.block_size, 1,
                           design.v / design.block_size);
}

long sbs_mu_bound(long v, int k, long m) {
  if (static_cast<long>(k) * m != v) {
    throw std::invalid_argument("sbs_mu_bound hypothesis k*m = v fails");
  }
  if (k < 2) throw std::invalid_argument("sbs_mu_bound needs k >= 2");
  return (v - 1) / (k - 1);
}

TradeSystem transversal_design_sbs(int g, int u) {
  if (u < 2 || u > g) {
    throw std::invalid_argument(
        "transversal design needs 2 <= u <= g (one point per group, "
        "distinct slopes)");
  }
  const GaloisField& f = field(g);
  std::vector<BlockCollection> classes;
  for (int a = 0; a < g; ++a) {
    BlockCollection cls;
    for (int b = 0; b < g; ++b) {
      std::vector<Element> block;
      for (int i = 0; i < u; ++i) {
        block.push_back(i * g + f.add(f.mul(a, i), b));
      }
      cls.blocks.push_back(Block(block));
    }
    classes.push_back(std::move(cls));
  }
  return TradeSystem::make(std::move(classes), u, 1, g);
}

TradeSystem grid_partition_sbs(int n, int mu) {
  if (n < 2) throw std::invalid_argument("grid needs n >= 2");
  if (mu < 2 || mu > 3) {
    throw std::invalid_argument(
        "grid partitions support mu in {2,3}: rows, columns and one "
        "wrap-around diagonal");
  }
  std::vector<BlockCollection> classes;
  BlockCollection rows;
  for (int i = 0; i < n; ++i) {
    std::vector<Element> block;
    for (int j = 0; j < n; ++j) block.push_back(i * n + j);
    rows.blocks.push_back(Block(block));
  }
  classes.push_back(std::move(rows));
  BlockCollection cols;
  for (int j = 0; j < n; ++j) {
    std::vector<Element> block;
    for (int i = 0; i < n; ++i) block.push_back(i * n + j);
    cols.blocks.push_back(Block(block));
  }
  classes.push_back(std::move(cols));
  if (mu == 3) {
    BlockCollection diag;
    for (int d = 0; d < n; ++d) {
      std::vector<Element> block;
      for (int i = 0; i < n; ++i) block.push_back(i * n + (d + i) % n);
      diag.blocks.push_back(Block(block));
    }
    classes.push_back(std::move(diag));
  }
  return TradeSystem::make(std::move(classes), n, 1, n);
}

}  // namespace tradekit
