#include "lpakit/pointed_iso.hpp"

#include "lpakit/errors.hpp"
#include "lpakit/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

namespace lpakit {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mulmod(i64 a, i64 b, i64 m) {
  i128 r = static_cast<i128>(a) * b % m;
  return static_cast<i64>(r < 0 ? r + m : r);
}

/// One generator of Aut(T): either x_i *= unit, or x_target += coef * x_source.
struct AutGenerator {
  bool scaling;
  std::size_t source;
  std::size_t target;
  i64 coef;
};

/// Small generating set of (Z/d)^x, built greedily from the smallest units.
std::vector<i64> unit_generators(i64 d) {
  thread_local std::map<i64, std::vector<i64>> cache;
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  std::vector<i64>& gens = cache[d];
  if (d <= 2) return gens;
  std::vector<bool> in(d, false);
  std::vector<i64> members{1};
  in[1] = true;
  for (i64 u = 2; u < d; ++u) {
    if (std::gcd(u, d) != 1 || in[u]) continue;
    gens.push_back(u);
    // Close the subgroup under multiplication by the new generator.
    for (std::size_t k = 0; k < members.size(); ++k) {
      i64 y = mulmod(members[k], u, d);
      while (!in[y]) {
        in[y] = true;
        members.push_back(y);
        y = mulmod(y, u, d);
      }
    }
  }
  return gens;
}

class TorsionSpace {
 public:
  explicit TorsionSpace(const std::vector<BigInt>& torsion) {
    std::uint64_t stride = 1;
    for (const auto& d : torsion) {
      d_.push_back(d.convert_to<i64>());
      stride_.push_back(stride);
      stride *= static_cast<std::uint64_t>(d_.back());
    }
    size_ = stride;
  }

  std::size_t dim() const { return d_.size(); }
  i64 order(std::size_t i) const { return d_[i]; }
  std::uint64_t size() const { return size_; }

  std::uint64_t encode(const std::vector<i64>& x) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < d_.size(); ++i) code += static_cast<std::uint64_t>(x[i]) * stride_[i];
    return code;
  }

  i64 digit(std::uint64_t code, std::size_t i) const { return static_cast<i64>((code / stride_[i]) % d_[i]); }

  std::uint64_t apply(const AutGenerator& g, std::uint64_t code) const {
    const i64 xi = digit(code, g.source);
    if (g.scaling) {
      const i64 nx = mulmod(xi, g.coef, d_[g.source]);
      return code - static_cast<std::uint64_t>(xi) * stride_[g.source] + static_cast<std::uint64_t>(nx) * stride_[g.source];
    }
    const i64 xj = digit(code, g.target);
    const i64 nx = (xj + mulmod(xi, g.coef, d_[g.target])) % d_[g.target];
    return code - static_cast<std::uint64_t>(xj) * stride_[g.target] + static_cast<std::uint64_t>(nx) * stride_[g.target];
  }

  std::vector<AutGenerator> generators() const {
    std::vector<AutGenerator> gens;
    for (std::size_t i = 0; i < d_.size(); ++i)
      for (i64 u : unit_generators(d_[i])) gens.push_back({true, i, i, u});
    for (std::size_t i = 0; i < d_.size(); ++i)
      for (std::size_t j = 0; j < d_.size(); ++j) {
        if (i == j) continue;
        // g_i -> g_i + c g_j needs ord(c g_j) | d_i.
        const i64 c = i < j ? d_[j] / d_[i] : 1;
        if (c % d_[j] != 0) gens.push_back({false, i, j, c});
      }
    return gens;
  }

  /// Row-major k x k identity (row = coordinate, column = generator).
  std::vector<i64> identity() const {
    std::vector<i64> m(d_.size() * d_.size(), 0);
    for (std::size_t i = 0; i < d_.size(); ++i) m[i * d_.size() + i] = 1 % d_[i];
    return m;
  }

  /// m <- (matrix of g) * m, as a row operation.
  void left_multiply(const AutGenerator& g, std::vector<i64>& m) const {
    const std::size_t k = d_.size();
    if (g.scaling) {
      for (std::size_t j = 0; j < k; ++j) m[g.source * k + j] = mulmod(m[g.source * k + j], g.coef, d_[g.source]);
      return;
    }
    const i64 d = d_[g.target];
    for (std::size_t j = 0; j < k; ++j)
      m[g.target * k + j] = (m[g.target * k + j] + mulmod(m[g.source * k + j], g.coef, d)) % d;
  }

 private:
  std::vector<i64> d_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t size_ = 1;
};

BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

BigInt content(const IntVector& f) {
  BigInt g = 0;
  for (Eigen::Index i = 0; i < f.size(); ++i) g = boost::multiprecision::gcd(g, f(i));
  return abs(g);
}

/// Unimodular A with A f = f' (both of content g > 0).
IntMatrix match_free_parts(const IntVector& f, const IntVector& f_target) {
  const auto sf = smith(IntMatrix(f));
  const auto st = smith(IntMatrix(f_target));
  const Eigen::Index r = f.size();
  IntMatrix sign = IntMatrix::Identity(r, r);
  sign(0, 0) = sf.V(0, 0) * st.V(0, 0);
  return st.U_inv * sign * sf.U;
}

/// Bezout coefficients c with c . v = gcd(v).
IntVector bezout(const IntVector& v) {
  IntVector c = IntVector::Zero(v.size());
  BigInt g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    BigInt x, y;
    BigInt ng = ext_gcd(g, v(i), x, y);
    c *= x;
    c(i) = y;
    g = ng;
  }
  return c;
}

PointedIsoResult no(const std::string& kind, const std::string& detail) {
  PointedIsoResult r;
  r.verdict = IsoVerdict::No;
  r.certificate_kind = kind;
  r.certificate = detail;
  return r;
}

}  // namespace

PointedIsoOptions options_from_env(std::uint64_t budget) {
  PointedIsoOptions options;
  options.budget = budget;
  if (const char* seed = std::getenv("LPAKIT_SEED")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(seed, &end, 10);
    if (end != seed && *end == '\0') options.seed = value;
  }
  return options;
}

IntVector apply_endomorphism(const FgAbGroup& g, const IntMatrix& m, const IntVector& x) {
  return g.reduce(m * x);
}

bool is_automorphism(const FgAbGroup& g, const IntMatrix& m) {
  const Eigen::Index k = static_cast<Eigen::Index>(g.torsion_count());
  const Eigen::Index n = static_cast<Eigen::Index>(g.generator_count());
  if (m.rows() != n || m.cols() != n) return false;
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = k; j < n; ++j)
      if (m(j, i) != 0) return false;
    for (Eigen::Index j = 0; j < k; ++j)
      if ((g.torsion[i] * m(j, i)) % g.torsion[j] != 0) return false;
  }
  if (n > k) {
    for (const auto& d : invariant_factors(IntMatrix(m.bottomRightCorner(n - k, n - k))))
      if (d != 1) return false;
  }
  if (k > 0) {
    IntMatrix aug = IntMatrix::Zero(k, 2 * k);
    aug.leftCols(k) = m.topLeftCorner(k, k);
    for (Eigen::Index i = 0; i < k; ++i) aug(i, k + i) = g.torsion[i];
    for (const auto& d : invariant_factors(aug))
      if (d != 1) return false;
  }
  return true;
}

PointedIsoResult pointed_isomorphic(const PointedAbGroup& p, const PointedAbGroup& q,
                                    const PointedIsoOptions& options) {
  if (!(p.group == q.group))
    return no("group-mismatch", p.group.to_string() + " is not isomorphic to " + q.group.to_string());
  const FgAbGroup& g = p.group;
  const IntVector x = g.reduce(p.point);
  const IntVector y = g.reduce(q.point);
  const BigInt ox = g.element_order(x);
  const BigInt oy = g.element_order(y);
  if (ox != oy) {
    auto show = [](const BigInt& o) { return o == 0 ? std::string("infinite") : o.str(); };
    return no("order-mismatch", "element orders " + show(ox) + " and " + show(oy) + " differ");
  }

  const Eigen::Index k = static_cast<Eigen::Index>(g.torsion_count());
  const Eigen::Index r = static_cast<Eigen::Index>(g.rank);
  const IntVector f = x.tail(r);
  const IntVector f_target = y.tail(r);
  const BigInt gf = content(f);
  if (gf != content(f_target)) {
    return no("free-content-mismatch",
              "free parts have contents " + gf.str() + " and " + content(f_target).str());
  }

  if (g.torsion_order() > options.budget) {
    PointedIsoResult r_unknown;
    r_unknown.verdict = IsoVerdict::Unknown;
    r_unknown.certificate = "torsion subgroup of order " + g.torsion_order().str() +
                            " exceeds the search budget " + std::to_string(options.budget);
    return r_unknown;
  }

  // Orbit of the torsion part under Aut(T), looking for t' modulo gT.
  TorsionSpace space(g.torsion);
  std::vector<i64> start(k), goal(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    start[i] = x(i).convert_to<i64>();
    goal[i] = y(i).convert_to<i64>();
  }
  auto gens = space.generators();
  if (options.seed) {
    std::mt19937_64 rng(*options.seed);
    std::shuffle(gens.begin(), gens.end(), rng);
  }
  // s matches when goal - s lies in gT, i.e. coordinate j is divisible by gcd(g, d_j).
  std::vector<i64> modulus(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const i64 d = space.order(j);
    modulus[j] = gf == 0 ? d : std::gcd(static_cast<i64>(BigInt(gf % d).convert_to<i64>()), d);
  }
  auto matches = [&](std::uint64_t code) {
    for (Eigen::Index j = 0; j < k; ++j)
      if ((goal[j] - space.digit(code, j)) % modulus[j] != 0) return false;
    return true;
  };
  const std::uint64_t size = space.size();
  constexpr std::uint64_t unseen = ~std::uint64_t{0};
  std::vector<std::uint64_t> parent(size, unseen);
  std::vector<std::uint32_t> via(size, 0);
  const std::uint64_t root = space.encode(start);
  parent[root] = root;
  std::vector<std::uint64_t> queue;
  queue.reserve(size);
  queue.push_back(root);
  std::optional<std::uint64_t> found;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t cur = queue[head];
    if (matches(cur)) {
      found = cur;
      break;
    }
    for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
      const std::uint64_t next = space.apply(gens[gi], cur);
      if (parent[next] != unseen) continue;
      parent[next] = cur;
      via[next] = gi;
      queue.push_back(next);
    }
  }
  if (!found) {
    PointedIsoResult r_no = no("torsion-orbit", "no automorphism of the torsion subgroup moves the torsion part into the target coset");
    r_no.modulus = gf;
    r_no.orbit_size = queue.size();
    return r_no;
  }
  // Compose the generators along the BFS path into C.
  std::vector<std::uint32_t> word;
  for (std::uint64_t c = *found; c != root; c = parent[c]) word.push_back(via[c]);
  auto c_mat = space.identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) space.left_multiply(gens[*it], c_mat);

  PointedIsoResult result;
  result.verdict = IsoVerdict::Yes;
  result.orbit_size = queue.size();
  const Eigen::Index n = k + r;
  IntMatrix w = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) w(i, j) = BigInt(c_mat[static_cast<std::size_t>(i * k + j)]);
  if (r > 0) {
    if (gf == 0) {
      w.bottomRightCorner(r, r) = IntMatrix::Identity(r, r);
    } else {
      w.bottomRightCorner(r, r) = match_free_parts(f, f_target);
      // B f = t' - C t, solved as B = w c^T with g w = t' - C t and c . (f/g) = 1.
      const IntVector ct = g.reduce(IntVector(w.topLeftCorner(k, k) * x.head(k)));
      IntVector wvec(k);
      for (Eigen::Index j = 0; j < k; ++j) {
        const BigInt d = g.torsion[j];
        const BigInt z = mod_floor(y(j) - ct(j), d);
        const BigInt h = boost::multiprecision::gcd(gf, d);
        BigInt inv, unused;
        ext_gcd(BigInt((gf / h) % (d / h)), BigInt(d / h), inv, unused);
        wvec(j) = mod_floor((z / h) * inv, d / h);
      }
      const IntVector c = bezout(IntVector(f / gf));
      w.topRightCorner(k, r) = wvec * c.transpose();
      for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = k; j < n; ++j) w(i, j) = mod_floor(w(i, j), g.torsion[i]);
    }
  }
  if (!is_automorphism(g, w) || apply_endomorphism(g, w, x) != y)
    throw VerificationError("pointed isomorphism witness failed verification");
  result.witness = std::move(w);
  return result;
}

nlohmann::json to_json(const PointedIsoResult& r) {
  nlohmann::json j;
  switch (r.verdict) {
    case IsoVerdict::Yes:
      j["verdict"] = "yes";
      j["witness"] = to_json(r.witness);
      break;
    case IsoVerdict::No:
      j["verdict"] = "no";
      j["certificate"] = {{"kind", r.certificate_kind}, {"detail", r.certificate}};
      if (r.certificate_kind == "torsion-orbit") {
        j["certificate"]["modulus"] = to_json(r.modulus);
        j["certificate"]["orbit_size"] = r.orbit_size;
      }
      break;
    case IsoVerdict::Unknown:
      j["verdict"] = "unknown";
      j["reason"] = r.certificate;
      break;
  }
  return j;
}

}  // namespace lpakit
