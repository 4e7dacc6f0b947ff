#include "hopoly/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "hopoly/error.hpp"

namespace hopoly {

// ---------------------------------------------------------------------------
// CartanType

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0]))) {
    throw ParseError("bad Cartan type '" + std::string(text) + "'");
  }
  CartanType ct;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': ct.series = Series::A; break;
    case 'B': ct.series = Series::B; break;
    case 'C': ct.series = Series::C; break;
    case 'D': ct.series = Series::D; break;
    case 'E': ct.series = Series::E; break;
    case 'F': ct.series = Series::F; break;
    case 'G': ct.series = Series::G; break;
    default: throw ParseError("unknown Cartan series in '" + std::string(text) + "'");
  }
  const std::string_view digits = text.substr(1);
  if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(),
                                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("bad rank in Cartan type '" + std::string(text) + "'");
  }
  ct.rank = std::stoi(std::string(digits));
  if (!ct.admissible()) {
    throw ConstructionError("inadmissible rank for Cartan type '" + std::string(text) + "'");
  }
  return ct;
}

bool CartanType::admissible() const {
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 3;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

std::string CartanType::name() const {
  static constexpr char letters[] = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(series)]) + std::to_string(rank);
}

bool RootVector::is_positive() const {
  bool nonzero = false;
  for (long c : simple_coords) {
    if (c < 0) return false;
    nonzero |= c != 0;
  }
  return nonzero;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

using Matrix = std::vector<std::vector<long>>;

void link(Matrix& a, int i, int j, long aij, long aji) {
  a[i][j] = aij;
  a[j][i] = aji;
}

// Returns the Cartan matrix and root lengths d_i (short = 1).
std::pair<Matrix, std::vector<long>> cartan_data(const CartanType& ct) {
  const int n = ct.rank;
  Matrix a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  std::vector<long> d(n, 1);
  switch (ct.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
      break;
    case Series::B:
      // alpha_n short
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 2, n - 1, -1, -2);
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Series::C:
      // alpha_n long
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 2, n - 1, -2, -1);
      d[n - 1] = 2;
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 3, n - 1, -1, -1);
      break;
    case Series::E:
      // 1-3-4-5-...-n with 2 attached to 4
      link(a, 0, 2, -1, -1);
      link(a, 1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
      break;
    case Series::F:
      link(a, 0, 1, -1, -1);
      link(a, 1, 2, -1, -2);
      link(a, 2, 3, -1, -1);
      d = {2, 2, 1, 1};
      break;
    case Series::G:
      // alpha_1 short, alpha_2 long
      link(a, 0, 1, -3, -1);
      d = {1, 3};
      break;
  }
  return {a, d};
}

std::vector<std::vector<BigRational>> invert(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) throw ConstructionError("singular Cartan matrix");
    std::swap(m[col], m[pivot]);
    const BigRational p = m[col][col];
    for (auto& x : m[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      const BigRational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<std::vector<BigRational>> inv(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  }
  return inv;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

long height(const RootVector& r) {
  return std::accumulate(r.simple_coords.begin(), r.simple_coords.end(), 0L);
}

}  // namespace

std::int64_t weyl_group_order(int rank, std::size_t positive_roots, bool simply_laced) {
  const auto n = static_cast<std::size_t>(rank);
  if (simply_laced) {
    if (positive_roots == n * (n + 1) / 2) return factorial(rank + 1);
    if (rank >= 4 && positive_roots == n * (n - 1)) return (std::int64_t{1} << (rank - 1)) * factorial(rank);
    if (rank == 6 && positive_roots == 36) return 51840;
    if (rank == 7 && positive_roots == 63) return 2903040;
    if (rank == 8 && positive_roots == 120) return 696729600;
  } else {
    if (rank == 2 && positive_roots == 6) return 12;
    if (rank == 4 && positive_roots == 24) return 1152;
    if (positive_roots == n * n) return (std::int64_t{1} << rank) * factorial(rank);
  }
  throw ConstructionError("no irreducible root system with rank " + std::to_string(rank) + " and " +
                          std::to_string(positive_roots) + " positive roots");
}

RootSystem::RootSystem(CartanType type) : type_(type) {
  if (!type_.admissible()) throw ConstructionError("inadmissible Cartan type " + type_.name());
  auto [a, d] = cartan_data(type_);
  cartan_ = std::move(a);
  lengths_ = std::move(d);
  inverse_cartan_ = invert(cartan_);
  const int n = rank();

  gram_.assign(n, std::vector<BigRational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) gram_[i][j] = inverse_cartan_[j][i] * lengths_[j];
  }

  for (int i = 0; i < n; ++i) {
    RootVector r;
    r.simple_coords.assign(n, 0);
    r.simple_coords[i] = 1;
    simple_weights_.push_back(root_weight(r));
  }

  // Reflection closure from the simple roots.
  std::set<std::vector<long>> seen;
  std::deque<std::vector<long>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<long> c(n, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    const std::vector<long> c = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      long pairing = 0;
      for (int k = 0; k < n; ++k) pairing += c[k] * cartan_[i][k];
      std::vector<long> next = c;
      next[i] -= pairing;
      if (RootVector{next, LengthClass::Short}.is_positive() && seen.insert(next).second) {
        queue.push_back(next);
      }
    }
  }
  for (const auto& c : seen) positive_.push_back(RootVector{c, LengthClass::Short});
  std::stable_sort(positive_.begin(), positive_.end(), [](const RootVector& x, const RootVector& y) {
    const long hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x.simple_coords > y.simple_coords;
  });
  for (auto& r : positive_) {
    r.length_class = norm2(r) == 2 ? LengthClass::Short : LengthClass::Long;
    positive_weights_.push_back(root_weight(r));
  }

  // Highest short root: the unique short root dominating all others componentwise.
  std::optional<std::size_t> best;
  for (std::size_t idx = 0; idx < positive_.size(); ++idx) {
    if (positive_[idx].length_class != LengthClass::Short) continue;
    bool dominates = true;
    for (const auto& other : positive_) {
      if (other.length_class != LengthClass::Short) continue;
      for (int k = 0; k < n && dominates; ++k) {
        dominates = other.simple_coords[k] <= positive_[idx].simple_coords[k];
      }
      if (!dominates) break;
    }
    if (dominates) {
      if (best) throw ConstructionError("highest short root is not unique");
      best = idx;
    }
  }
  if (!best) throw ConstructionError("no highest short root found");
  beta_index_ = *best;

  w0_order_ = weyl_group_order(n, positive_.size(), simply_laced());
}

bool RootSystem::simply_laced() const {
  return std::all_of(lengths_.begin(), lengths_.end(), [](long d) { return d == 1; });
}

LengthClass RootSystem::simple_length_class(int node) const {
  return lengths_[node - 1] == 1 ? LengthClass::Short : LengthClass::Long;
}

std::optional<std::size_t> RootSystem::find_positive(const RootVector& r) const {
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    if (positive_[i].simple_coords == r.simple_coords) return i;
  }
  return std::nullopt;
}

Weight RootSystem::root_weight(const RootVector& r) const {
  const int n = rank();
  Weight w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    long s = 0;
    for (int k = 0; k < n; ++k) s += r.simple_coords[k] * cartan_[j][k];
    w[j] = s;
  }
  return w;
}

long RootSystem::norm2(const RootVector& r) const {
  const Weight w = root_weight(r);
  long s = 0;
  for (int k = 0; k < rank(); ++k) s += r.simple_coords[k] * lengths_[k] * w[k];
  return s;
}

long RootSystem::pair_coroot(const RootVector& alpha, const Weight& lam) const {
  long s = 0;
  for (int k = 0; k < rank(); ++k) s += alpha.simple_coords[k] * lengths_[k] * lam[k];
  const long n2 = alpha.length_class == LengthClass::Short ? 2 : norm2(alpha);
  // 2 (alpha, lambda) / (alpha, alpha); integral for lambda in P.
  return 2 * s / n2;
}

BigRational RootSystem::pair_inner(std::span<const BigRational> x, std::span<const BigRational> y) const {
  BigRational sum = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (!is_zero(y[j])) sum += x[i] * y[j] * gram_[i][j];
    }
  }
  return sum;
}

BigRational RootSystem::pair_inner(const Weight& x, const Weight& y) const {
  BigRational sum = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sum += gram_[i][j] * (x[i] * y[j]);
  }
  return sum;
}

Weight RootSystem::reflect(int node, const Weight& lam) const {
  Weight r = lam;
  return r.add_scaled(simple_weights_[node - 1], -lam[node - 1]);
}

RootVector RootSystem::reflect_root(const RootVector& by, const RootVector& alpha) const {
  const long t = pair_coroot(by, root_weight(alpha));
  RootVector r = alpha;
  for (int k = 0; k < rank(); ++k) r.simple_coords[k] -= t * by.simple_coords[k];
  return r;
}

std::int64_t RootSystem::stabilizer_order(const Weight& dominant) const {
  const int n = rank();
  std::vector<int> component(n, -1);
  int components = 0;
  for (int i = 0; i < n; ++i) {
    if (dominant[i] != 0 || component[i] >= 0) continue;
    std::vector<int> stack{i};
    component[i] = components;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (u != v && cartan_[v][u] != 0 && dominant[u] == 0 && component[u] < 0) {
          component[u] = components;
          stack.push_back(u);
        }
      }
    }
    ++components;
  }
  std::int64_t order = 1;
  for (int c = 0; c < components; ++c) {
    int comp_rank = 0;
    bool laced = true;
    long first_len = 0;
    for (int i = 0; i < n; ++i) {
      if (component[i] != c) continue;
      ++comp_rank;
      if (first_len == 0) first_len = lengths_[i];
      laced &= lengths_[i] == first_len;
    }
    std::size_t count = 0;
    for (const auto& r : positive_) {
      bool inside = true;
      for (int k = 0; k < n && inside; ++k) inside = r.simple_coords[k] == 0 || component[k] == c;
      count += inside;
    }
    order *= weyl_group_order(comp_rank, count, laced);
  }
  return order;
}

// ---------------------------------------------------------------------------
// Free operations

BetaPartition partition_by_beta(const RootSystem& rs) {
  BetaPartition p;
  const auto& roots = rs.positive_roots();
  p.prime.resize(roots.size());
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    const long t = rs.pair_coroot(roots[idx], rs.beta_weight());
    RootVector image = rs.reflect_root(rs.beta(), roots[idx]);
    switch (t) {
      case 0: p.r0.push_back(idx); break;
      case 1: p.r1.push_back(idx); break;
      case 2: p.r2.push_back(idx); break;
      default: throw ConstructionError("pairing with the highest short root outside {0,1,2}");
    }
    if (t != 0) {
      for (auto& c : image.simple_coords) c = -c;
    }
    const auto found = rs.find_positive(image);
    if (!found) throw ConstructionError("prime map left the positive roots");
    p.prime[idx] = *found;
  }
  return p;
}

std::vector<Weight> finite_weyl_orbit(const RootSystem& rs, const Weight& lam) {
  if (rs.w0_order() > kWeylEnumerationLimit) {
    throw ResourceError("orbit enumeration refused for " + rs.cartan_type().name() + ": |W_0| = " +
                        std::to_string(rs.w0_order()) + " exceeds " + std::to_string(kWeylEnumerationLimit));
  }
  std::set<Weight> seen{lam};
  std::vector<Weight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (int node = 1; node <= rs.rank(); ++node) {
        if (w[node - 1] == 0) continue;
        Weight r = rs.reflect(node, w);
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::int64_t orbit_size(const RootSystem& rs, const Weight& lam) {
  const Weight dom = dominant_representative(rs, lam).weight;
  return rs.w0_order() / rs.stabilizer_order(dom);
}

DominantRepresentative dominant_representative(const RootSystem& rs, Weight mu) {
  DominantRepresentative out;
  while (true) {
    int node = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      if (mu[i] < 0) {
        node = i + 1;
        break;
      }
    }
    if (node == 0) break;
    mu = rs.reflect(node, mu);
    out.word.push_back(node);
  }
  out.weight = std::move(mu);
  return out;
}

}  // namespace hopoly
