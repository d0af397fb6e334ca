#include "msl/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "msl/error.hpp"
#include "msl/parallel.hpp"

namespace msl {

namespace {

constexpr int kMaxPermDegree = 12;
constexpr int kMaxTableDegree = 9;
using Perm = std::array<std::uint8_t, kMaxPermDegree>;

Partition sorted_desc(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

Partition cycle_type(const Perm& p, int d) {
  std::array<bool, kMaxPermDegree> seen{};
  Partition out;
  for (int i = 0; i < d; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  return sorted_desc(out);
}

Perm compose(const Perm& a, const Perm& b, int d) {
  Perm c{};
  for (int i = 0; i < d; ++i) c[i] = a[b[i]];
  return c;
}

Perm identity_perm(int d) {
  Perm p{};
  for (int i = 0; i < d; ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm class_representative(int d, const Partition& mu) {
  Perm p = identity_perm(d);
  int start = 0;
  for (int len : mu) {
    for (int k = 0; k < len; ++k) p[start + k] = static_cast<std::uint8_t>(start + (k + 1) % len);
    start += len;
  }
  return p;
}

struct UnionFind {
  std::array<std::uint8_t, kMaxPermDegree> parent{};
  int components;
  explicit UnionFind(int d) : components(d) {
    for (int i = 0; i < d; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = static_cast<std::uint8_t>(b);
      --components;
    }
  }
  void join_perm(const Perm& p, int d) {
    for (int i = 0; i < d; ++i) join(i, p[i]);
  }
};

using ClassTable = std::map<Partition, std::vector<Perm>>;

const ClassTable& class_table(int d) {
  static std::mutex mu;
  static std::map<int, ClassTable> tables;
  std::lock_guard lock(mu);
  auto it = tables.find(d);
  if (it != tables.end()) return it->second;
  ClassTable t;
  Perm p = identity_perm(d);
  do {
    t[cycle_type(p, d)].push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + d));
  return tables.emplace(d, std::move(t)).first->second;
}

const std::vector<Perm>& class_members(int d, const Partition& mu) {
  static const std::vector<Perm> empty;
  const auto& t = class_table(d);
  auto it = t.find(sorted_desc(mu));
  return it == t.end() ? empty : it->second;
}

// Counts completions of s_0 = first over positions 1..q. The last permutation
// is forced to be the inverse of the running product.
std::uint64_t count_with_first(int d, const Perm& first,
                               const std::vector<const std::vector<Perm>*>& middle, const Partition& last_type) {
  const std::size_t depth = middle.size();
  std::uint64_t count = 0;
  std::vector<Perm> prefix(depth + 1);
  prefix[0] = first;
  std::vector<std::size_t> idx(depth, 0);
  auto finish = [&](const Perm& product) {
    if (cycle_type(product, d) != last_type) return;
    UnionFind uf(d);
    for (std::size_t k = 0; k <= depth; ++k) uf.join_perm(k == 0 ? first : (*middle[k - 1])[idx[k - 1]], d);
    uf.join_perm(product, d);
    if (uf.components == 1) ++count;
  };
  if (depth == 0) {
    finish(first);
    return count;
  }
  // odometer over the middle permutations
  std::size_t level = 0;
  while (true) {
    if (idx[level] < middle[level]->size()) {
      prefix[level + 1] = compose(prefix[level], (*middle[level])[idx[level]], d);
      if (level + 1 == depth) {
        finish(prefix[depth]);
        ++idx[level];
      } else {
        ++level;
        idx[level] = 0;
      }
    } else {
      if (level == 0) break;
      --level;
      ++idx[level];
    }
  }
  return count;
}

struct Prepared {
  int d;
  Partition first;
  Partition last;
  std::vector<const std::vector<Perm>*> middle;
};

Prepared prepare(const HurwitzProblem& p) {
  validate(p);
  if (p.degree > kMaxTableDegree) throw BoundExceeded("degree too large for permutation enumeration", 0);
  if (p.profiles.empty()) throw InputError("Hurwitz problem needs at least one profile");
  Prepared out;
  out.d = p.degree;
  out.first = sorted_desc(p.profiles.front());
  out.last = sorted_desc(p.profiles.back());
  for (std::size_t i = 1; i + 1 < p.profiles.size(); ++i) out.middle.push_back(&class_members(p.degree, p.profiles[i]));
  return out;
}

std::uint64_t single_profile_count(const HurwitzProblem& p) {
  // s_0 = identity, transitive only for d = 1
  return (p.degree == 1) ? 1 : 0;
}

}  // namespace

void validate(const HurwitzProblem& p) {
  if (p.degree < 1) throw InputError("Hurwitz degree must be positive");
  for (const auto& mu : p.profiles) {
    if (mu.empty()) throw InputError("empty ramification profile");
    int sum = 0;
    for (int part : mu) {
      if (part < 1) throw InputError("profile parts must be positive");
      sum += part;
    }
    if (sum != p.degree) throw InputError("profile does not partition the degree");
  }
}

int genus_zero_dimension(const HurwitzProblem& p) {
  int parts = 0;
  for (const auto& mu : p.profiles) parts += static_cast<int>(mu.size());
  return 2 * p.degree - 2 + parts - p.degree * static_cast<int>(p.profiles.size());
}

Integer class_size(int d, const Partition& mu) {
  Integer n;
  mpz_fac_ui(n.get_mpz_t(), static_cast<unsigned long>(d));
  std::map<int, int> mult;
  for (int part : mu) ++mult[part];
  Integer z = 1;
  for (auto [part, k] : mult) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(k));
    z *= pw * f;
  }
  return n / z;
}

std::uint64_t count_factorizations_serial(const HurwitzProblem& p) {
  if (p.profiles.size() == 1) {
    validate(p);
    return single_profile_count(p);
  }
  const Prepared pr = prepare(p);
  const Perm first = class_representative(pr.d, pr.first);
  const std::uint64_t fixed = count_with_first(pr.d, first, pr.middle, pr.last);
  return fixed * class_size(pr.d, pr.first).get_ui();
}

std::uint64_t count_factorizations_parallel(const HurwitzProblem& p) {
  if (p.profiles.size() <= 2) return count_factorizations_serial(p);
  const Prepared pr = prepare(p);
  const Perm first = class_representative(pr.d, pr.first);
  const auto& outer = *pr.middle.front();
  std::vector<const std::vector<Perm>*> rest(pr.middle.begin() + 1, pr.middle.end());
  std::uint64_t fixed = 0;
  const long n = static_cast<long>(outer.size());
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : fixed) num_threads(thread_count())
  for (long i = 0; i < n; ++i) {
    std::vector<Perm> single{outer[i]};
    std::vector<const std::vector<Perm>*> mid{&single};
    mid.insert(mid.end(), rest.begin(), rest.end());
    fixed += count_with_first(pr.d, first, mid, pr.last);
  }
  return fixed * class_size(pr.d, pr.first).get_ui();
}

std::uint64_t count_factorizations_unfixed(const HurwitzProblem& p) {
  if (p.profiles.size() == 1) {
    validate(p);
    return single_profile_count(p);
  }
  const Prepared pr = prepare(p);
  std::uint64_t total = 0;
  for (const Perm& first : class_members(pr.d, pr.first))
    total += count_with_first(pr.d, first, pr.middle, pr.last);
  return total;
}

namespace {

struct CacheKey {
  int d;
  std::vector<Partition> profiles;
  bool operator<(const CacheKey& o) const { return d != o.d ? d < o.d : profiles < o.profiles; }
};

std::shared_mutex cache_mutex;
std::map<CacheKey, Rational> cache;

}  // namespace

Rational hurwitz_number_marked(const HurwitzProblem& p, const HurwitzOptions& opts) {
  validate(p);
  if (genus_zero_dimension(p) != 0) throw DomainError("not a rigid local problem");
  if (p.degree > opts.max_degree) throw BoundExceeded("Hurwitz degree exceeds bound", 0);
  CacheKey key{p.degree, {}};
  for (const auto& mu : p.profiles) key.profiles.push_back(sorted_desc(mu));
  std::sort(key.profiles.begin(), key.profiles.end());
  if (opts.use_cache) {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  HurwitzProblem canonical{p.degree, key.profiles};
  const std::uint64_t raw = opts.parallel ? count_factorizations_parallel(canonical) : count_factorizations_serial(canonical);
  Integer num = Integer(std::to_string(raw));
  for (const auto& mu : key.profiles) {
    std::map<int, int> mult;
    for (int part : mu) ++mult[part];
    for (auto [part, k] : mult) {
      (void)part;
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
      num *= f;
    }
  }
  Integer den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(p.degree));
  Rational h(num, den);
  h.canonicalize();
  if (opts.use_cache) {
    std::unique_lock lock(cache_mutex);
    cache.emplace(key, h);
  }
  return h;
}

void clear_hurwitz_cache() {
  std::unique_lock lock(cache_mutex);
  cache.clear();
}

std::size_t hurwitz_cache_size() {
  std::shared_lock lock(cache_mutex);
  return cache.size();
}

}  // namespace msl
