#include "qsc/lr.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace qsc {
namespace {

// --- LR skew tableau counter --------------------------------------------
//
// Cells of nu/lambda are visited in reverse reading order (each row right to
// left, rows top to bottom). In that order the lattice-word condition is a
// running constraint: entry e may be placed only while #e < #(e-1) so far,
// and row weakness / column strictness reduce to comparisons against the two
// already-placed neighbours.
struct LrCounter {
  const Partition& lambda;
  const Partition& nu;
  Int rows;
  std::vector<Int> remaining;          // boxes of each entry still to place
  std::vector<Int> placed;             // boxes of each entry already placed
  std::vector<std::vector<Int>> grid;  // grid[row][col], 0 = empty
  Int count = 0;

  LrCounter(const Partition& l, const Partition& m, const Partition& n)
      : lambda(l), nu(n), rows(n.length()) {
    remaining.assign(static_cast<size_t>(m.length()) + 1, 0);
    placed.assign(remaining.size(), 0);
    for (Int i = 0; i < m.length(); ++i) remaining[static_cast<size_t>(i + 1)] = m[i];
    grid.resize(static_cast<size_t>(rows));
    for (Int r = 0; r < rows; ++r) grid[static_cast<size_t>(r)].assign(static_cast<size_t>(n[r]), 0);
  }

  Int& cell(Int r, Int c) { return grid[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

  void fill(Int row, Int col) {
    while (row < rows && col < lambda[row]) {
      ++row;
      col = row < rows ? nu[row] - 1 : 0;
    }
    if (row >= rows) {
      ++count;
      return;
    }
    Int above = (row > 0 && col < nu[row - 1] && col >= lambda[row - 1]) ? cell(row - 1, col) : 0;
    Int right = col + 1 < nu[row] ? cell(row, col + 1) : 0;
    Int max_entry = static_cast<Int>(remaining.size()) - 1;
    for (Int e = 1; e <= max_entry; ++e) {
      if (remaining[static_cast<size_t>(e)] == 0) continue;
      if (right != 0 && e > right) continue;   // rows weakly increase
      if (above != 0 && e <= above) continue;  // columns strictly increase
      if (e > 1 && placed[static_cast<size_t>(e)] >= placed[static_cast<size_t>(e - 1)]) continue;
      cell(row, col) = e;
      --remaining[static_cast<size_t>(e)];
      ++placed[static_cast<size_t>(e)];
      fill(row, col - 1);
      cell(row, col) = 0;
      ++remaining[static_cast<size_t>(e)];
      --placed[static_cast<size_t>(e)];
    }
  }
};

// --- product expansion ----------------------------------------------------

using Expansion = std::map<Partition, Int>;

// Emits all q >= p with q/p a horizontal strip of size k and at most
// max_rows rows: p_i <= q_i <= p_{i-1}.
void pieri_strips(const Partition& p, Int k, Int max_rows, std::vector<Int>& acc, Int row,
                  Int left, const std::function<void(const std::vector<Int>&)>& emit) {
  Int nrows = static_cast<Int>(acc.size());
  if (row == nrows) {
    if (left == 0) emit(acc);
    return;
  }
  Int lo = p[row];
  Int hi = row == 0 ? p[0] + left : std::min(p[row - 1], p[row] + left);
  for (Int v = lo; v <= hi; ++v) {
    acc[static_cast<size_t>(row)] = v;
    pieri_strips(p, k, max_rows, acc, row + 1, left - (v - lo), emit);
  }
  acc[static_cast<size_t>(row)] = p[row];
}

void multiply_h(const Expansion& in, Int k, Int max_rows, Expansion& out) {
  for (const auto& [p, coef] : in) {
    Int nrows = std::min<Int>(p.length() + 1, max_rows);
    std::vector<Int> acc(static_cast<size_t>(nrows));
    for (Int i = 0; i < nrows; ++i) acc[static_cast<size_t>(i)] = p[i];
    Int c = coef;
    pieri_strips(p, k, max_rows, acc, 0, k,
                 [&](const std::vector<Int>& q) { out[Partition(q)] += c; });
  }
}

struct KeyHash {
  size_t operator()(const std::tuple<Int, Partition, Partition>& key) const {
    PartitionHash ph;
    size_t h = static_cast<size_t>(std::get<0>(key));
    h = h * 1000003 ^ ph(std::get<1>(key));
    h = h * 1000003 ^ ph(std::get<2>(key));
    return h;
  }
};

std::shared_mutex g_mutex;
std::unordered_map<std::tuple<Int, Partition, Partition>, Expansion, KeyHash> g_cache;

// s_mu = det(h_{mu_i - i + j}) expanded over permutations; each monomial is a
// chain of Pieri multiplications applied to s_lambda.
Expansion expand_uncached(Int max_rows, const Partition& lambda, const Partition& mu) {
  if (lambda.length() > max_rows || mu.length() > max_rows) return {};
  Int m = mu.length();
  if (m == 0) return {{lambda, 1}};
  std::vector<Int> perm(static_cast<size_t>(m));
  for (Int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
  Expansion total;
  do {
    Int sign = 1;
    for (Int i = 0; i < m; ++i)
      for (Int j = i + 1; j < m; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
    std::vector<Int> hs;
    bool dead = false;
    for (Int i = 0; i < m && !dead; ++i) {
      Int k = mu[i] - i + perm[static_cast<size_t>(i)];
      if (k < 0) dead = true;
      else if (k > 0) hs.push_back(k);
    }
    if (dead) continue;
    Expansion cur = {{lambda, 1}};
    for (Int k : hs) {
      Expansion next;
      multiply_h(cur, k, max_rows, next);
      cur = std::move(next);
      if (cur.empty()) break;
    }
    for (auto& [p, c] : cur) total[p] += sign * c;
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (auto it = total.begin(); it != total.end();) {
    if (it->second == 0) {
      it = total.erase(it);
    } else {
      if (it->second < 0) throw std::logic_error("lr_expand: negative coefficient");
      ++it;
    }
  }
  return total;
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  if (nu.length() == 0) return 1;
  LrCounter counter(lambda, mu, nu);
  counter.fill(0, nu[0] - 1);
  return counter.count;
}

const Expansion& lr_expand(Int max_rows, const Partition& lambda, const Partition& mu) {
  // put the factor with fewer rows on the Jacobi-Trudi side
  const Partition& a = lambda.length() >= mu.length() ? lambda : mu;
  const Partition& b = lambda.length() >= mu.length() ? mu : lambda;
  std::tuple<Int, Partition, Partition> key{max_rows, a, b};
  {
    std::shared_lock lock(g_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  Expansion result = expand_uncached(max_rows, a, b);
  std::unique_lock lock(g_mutex);
  return g_cache.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace qsc
