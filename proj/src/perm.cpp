#include "baxter/perm.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "baxter/errors.hpp"

namespace baxter {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  int m = size();
  std::vector<char> seen(m, 0);
  for (int v : values_) {
    if (v < 1 || v > m || seen[v - 1])
      throw contract_error("Permutation: one-line word is not a bijection on {1..m}");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() <= 9) {
    for (int v : values_) out += static_cast<char>('0' + v);
  } else {
    for (int i = 0; i < size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(values_[i]);
    }
  }
  return out;
}

std::string to_string(const ParameterProfile& q) {
  return "n=" + std::to_string(q.n) + " k=" + std::to_string(q.k) + " p=" + std::to_string(q.p) +
         " r=" + std::to_string(q.r);
}

bool profile_feasible(const ParameterProfile& q) {
  if (q.n < 1 || q.k < 0 || q.p < 0 || q.r < 0) return false;
  return q.k <= q.n + q.p - 1 && q.r <= q.n - q.k;
}

bool is_involution(const Permutation& pi) {
  for (int i = 1; i <= pi.size(); ++i)
    if (pi.at(pi.at(i)) != i) return false;
  return true;
}

bool is_baxter(const Permutation& pi) {
  int m = pi.size();
  for (int j = 2; j + 2 <= m; ++j) {
    int a = pi.at(j), b = pi.at(j + 1);
    for (int i = 1; i < j; ++i) {
      int c = pi.at(i);
      for (int l = j + 2; l <= m; ++l) {
        int d = pi.at(l);
        if (b < c && c < d && d < a) return false;  // 2-41-3
        if (a < d && d < c && c < b) return false;  // 3-14-2
      }
    }
  }
  return true;
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> v(pi.size());
  for (int i = 1; i <= pi.size(); ++i) v[pi.at(i) - 1] = i;
  return Permutation(std::move(v));
}

Permutation reverse_complement(const Permutation& pi) {
  int m = pi.size();
  std::vector<int> v(m);
  for (int i = 1; i <= m; ++i) v[i - 1] = m + 1 - pi.at(m + 1 - i);
  return Permutation(std::move(v));
}

std::vector<Descent> descent_profile(const Permutation& pi) {
  std::vector<Descent> out;
  for (int i = 1; i + 1 <= pi.size(); ++i) {
    if (pi.at(i) > pi.at(i + 1))
      out.push_back({i, pi.at(i) > i && pi.at(i + 1) < i + 1});
  }
  return out;
}

ParameterProfile profile(const Permutation& pi) {
  int fixed = 0;
  for (int i = 1; i <= pi.size(); ++i)
    if (pi.at(i) == i) ++fixed;
  int non_fixed = pi.size() - fixed;
  if (non_fixed % 2 != 0)
    throw contract_error("profile: odd non-fixed-point count in " + pi.to_string());

  int crossing = 0, plain = 0;
  for (const Descent& d : descent_profile(pi)) (d.crossing ? crossing : plain) += 1;
  if (plain % 2 != 0)
    throw contract_error("profile: odd non-crossing-descent count in " + pi.to_string());

  return {non_fixed / 2, plain / 2, fixed, crossing};
}

namespace {

// Fill positions >= pos of a partially assigned involution (0 = unassigned);
// the smallest open position takes the smallest available partner first, so
// completed words come out in lexicographic order.
void involutions_rec(std::vector<int>& val, int pos, bool fixed_point_free,
                     const std::function<void(const Permutation&)>& fn) {
  int m = static_cast<int>(val.size());
  while (pos <= m && val[pos - 1] != 0) ++pos;
  if (pos > m) {
    fn(Permutation(val));
    return;
  }
  if (!fixed_point_free) {
    val[pos - 1] = pos;
    involutions_rec(val, pos + 1, fixed_point_free, fn);
    val[pos - 1] = 0;
  }
  for (int v = pos + 1; v <= m; ++v) {
    if (val[v - 1] != 0) continue;
    val[pos - 1] = v;
    val[v - 1] = pos;
    involutions_rec(val, pos + 1, fixed_point_free, fn);
    val[pos - 1] = 0;
    val[v - 1] = 0;
  }
}

}  // namespace

void for_each_involution(int m, bool fixed_point_free,
                         const std::function<void(const Permutation&)>& fn) {
  if (m < 0) throw contract_error("for_each_involution: negative size");
  std::vector<int> val(m, 0);
  involutions_rec(val, 1, fixed_point_free, fn);
}

std::vector<Permutation> enumerate_involutions(int m, bool fixed_point_free) {
  std::vector<Permutation> out;
  for_each_involution(m, fixed_point_free, [&](const Permutation& pi) { out.push_back(pi); });
  return out;
}

ProfileCensus profile_census(int m, int jobs) {
  if (m < 0) throw contract_error("profile_census: negative size");
  if (jobs < 1) throw contract_error("profile_census: jobs must be >= 1");
  if (m == 0) {
    ProfileCensus census;
    census[ParameterProfile{}] = 1;
    return census;
  }

  // One partition per image of element 1.
  std::vector<ProfileCensus> partial(m);
  auto run_partition = [&](int v) {
    std::vector<int> val(m, 0);
    val[0] = v;
    if (v != 1) val[v - 1] = 1;
    ProfileCensus& local = partial[v - 1];
    involutions_rec(val, 2, false, [&](const Permutation& pi) {
      if (is_baxter(pi)) local[profile(pi)] += 1;
    });
  };

  int workers = std::min(jobs, m);
  if (workers == 1) {
    for (int v = 1; v <= m; ++v) run_partition(v);
  } else {
    std::atomic<int> next{1};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int v = next.fetch_add(1); v <= m; v = next.fetch_add(1)) run_partition(v);
      });
    }
    for (auto& t : pool) t.join();
  }

  ProfileCensus census;
  for (const ProfileCensus& part : partial)
    for (const auto& [key, cnt] : part) census[key] += cnt;
  return census;
}

}  // namespace baxter
