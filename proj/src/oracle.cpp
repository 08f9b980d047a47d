#include "latbij/oracle.hpp"

#include <algorithm>

namespace latbij {

BigCount binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (unsigned long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

BigCount central_binomial(unsigned n) { return binomial(2ull * n, n); }

BigCount pow4(unsigned n) { return BigCount(1) << (2 * n); }

std::pair<BigCount, BigCount> check_identity_soccer(unsigned n) {
  BigCount rhs = 0;
  for (unsigned i = 0; i <= n; ++i) rhs += central_binomial(i) * central_binomial(n - i);
  return {pow4(n), rhs};
}

std::pair<BigCount, BigCount> check_identity_hockey(unsigned n) {
  return IdentityTable(n).hockey(n);
}

IdentityTable::IdentityTable(unsigned n_max) {
  central_.reserve(n_max + 1);
  for (unsigned i = 0; i <= n_max; ++i) central_.push_back(central_binomial(i));
  conv2_.assign(n_max + 1, BigCount(0));
  for (unsigned m = 0; m <= n_max; ++m)
    for (unsigned j = 0; j <= m; ++j) conv2_[m] += central_[j] * central_[m - j];
}

std::pair<BigCount, BigCount> IdentityTable::soccer(unsigned n) const {
  return {pow4(n), conv2_.at(n)};
}

std::pair<BigCount, BigCount> IdentityTable::hockey(unsigned n) const {
  BigCount rhs = 0;
  for (unsigned i = 0; i <= n; ++i) rhs += central_.at(i) * conv2_.at(n - i);
  return {BigCount(2 * n + 1) * central_.at(n), rhs};
}

// ---------------------------------------------------------------------------
// Enumerators
// ---------------------------------------------------------------------------

namespace {

// All step strings with the given multiplicities, lexicographic with
// `first` before `second`.
void gen_strings(char first, char second, int count_first, int count_second,
                 std::string& cur, std::vector<std::string>& out) {
  if (count_first == 0 && count_second == 0) {
    out.push_back(cur);
    return;
  }
  if (count_first > 0) {
    cur.push_back(first);
    gen_strings(first, second, count_first - 1, count_second, cur, out);
    cur.pop_back();
  }
  if (count_second > 0) {
    cur.push_back(second);
    gen_strings(first, second, count_first, count_second - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::string> step_strings(char first, char second, int count_first,
                                      int count_second) {
  std::vector<std::string> out;
  std::string cur;
  cur.reserve(std::size_t(count_first + count_second));
  gen_strings(first, second, count_first, count_second, cur, out);
  return out;
}

// All 2^len strings over {first, second}, lexicographic.
std::vector<std::string> free_strings(char first, char second, int len) {
  std::vector<std::string> out;
  out.reserve(std::size_t(1) << std::min(len, 20));
  std::string cur;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
    cur.clear();
    for (int i = len - 1; i >= 0; --i)
      cur.push_back((bits >> i) & 1 ? second : first);
    out.push_back(cur);
  }
  return out;
}

}  // namespace

std::vector<UDPath> all_balanced_ud(int semilength) {
  if (semilength < 0) throw precondition_error("semilength must be >= 0");
  std::vector<UDPath> out;
  for (auto& s : step_strings('U', 'D', semilength, semilength))
    out.emplace_back(std::move(s));
  return out;
}

std::vector<PathTriple> all_triples(int n) {
  if (n < 0) throw precondition_error("n must be >= 0");
  std::vector<std::vector<UDPath>> balanced(n + 1);
  for (int m = 0; m <= n; ++m) balanced[m] = all_balanced_ud(m);
  std::vector<PathTriple> out;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j + i <= n; ++j) {
      const int k = n - i - j;
      for (const UDPath& a : balanced[i])
        for (const UDPath& b : balanced[j])
          for (const UDPath& c : balanced[k]) out.push_back(PathTriple{a, b, c});
    }
  return out;
}

std::vector<MarkedPath> all_marked(int n) {
  std::vector<MarkedPath> out;
  for (const UDPath& h : all_balanced_ud(n))
    for (std::size_t x = 0; x <= h.size(); ++x) out.push_back(MarkedPath{h, x});
  return out;
}

std::vector<TiePath> all_tie_paths(int n) {
  if (n < 0) throw precondition_error("n must be >= 0");
  std::vector<TiePath> out;
  for (auto& s : step_strings('E', 'N', n, n))
    out.push_back(TiePath::make(NEPath({0, 0}, std::move(s))));
  return out;
}

std::vector<NEPath> all_free_paths(int n) {
  if (n < 0) throw precondition_error("n must be >= 0");
  std::vector<NEPath> out;
  for (auto& s : free_strings('E', 'N', 2 * n)) out.emplace_back(GridPoint{0, 0}, std::move(s));
  return out;
}

std::vector<AvoidPath> all_avoid_paths(int n) {
  std::vector<AvoidPath> out;
  for (const NEPath& p : all_free_paths(n)) {
    if (last_diagonal_touch(p) == 0) out.push_back(AvoidPath::make(p));
  }
  return out;
}

std::vector<AnkPath> all_ank(int n, int k) {
  if (n < 1) throw precondition_error("A(n,k) requires n >= 1");
  if (k < n || k > 2 * n) throw precondition_error("A(n,k) requires n <= k <= 2n");
  std::vector<AnkPath> out;
  for (auto& s : step_strings('E', 'N', k - 1, 2 * n - k))
    out.push_back(AnkPath::make(n, k, NEPath({1, 0}, std::move(s))));
  return out;
}

std::vector<AnkPath> all_bnk(int n, int k) {
  std::vector<AnkPath> out;
  for (AnkPath& p : all_ank(n, k))
    if (p.in_b()) out.push_back(std::move(p));
  return out;
}

std::vector<MarkedTiePath> all_marked_ties(int n) {
  std::vector<MarkedTiePath> out;
  for (const TiePath& t : all_tie_paths(n))
    for (int i = 0; i <= n; ++i)
      if (t.path.point_at(std::size_t(2 * i)) == GridPoint{i, i})
        out.push_back(MarkedTiePath{t, i});
  return out;
}

std::string VerifyReport::to_text() const {
  std::string s;
  s += "domain=" + std::to_string(domain) + "\n";
  s += "codomain=" + std::to_string(codomain) + "\n";
  s += "image=" + std::to_string(image) + "\n";
  s += "round_trip_failures=" + std::to_string(round_trip_failures) + "\n";
  s += "counterexamples=[";
  for (std::size_t i = 0; i < counterexamples.size(); ++i) {
    if (i) s += "; ";
    s += counterexamples[i];
  }
  s += "]\n";
  return s;
}

}  // namespace latbij
