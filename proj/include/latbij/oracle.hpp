#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latbij/hockey.hpp"
#include "latbij/path_core.hpp"
#include "latbij/soccer.hpp"

namespace latbij {

/// Exact arbitrary-precision count.
using BigCount = boost::multiprecision::cpp_int;

/// C(n,k) by the multiplicative formula; every intermediate division is
/// exact. No factorials, no floating point.
BigCount binomial(unsigned long long n, unsigned long long k);
BigCount central_binomial(unsigned n);  // C(2n,n)
BigCount pow4(unsigned n);

/// lhs = 4^n, rhs = sum_i C(2i,i) C(2(n-i),n-i); the caller asserts equality.
std::pair<BigCount, BigCount> check_identity_soccer(unsigned n);
/// lhs = (2n+1) C(2n,n), rhs = sum_{i+j+k=n} C(2i,i) C(2j,j) C(2k,k).
std::pair<BigCount, BigCount> check_identity_hockey(unsigned n);

/// Shared tables for checking many n at once: central binomials and the
/// pairwise convolution, computed once up to n_max.
class IdentityTable {
 public:
  explicit IdentityTable(unsigned n_max);
  unsigned n_max() const { return unsigned(central_.size() - 1); }
  const BigCount& central(unsigned n) const { return central_.at(n); }
  std::pair<BigCount, BigCount> soccer(unsigned n) const;
  std::pair<BigCount, BigCount> hockey(unsigned n) const;

 private:
  std::vector<BigCount> central_;  // C(2i,i)
  std::vector<BigCount> conv2_;    // sum_j central(j) central(m-j)
};

// ---------------------------------------------------------------------------
// Exhaustive enumerators. All orders are deterministic: step strings are
// lexicographic with Up before Down and East before North; composite sets
// iterate their outer parameter first.
// ---------------------------------------------------------------------------

/// All C(2m,m) balanced up/down paths of semilength m.
std::vector<UDPath> all_balanced_ud(int semilength);
/// T_n, ordered by (i,j) with k = n-i-j, then componentwise.
std::vector<PathTriple> all_triples(int n);
/// D_n, path-major with marks ascending.
std::vector<MarkedPath> all_marked(int n);
/// X_n.
std::vector<TiePath> all_tie_paths(int n);
/// Y_n.
std::vector<AvoidPath> all_avoid_paths(int n);
/// All 4^n northeastern paths of 2n steps from (0,0).
std::vector<NEPath> all_free_paths(int n);
/// A(n,k), n >= 1, n <= k <= 2n.
std::vector<AnkPath> all_ank(int n, int k);
/// B(n,k).
std::vector<AnkPath> all_bnk(int n, int k);
/// Tie paths marked at each diagonal point they visit, tie-major.
std::vector<MarkedTiePath> all_marked_ties(int n);

// ---------------------------------------------------------------------------
// Bijection verification
// ---------------------------------------------------------------------------

struct VerifyReport {
  std::uint64_t domain = 0;
  std::uint64_t codomain = 0;
  std::uint64_t image = 0;
  std::uint64_t round_trip_failures = 0;
  std::vector<std::string> counterexamples;  // capped at 10

  bool pass() const {
    return domain == codomain && image == domain && round_trip_failures == 0;
  }
  std::string to_text() const;
};

namespace detail {

inline constexpr std::size_t kMissing = ~std::size_t(0);

struct ForwardOutcome {
  std::size_t target = kMissing;
  bool round_trip_ok = false;
  bool threw = false;
};

inline void run_chunked(std::size_t count, unsigned threads,
                        const std::function<void(std::size_t, std::size_t)>& body) {
  if (threads <= 1 || count < 2) {
    body(0, count);
    return;
  }
  const unsigned workers = std::min<unsigned>(threads, unsigned(count));
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 1; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo < hi) pool.emplace_back(body, lo, hi);
  }
  body(0, std::min(count, chunk));
  for (auto& t : pool) t.join();
}

}  // namespace detail

/// Exhaustively certifies that `fwd` is a bijection from `domain` onto
/// `codomain` with inverse `bwd`. Values compare equal iff their
/// serializations do. Failures are recorded, not thrown; exceptions raised
/// by the maps are counted as failures too. Reports are identical for any
/// thread count.
template <class X, class Y, class Fwd, class Bwd, class ShowX, class ShowY>
VerifyReport verify_bijection(const std::vector<X>& domain,
                              const std::vector<Y>& codomain, Fwd fwd, Bwd bwd,
                              ShowX show_x, ShowY show_y, unsigned threads = 1) {
  VerifyReport rep;
  rep.domain = domain.size();
  rep.codomain = codomain.size();

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(codomain.size() * 2 + 1);
  for (std::size_t i = 0; i < codomain.size(); ++i) {
    auto [it, fresh] = index.emplace(show_y(codomain[i]), i);
    if (!fresh) throw precondition_error("codomain enumeration repeats a value");
  }

  constexpr std::size_t kMissing = detail::kMissing;
  std::vector<detail::ForwardOutcome> forward(domain.size());
  detail::run_chunked(domain.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        Y y = fwd(domain[i]);
        auto it = index.find(show_y(y));
        forward[i].target = it == index.end() ? kMissing : it->second;
        forward[i].round_trip_ok = show_x(bwd(y)) == show_x(domain[i]);
      } catch (const std::exception&) {
        forward[i].threw = true;
      }
    }
  });

  std::vector<unsigned char> backward(codomain.size(), 0);
  detail::run_chunked(codomain.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        backward[i] = show_y(fwd(bwd(codomain[i]))) == show_y(codomain[i]) ? 1 : 0;
      } catch (const std::exception&) {
        backward[i] = 2;
      }
    }
  });

  auto note = [&rep](std::string text) {
    if (rep.counterexamples.size() < 10) rep.counterexamples.push_back(std::move(text));
  };

  std::vector<unsigned char> hit(codomain.size(), 0);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const detail::ForwardOutcome& o = forward[i];
    if (o.threw) {
      ++rep.round_trip_failures;
      note("error: " + show_x(domain[i]));
      continue;
    }
    if (o.target == kMissing) {
      note("image-not-in-codomain: " + show_x(domain[i]));
    } else if (hit[o.target]) {
      note("collision: " + show_x(domain[i]) + " -> " + show_y(codomain[o.target]));
    } else {
      hit[o.target] = 1;
      ++rep.image;
    }
    if (!o.round_trip_ok) {
      ++rep.round_trip_failures;
      note("round-trip-a: " + show_x(domain[i]));
    }
  }
  for (std::size_t i = 0; i < codomain.size(); ++i) {
    if (backward[i] != 1) {
      ++rep.round_trip_failures;
      note((backward[i] == 2 ? "error: " : "round-trip-b: ") + show_y(codomain[i]));
    }
  }
  return rep;
}

}  // namespace latbij
