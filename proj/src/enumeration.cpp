#include <nvg/enumeration.hpp>

#include <nvg/counting.hpp>
#include <nvg/errors.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace nvg {

const char* source_name(Source s) {
  switch (s) {
    case Source::enumerated: return "enumerated";
    case Source::closed_form: return "closed_form";
    case Source::numeric: return "numeric";
  }
  throw std::invalid_argument("source_name: unknown source");
}

bool operator==(const WeakComposition& a, const WeakComposition& b) {
  return a.sum == b.sum && a.parts == b.parts;
}

CompositionStream::CompositionStream(int k, int n) : k_(k), n_(n) {
  if (n < 1) throw std::invalid_argument("CompositionStream: n must be >= 1");
  if (k < 0) throw std::invalid_argument("CompositionStream: k must be >= 0");
  cur_.assign(n_, 0);
  cur_[0] = k_;
  started_ = true;  // cur_ holds the first composition, not yet emitted
}

CompositionStream::CompositionStream(int k, int n, unsigned long long rank)
    : CompositionStream(k, n) {
  if (rank > 0) cur_ = unrank_composition(k, n, rank).parts;
}

bool CompositionStream::next(WeakComposition& out) {
  if (done_) return false;
  if (started_) {
    started_ = false;
  } else {
    /* Move the leftmost positive weight one slot right, dumping all but one
     * unit back onto parts[0].  This walks the colex order exactly once. */
    int h = -1;
    for (int i = 0; i + 1 < n_; ++i) {
      if (cur_[i] > 0) {
        h = i;
        break;
      }
    }
    if (h < 0) {
      done_ = true;
      return false;
    }
    const int v = cur_[h];
    cur_[h] = 0;
    cur_[0] = v - 1;
    ++cur_[h + 1];
  }
  out.parts = cur_;
  out.sum = k_;
  return true;
}

WeakComposition unrank_composition(int k, int n, unsigned long long rank) {
  if (n < 1) throw std::invalid_argument("unrank_composition: n must be >= 1");
  if (k < 0) throw std::invalid_argument("unrank_composition: k must be >= 0");
  if (BigInt(rank) >= binomial(k + n - 1, n - 1))
    throw std::out_of_range("unrank_composition: rank out of range");
  std::vector<int> parts(n, 0);
  BigInt remaining = rank;
  int rest = k;
  /* Tails (parts[1..n-1]) are colex-sorted; the tails with parts[j] == t
   * form a block of C(rest - t + j - 1, j - 1) members. */
  for (int j = n - 1; j >= 1; --j) {
    int t = 0;
    for (;; ++t) {
      BigInt block = binomial(rest - t + j - 1, j - 1);
      if (remaining < block) break;
      remaining -= block;
    }
    parts[j] = t;
    rest -= t;
  }
  parts[0] = rest;
  if (remaining != 0) throw InvariantError("unrank_composition: rank arithmetic broke");
  return WeakComposition{std::move(parts), k};
}

namespace {

void check_composition(const WeakComposition& comp, const char* who) {
  if (comp.parts.empty()) throw std::invalid_argument(std::string(who) + ": empty composition");
  long long s = 0;
  for (int v : comp.parts) {
    if (v < 0) throw std::invalid_argument(std::string(who) + ": negative part");
    s += v;
  }
  if (s != comp.sum)
    throw std::invalid_argument(std::string(who) + ": sum field does not match parts");
}

}  // namespace

ReducedElement element_of(const WeakComposition& comp) {
  check_composition(comp, "element_of");
  const int n = static_cast<int>(comp.parts.size());
  std::vector<BigInt> raw(comp.parts.begin(), comp.parts.end());
  return reduce(raw, n);
}

WeakComposition r_sequence_to_composition(const RSequence& rs) {
  const int n = rs.n;
  if (n < 1) throw std::invalid_argument("r_sequence_to_composition: n must be >= 1");
  for (int v : rs.r)
    if (v < 0 || v >= n)
      throw std::invalid_argument("r_sequence_to_composition: entry outside [0, n)");
  std::vector<int> parts(n, 0);
  parts[0] += 1;  // the bare leading factor carries exponent 0
  int s = 0;
  for (int i = static_cast<int>(rs.r.size()) - 1; i >= 0; --i) {
    s = (s + rs.r[i]) % n;
    parts[s] += 1;
  }
  return WeakComposition{std::move(parts), static_cast<int>(rs.r.size()) + 1};
}

RSequence composition_to_r_sequence(const WeakComposition& comp) {
  check_composition(comp, "composition_to_r_sequence");
  if (comp.sum < 1)
    throw std::invalid_argument("composition_to_r_sequence: sum must be >= 1");
  const int n = static_cast<int>(comp.parts.size());
  std::vector<int> expo;
  expo.reserve(comp.sum);
  for (int e = 0; e < n; ++e)
    for (int c = 0; c < comp.parts[e]; ++c) expo.push_back(e);
  const int m = comp.sum;
  std::vector<int> r(m - 1);
  // Steps between consecutive ascending exponents, read from the top down.
  for (int i = 1; i <= m - 1; ++i)
    r[i - 1] = (((expo[m - i] - expo[m - 1 - i]) % n) + n) % n;
  return RSequence{n, std::move(r)};
}

namespace {

void check_growth_args(int n, int k_max, long long budget, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
  if (k_max < 0) throw std::invalid_argument(std::string(who) + ": k_max must be >= 0");
  if (budget <= 0) throw std::invalid_argument(std::string(who) + ": budget must be positive");
}

// Throws before step k whenever its canonicalization count would cross the
// budget; otherwise charges the step and returns its count.
unsigned long long charge_step(int n, int k, long long budget, BigInt& used) {
  BigInt count = binomial(k + n - 1, n - 1);
  if (used + count > budget)
    throw BudgetError(k, "step k=" + std::to_string(k) + " needs " + count.str() +
                             " canonicalizations on top of " + used.str() +
                             "; budget " + std::to_string(budget));
  used += count;
  return count.convert_to<unsigned long long>();
}

/* ----- int64 fast path ------------------------------------------------- */

struct ReductionTable {
  int n = 0;
  int phi = 0;
  std::vector<std::int64_t> rows;  // n rows of phi entries; row i = x^i reduced
};

// Certifies that every key coefficient of the run fits comfortably in
// int64: |sum of parts[i] * row entries| <= k_max * max|entry| < 2^62.
std::optional<ReductionTable> build_reduction_table(int n, int k_max) {
  const BigInt limit = BigInt(1) << 62;
  ReductionTable t;
  t.n = n;
  t.phi = static_cast<int>(euler_phi(n));
  t.rows.assign(static_cast<std::size_t>(n) * t.phi, 0);
  BigInt max_abs = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> raw(n);
    raw[i] = 1;
    ReducedElement z = reduce(raw, n);
    for (int j = 0; j < t.phi; ++j) {
      BigInt a = abs(z.coeffs[j]);
      if (a >= limit) return std::nullopt;
      if (a > max_abs) max_abs = a;
      t.rows[static_cast<std::size_t>(i) * t.phi + j] = z.coeffs[j].convert_to<std::int64_t>();
    }
  }
  if (BigInt(std::max(k_max, 1)) * max_abs >= limit) return std::nullopt;
  return t;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using KeySet = std::unordered_set<std::vector<std::int64_t>, KeyHash>;

// Least canonical vector over all cyclic shifts of the composition, using
// the precomputed rows.  nz lists (index, multiplicity) of nonzero parts.
void orbit_key_fast(const ReductionTable& t, const std::vector<std::pair<int, int>>& nz,
                    std::vector<std::int64_t>& best, std::vector<std::int64_t>& tmp) {
  for (int s = 0; s < t.n; ++s) {
    std::fill(tmp.begin(), tmp.end(), 0);
    for (const auto& [i, c] : nz) {
      const std::int64_t* row = &t.rows[static_cast<std::size_t>((i + s) % t.n) * t.phi];
      for (int j = 0; j < t.phi; ++j) tmp[j] += static_cast<std::int64_t>(c) * row[j];
    }
    if (s == 0 || tmp < best) best = tmp;
  }
}

void canonicalize_range(const ReductionTable& t, int k, unsigned long long lo,
                        unsigned long long hi, KeySet& sink) {
  if (lo >= hi) return;
  CompositionStream stream(k, t.n, lo);
  WeakComposition comp;
  std::vector<std::pair<int, int>> nz;
  std::vector<std::int64_t> best(t.phi), tmp(t.phi);
  for (unsigned long long r = lo; r < hi; ++r) {
    if (!stream.next(comp))
      throw InvariantError("enumerate_growth: composition stream ended early");
    nz.clear();
    for (int i = 0; i < t.n; ++i)
      if (comp.parts[i] != 0) nz.emplace_back(i, comp.parts[i]);
    orbit_key_fast(t, nz, best, tmp);
    sink.insert(best);
  }
}

}  // namespace

GrowthSeries enumerate_growth(int n, int k_max, const EnumerationOptions& opts) {
  check_growth_args(n, k_max, opts.budget, "enumerate_growth");
  if (opts.threads < 1)
    throw std::invalid_argument("enumerate_growth: threads must be >= 1");
  std::optional<ReductionTable> table = build_reduction_table(n, k_max);
  if (!table) return enumerate_growth_reference(n, k_max, opts.budget);

  GrowthSeries out{n, k_max, {}};
  KeySet seen;
  BigInt used = 0;
  for (int k = 0; k <= k_max; ++k) {
    const unsigned long long total = charge_step(n, k, opts.budget, used);
    const std::size_t before = seen.size();
    int workers = opts.threads;
    if (static_cast<unsigned long long>(workers) > total)
      workers = total ? static_cast<int>(total) : 1;
    if (workers <= 1) {
      canonicalize_range(*table, k, 0, total, seen);
    } else {
      /* Workers canonicalize disjoint rank ranges into private sets; the
       * ordered serial merge below makes the counts (and therefore the whole
       * series) independent of scheduling and thread count. */
      std::vector<KeySet> locals(workers);
      bool bad = false;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static, 1) num_threads(workers)
#endif
      for (int w = 0; w < workers; ++w) {
        const auto lo = static_cast<unsigned long long>(
            static_cast<unsigned __int128>(total) * w / workers);
        const auto hi = static_cast<unsigned long long>(
            static_cast<unsigned __int128>(total) * (w + 1) / workers);
        try {
          canonicalize_range(*table, k, lo, hi, locals[w]);
        } catch (...) {
          bad = true;  // exceptions must not unwind out of the parallel region
        }
      }
      if (bad) throw InvariantError("enumerate_growth: worker failed");
      for (KeySet& local : locals)
        for (auto it = local.begin(); it != local.end();)
          seen.insert(std::move(local.extract(it++).value()));
    }
    BigInt q = seen.size() - before;
    out.rows.push_back({k, std::move(q), BigInt(seen.size()), Source::enumerated});
  }
  return out;
}

GrowthSeries enumerate_growth_reference(int n, int k_max, long long budget) {
  check_growth_args(n, k_max, budget, "enumerate_growth_reference");
  GrowthSeries out{n, k_max, {}};
  std::set<OrbitClassKey> seen;
  BigInt used = 0;
  for (int k = 0; k <= k_max; ++k) {
    charge_step(n, k, budget, used);
    const std::size_t before = seen.size();
    CompositionStream stream(k, n);
    WeakComposition comp;
    while (stream.next(comp)) seen.insert(orbit_class_key(element_of(comp)));
    out.rows.push_back(
        {k, BigInt(seen.size() - before), BigInt(seen.size()), Source::enumerated});
  }
  return out;
}

GrowthSeries numeric_orbit(int n, int k_max, double tol, long long budget) {
  check_growth_args(n, k_max, budget, "numeric_orbit");
  if (!(tol > 0) || !std::isfinite(tol))
    throw std::invalid_argument("numeric_orbit: tol must be positive and finite");
  {
    BigInt level = 1;
    for (int k = 1; k <= k_max; ++k) {
      level *= n;
      if (level > budget)
        throw BudgetError(k, "numeric_orbit: level k=" + std::to_string(k) + " could hold " +
                                 level.str() + " points; budget " + std::to_string(budget));
    }
  }

  using Cx = std::complex<double>;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<Cx> reps;
  // Registers z against every known point; true when z is new.  A nearest
  // gap inside [tol, 2 tol), or a second candidate match inside 2 tol, means
  // clustering is not trustworthy at this tolerance.
  auto register_point = [&](Cx z) -> bool {
    double d1 = inf, d2 = inf;
    for (const Cx& w : reps) {
      const double d = std::abs(z - w);
      if (d < d1) {
        d2 = d1;
        d1 = d;
      } else if (d < d2) {
        d2 = d;
      }
    }
    if (d1 >= tol && d1 < 2 * tol)
      throw TolAmbiguityError("numeric_orbit: point gap " + std::to_string(d1) +
                              " falls in [tol, 2 tol) at tol " + std::to_string(tol));
    if (d1 < tol) {
      if (d2 < 2 * tol)
        throw TolAmbiguityError("numeric_orbit: two candidate matches within 2 tol");
      return false;
    }
    reps.push_back(z);
    return true;
  };

  GrowthSeries out{n, k_max, {}};
  std::vector<Cx> frontier;
  register_point(Cx(0.0, 0.0));
  frontier.emplace_back(0.0, 0.0);
  out.rows.push_back({0, 1, 1, Source::numeric});

  const double two_pi = 8.0 * std::atan(1.0);
  for (int k = 1; k <= k_max; ++k) {
    std::vector<Cx> next;
    BigInt q = 0;
    for (const Cx& y : frontier) {
      const Cx w = std::polar(std::pow(std::abs(y), 1.0 / n), std::arg(y) / n);
      for (int r = 0; r < n; ++r) {
        const Cx base = 1.0 + w * std::polar(1.0, two_pi * r / n);
        Cx z = 1.0;
        for (int e = 0; e < n; ++e) z *= base;
        if (register_point(z)) {
          next.push_back(z);
          ++q;
        }
      }
    }
    out.rows.push_back({k, q, out.rows.back().p + q, Source::numeric});
    frontier = std::move(next);
  }
  return out;
}

}  // namespace nvg
