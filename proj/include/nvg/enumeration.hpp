#pragma once

#include <nvg/cyclotomic.hpp>
#include <nvg/numeric.hpp>

#include <cstdint>
#include <vector>

namespace nvg {

// Weak composition: parts.size() nonnegative parts summing to sum.
struct WeakComposition {
  std::vector<int> parts;
  int sum = 0;
};

bool operator==(const WeakComposition& a, const WeakComposition& b);

// Exponent-increment sequence of a length-(r.size()+1) product chain.
// Entries live in [0, n).
struct RSequence {
  int n = 0;
  std::vector<int> r;
};

enum class Source { enumerated, closed_form, numeric };

const char* source_name(Source s);

struct GrowthRow {
  int k = 0;
  BigInt q;  // classes first seen at step k (k = 0 contributes the zero class)
  BigInt p;  // distinct classes through step k; p(0) = 1
  Source source = Source::enumerated;
};

struct GrowthSeries {
  int n = 0;
  int k_max = 0;
  std::vector<GrowthRow> rows;  // rows[k].k == k for k = 0..k_max
};

/*
 * Streams every weak composition of k into n parts exactly once, in a fixed
 * documented order: ascending colexicographic in (parts[1], ..., parts[n-1]),
 * with parts[0] carrying the remainder.  First (k, 0, ..., 0), last
 * (0, ..., 0, k), C(k+n-1, n-1) in total.  A stream may be opened at any
 * rank, which is how the parallel kernel partitions the range.
 */
class CompositionStream {
public:
  CompositionStream(int k, int n);                            // from rank 0
  CompositionStream(int k, int n, unsigned long long rank);   // from a rank
  bool next(WeakComposition& out);                            // false when done

private:
  int k_;
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> cur_;
};

// Composition holding the given rank in the stream order.
// rank must be < C(k+n-1, n-1).
WeakComposition unrank_composition(int k, int n, unsigned long long rank);

// Sum of parts[i] copies of x^i, reduced.  comp.sum must match the parts.
ReducedElement element_of(const WeakComposition& comp);

// Exponent multiset {0, r_m, r_m + r_(m-1), ..., r_m + ... + r_1} mod n
// (m = r.size()), returned as a weak composition of m+1 into n parts.
WeakComposition r_sequence_to_composition(const RSequence& rs);

// An RSequence of length comp.sum - 1 whose image under
// r_sequence_to_composition lands in the rotation class of comp.
// comp.sum must be >= 1.
RSequence composition_to_r_sequence(const WeakComposition& comp);

struct EnumerationOptions {
  // Max compositions canonicalized, cumulative across k.  The estimate for
  // step k is C(k+n-1, n-1); the step that would cross the budget throws
  // BudgetError before any work is done for it.
  long long budget = 100000000;
  // 1 = serial.  More partitions each step's stream across OpenMP workers;
  // results are identical to the serial run for every thread count.
  int threads = 1;
};

// Production kernel.  Canonicalizes every composition of every k into a
// rotation-class key and counts first appearances against a persistent key
// set: q(k) = keys first seen at step k, p(k) = running total.  Uses an
// int64 fast path driven by a precomputed reduction table; when the
// coefficient bound for the run cannot be certified to fit, falls back to
// the arbitrary-precision reference below.
GrowthSeries enumerate_growth(int n, int k_max, const EnumerationOptions& opts = {});

// Serial arbitrary-precision implementation, kept as the testing reference
// for the fast kernel.  Same contract, same results, no shortcuts.
GrowthSeries enumerate_growth_reference(int n, int k_max, long long budget = 100000000);

// Floating-point cross-check.  Simulates the orbit of 0 level by level:
// each level-j point y spawns the n points (1 + x^r w)^n, w the principal
// complex n-th root of y, and points are deduplicated globally with
// tolerance tol.  Two points with gap in [tol, 2*tol) throw
// TolAmbiguityError; n^k_max above budget throws BudgetError.  Counts must
// match the exact enumeration wherever tol is safe.
GrowthSeries numeric_orbit(int n, int k_max, double tol = 1e-6, long long budget = 100000000);

}  // namespace nvg
