#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "randcf/bitseq.hpp"
#include "randcf/cf.hpp"
#include "randcf/fraction.hpp"

namespace randcf {

/// Exact rational value.
using Rational = mpq_class;

/// Cyclic autocorrelation C(k) of the +/-1-mapped sequence, normalized by
/// the length: (1/N) * sum b_i * b_{(i+k) mod N} with b_i = +1 for bit 1 and
/// -1 for bit 0. k is reduced mod N; C(0) = 1 for every sequence.
Rational autocorrelation(const BitString& s, long long k);

/// 1 - (sum_{k=1}^{N-1} |C(k)|) / (N-1), in [0, 1]. Requires N >= 2.
Rational r_autocorr(const BitString& s);

struct ScanRow {
    Natural m;
    std::size_t r;

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// CF length R of m/q for each requested numerator, in input order.
/// Requires q >= 3 and every m in [1, q-1].
std::vector<ScanRow> scan_cf_lengths(const Natural& q, const std::vector<Natural>& numerators);

/// All numerators 1..q-1 in ascending order. The streaming overload emits
/// one row at a time so large q needs no row buffer.
std::vector<ScanRow> scan_cf_lengths(const Natural& q);
void scan_cf_lengths(const Natural& q,
                     const std::function<void(const Natural& m, std::size_t r)>& emit);

/// Everything the measures know about one sequence.
struct MeasureReport {
    BitString sequence;
    Fraction fraction;          ///< bits_to_fraction(sequence)
    ContinuedFraction cf;
    std::size_t r_cf;           ///< cf.size()
    Rational r_auto;            ///< r_autocorr(sequence)
    std::optional<Natural> period_hint;  ///< dseq_period of the denominator
};

/// Full report for one sequence; all-zero and all-one inputs are rejected.
MeasureReport measure_report(const BitString& s);

}  // namespace randcf
