#include "randcf/measures.hpp"

#include <cstdlib>
#include <stdexcept>

#include "randcf/dseq.hpp"

namespace randcf {

namespace {

// Unnormalized correlation sum: sum of b_i * b_{(i+k) mod N} over one period.
long long correlation_sum(const BitString& s, std::size_t k) {
    const std::size_t n = s.size();
    long long sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int bi = s.bit(i) ? 1 : -1;
        const int bj = s.bit((i + k) % n) ? 1 : -1;
        sum += bi * bj;
    }
    return sum;
}

}  // namespace

Rational autocorrelation(const BitString& s, long long k) {
    const auto n = static_cast<long long>(s.size());
    long long kk = k % n;
    if (kk < 0) kk += n;
    const Natural num(static_cast<long>(correlation_sum(s, static_cast<std::size_t>(kk))));
    const Natural den(static_cast<long>(n));
    Rational c(num, den);
    c.canonicalize();
    return c;
}

Rational r_autocorr(const BitString& s) {
    const std::size_t n = s.size();
    if (n < 2) {
        throw std::domain_error("autocorrelation measure needs at least two bits");
    }
    Natural abs_sum = 0;  // sum over k of |N * C(k)|
    for (std::size_t k = 1; k < n; ++k) {
        abs_sum += std::labs(static_cast<long>(correlation_sum(s, k)));
    }
    const Natural pair_count = Natural(n) * (n - 1);
    Rational total(abs_sum, pair_count);
    total.canonicalize();
    return 1 - total;
}

std::vector<ScanRow> scan_cf_lengths(const Natural& q, const std::vector<Natural>& numerators) {
    if (q < 3) {
        throw std::domain_error("scan denominator must be >= 3");
    }
    std::vector<ScanRow> rows;
    rows.reserve(numerators.size());
    for (const auto& m : numerators) {
        if (m >= q) {
            throw std::domain_error("scan numerator " + m.get_str() + " must be < " + q.get_str());
        }
        rows.push_back({m, r_measure(Fraction(m, q))});
    }
    return rows;
}

void scan_cf_lengths(const Natural& q,
                     const std::function<void(const Natural& m, std::size_t r)>& emit) {
    if (q < 3) {
        throw std::domain_error("scan denominator must be >= 3");
    }
    for (Natural m = 1; m < q; ++m) {
        emit(m, r_measure(Fraction(m, q)));
    }
}

std::vector<ScanRow> scan_cf_lengths(const Natural& q) {
    std::vector<ScanRow> rows;
    scan_cf_lengths(q, [&rows](const Natural& m, std::size_t r) { rows.push_back({m, r}); });
    return rows;
}

MeasureReport measure_report(const BitString& s) {
    if (s.all_zeros() || s.all_ones()) {
        throw std::domain_error("constant sequences have no defined measures");
    }
    Fraction fraction = bits_to_fraction(s);
    ContinuedFraction cf = cf_expand(fraction);
    const std::size_t r_cf = cf.size();
    Rational r_auto = r_autocorr(s);
    std::optional<Natural> period = dseq_period(fraction.den);
    return MeasureReport{s, std::move(fraction), std::move(cf), r_cf,
                         std::move(r_auto), std::move(period)};
}

}  // namespace randcf
