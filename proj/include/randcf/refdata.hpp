#pragma once

#include <cstddef>
#include <span>

namespace randcf::refdata {

// Bundled reference tables, kept verbatim including their known misprints.
// Consumers recompute the derived columns and flag cells that disagree with
// the stored text instead of silently correcting them.

/// PN-sequence polynomials of degrees 2-6 with their generator fractions.
struct PnSeqRow {
    unsigned degree;
    const char* taps;        ///< exponent form, e.g. "6,5,0"
    const char* polynomial;  ///< display form, e.g. "x^6+x^5+1"
    const char* fraction;    ///< "m/q"
};

/// CF expansions claimed for the degree-2..6 generator fractions.
struct CfRow {
    const char* polynomial;
    const char* fraction;
    const char* cf;
};

/// Fractions over 127 with CF, length and 7-bit expansion.
struct LengthRow {
    const char* fraction;
    const char* cf;
    std::size_t length;
    const char* binary;
};

/// 16-bit sequences over 65535 with fraction, CF and length.
struct BinaryRow {
    const char* binary;
    const char* fraction;
    const char* cf;
    std::size_t length;
};

std::span<const PnSeqRow> pn_sequence_rows();    // table id 1
std::span<const CfRow> cf_expansion_rows();      // table id 2
std::span<const LengthRow> length_rows();        // table id 3
std::span<const BinaryRow> structured_rows();    // table id 4, binary column authoritative
std::span<const BinaryRow> unstructured_rows();  // table id 5, fraction column authoritative

}  // namespace randcf::refdata
