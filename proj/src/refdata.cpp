#include "randcf/refdata.hpp"

#include <array>

namespace randcf::refdata {

namespace {

constexpr std::array<PnSeqRow, 5> kPnSequences{{
    {2, "2,1,0", "x^2+x+1", "5/7"},
    {3, "3,2,0", "x^3+x^2+1", "78/127"},
    {4, "4,3,0", "x^4+x^3+1", "18348/32767"},
    {5, "5,3,0", "x^5+x^3+1", "1119559476/2147483647"},
    {6, "6,5,0", "x^6+x^5+1", "4754309678505905152/9223372036854775807"},
}};

constexpr std::array<CfRow, 5> kCfExpansions{{
    {"x^2+x+1", "5/7", "[1, 2, 2]"},
    {"x^3+x^2+1", "78/127", "[1, 1, 1, 1, 2, 4, 2]"},
    {"x^4+x^3+1", "18348/32767", "[1, 1, 3, 1, 2, 34, 7, 1, 2]"},
    {"x^5+x^3+1", "1119559476/2147483647",
     "[1, 11, 4, 1, 1, 2, 11, 12, 6, 12, 1, 16, 2, 2, 3]"},
    {"x^6+x^5+1", "4754309678505905152/9223372036854775807",
     "[1, 1, 15, 1, 3, 174, 1, 15, 17, 1, 1, 1, 1, 23, 1, 1, 5, 1, 4, 34, 1, 1, 1, 1, 1, 2, 1, "
     "18, 3, 1, 1, 7, 1, 1, 84]"},
}};

constexpr std::array<LengthRow, 21> kLengths{{
    {"3/127", "[42, 3]", 2, "0000011"},
    {"7/127", "[18, 7]", 2, "0000111"},
    {"13/127", "[9, 1, 3, 3]", 4, "0001101"},
    {"15/127", "[8, 2, 7]", 3, "0001111"},
    {"19/127", "[6, 1, 2, 6]", 4, "0010011"},
    {"20/127", "[6, 2, 1, 6]", 4, "0010100"},
    {"25/127", "[5, 12, 2]", 3, "0011001"},
    {"31/127", "[4, 10, 3]", 3, "0011111"},
    {"33/127", "[3, 1, 5, 1, 1, 2]", 6, "0100001"},
    {"39/127", "[3, 3, 1, 9]", 4, "0100111"},
    {"45/127", "[2, 1, 4, 1, 1, 1, 2]", 7, "0101101"},
    {"47/127", "[2, 1, 2, 2, 1, 4]", 6, "0101111"},
    {"57/127", "[2, 4, 2, 1, 1, 2]", 6, "0111001"},
    {"63/127", "[2, 63]", 2, "0111111"},
    {"77/127", "[1, 1, 1, 1, 5, 1, 3]", 7, "1001101"},
    {"78/127", "[1, 1, 1, 1, 2, 4, 2]", 7, "1001110"},
    {"79/127", "[1, 1, 1, 1, 1, 4, 1, 2]", 8, "1001111"},
    {"81/127", "[1, 1, 1, 3, 5, 2]", 6, "1010001"},
    {"97/127", "[1, 3, 4, 3, 2]", 5, "1100001"},
    {"105/127", "[1, 4, 1, 3, 2, 2]", 6, "1101001"},
    {"107/127", "[1, 5, 2, 1, 6]", 5, "1101011"},
}};

constexpr std::array<BinaryRow, 8> kStructured{{
    {"1111000011110000", "61680/65535", "[1, 61680]", 2},
    {"0000111100001111", "3855/65535", "[3855]", 1},
    {"1111111100000000", "65280/65535", "[1, 65280]", 2},
    {"0000000011111111", "255/65535", "[255]", 1},
    {"1100110011001100", "52425/65535", "[1, 52425]", 2},
    {"0011001100110011", "13107/65535", "[13107]", 1},
    {"1010101010101010", "43690/65535", "[1, 43690]", 2},
    {"0101010101010101", "21845/65535", "[21845]", 1},
}};

constexpr std::array<BinaryRow, 12> kUnstructured{{
    {"1000111101011000", "36696/65535", "[1, 1, 3, 1, 2, 28, 1, 3, 3, 2]", 10},
    {"0110101101010010", "28839/65535", "[2, 3, 1, 2, 28, 1, 3, 3, 2]", 9},
    {"1001110100011110", "44402/65535", "[1, 2, 9, 1, 8, 2, 2, 3, 1, 2, 1, 2]", 12},
    {"0111000010100111", "21133/65535", "[3, 9, 1, 8, 2, 2, 3, 1, 2, 1, 2]", 11},
    {"1001110100011110", "40222/65535", "[1, 1, 1, 1, 2, 3, 4, 3, 6]", 9},
    {"0101001010001101", "25313/65535", "[2, 1, 1, 2, 3, 4, 3, 6]", 8},
    {"1010100010101101", "43181/65535", "[1, 1, 1, 13, 1, 1, 1, 3, 2, 1, 2, 7, 2]", 13},
    {"0101011101010010", "22354/65535", "[2, 1, 13, 1, 1, 1, 3, 2, 1, 2, 7, 2]", 12},
    {"1000101001100101", "35429/65535", "[1, 1, 5, 1, 1, 1, 9, 1, 1, 2, 3, 2, 4]", 13},
    {"0111010110011010", "30106/65535", "[2, 5, 1, 1, 1, 9, 1, 1, 2, 3, 2, 4]", 12},
    {"1001010010101101", "38061/65535", "[1, 1, 2, 1, 1, 2, 7, 1, 2, 2, 12]", 11},
    {"0110101101010010", "27474/65535", "[2, 2, 1, 1, 2, 7, 1, 2, 2, 12]", 10},
}};

}  // namespace

std::span<const PnSeqRow> pn_sequence_rows() { return kPnSequences; }
std::span<const CfRow> cf_expansion_rows() { return kCfExpansions; }
std::span<const LengthRow> length_rows() { return kLengths; }
std::span<const BinaryRow> structured_rows() { return kStructured; }
std::span<const BinaryRow> unstructured_rows() { return kUnstructured; }

}  // namespace randcf::refdata
