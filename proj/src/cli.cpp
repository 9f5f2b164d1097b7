#include "randcf/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "randcf/bitseq.hpp"
#include "randcf/cf.hpp"
#include "randcf/dseq.hpp"
#include "randcf/fraction.hpp"
#include "randcf/lfsr.hpp"
#include "randcf/measures.hpp"
#include "randcf/numtheory.hpp"
#include "randcf/refdata.hpp"

namespace randcf {

namespace {

Natural natural_from_decimal(const std::string& text, const char* what) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument(std::string("invalid ") + what + " '" + text + "'");
    }
    return Natural(text, 10);
}

std::string approx(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "~%.4f", mpq_get_d(r.get_mpq_t()));
    return buf;
}

// ---------------------------------------------------------------------------
// reference table rendering

struct Cell {
    std::string text;
    std::string marker;  // footnote marker, empty when the cell agrees
};

struct RefTable {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> footnotes;
};

// Collects footnotes for cells whose recomputed value differs from the
// stored reference text.
class FlagTracker {
public:
    Cell checked(std::string computed, const std::string& reference) {
        if (computed == reference) return {std::move(computed), ""};
        std::string marker = "*" + std::to_string(++count_);
        footnotes_.push_back(marker + " reference lists " + reference);
        return {std::move(computed), std::move(marker)};
    }

    static Cell plain(std::string text) { return {std::move(text), ""}; }

    std::vector<std::string> take_footnotes() { return std::move(footnotes_); }

private:
    int count_ = 0;
    std::vector<std::string> footnotes_;
};

std::size_t component_count(const std::string& cf_text) {
    if (cf_text.size() <= 2) return 0;  // "[]"
    return static_cast<std::size_t>(std::count(cf_text.begin(), cf_text.end(), ',')) + 1;
}

RefTable build_table2() {
    FlagTracker flags;
    RefTable t;
    t.title = "table 2: CF expansions of the PN-sequence generator fractions (degrees 2-6)";
    t.header = {"polynomial", "fraction", "continued fraction", "R"};
    for (const auto& row : refdata::cf_expansion_rows()) {
        const Fraction f = Fraction::parse(row.fraction);
        const ContinuedFraction cf = cf_expand(f);
        t.rows.push_back({FlagTracker::plain(row.polynomial), FlagTracker::plain(row.fraction),
                          flags.checked(cf.str(), row.cf),
                          flags.checked(std::to_string(cf.size()),
                                        std::to_string(component_count(row.cf)))});
    }
    t.footnotes = flags.take_footnotes();
    return t;
}

RefTable build_table3() {
    FlagTracker flags;
    RefTable t;
    t.title = "table 3: CF lengths and binary expansions of fractions over 127";
    t.header = {"fraction", "continued fraction", "R", "binary"};
    for (const auto& row : refdata::length_rows()) {
        const Fraction f = Fraction::parse(row.fraction);
        const ContinuedFraction cf = cf_expand(f);
        const auto period = dseq_period(f.den).get_ui();
        const BitString bits = dseq_bits(f.num, f.den, period);
        t.rows.push_back({FlagTracker::plain(row.fraction), flags.checked(cf.str(), row.cf),
                          flags.checked(std::to_string(cf.size()), std::to_string(row.length)),
                          flags.checked(bits.str(), row.binary)});
    }
    t.footnotes = flags.take_footnotes();
    return t;
}

RefTable build_table4() {
    FlagTracker flags;
    RefTable t;
    t.title = "table 4: structured 16-bit sequences and their CF lengths";
    t.header = {"binary", "fraction", "continued fraction", "R"};
    for (const auto& row : refdata::structured_rows()) {
        const BitString bits = BitString::parse(row.binary);
        const Fraction f = bits_to_fraction(bits);
        const ContinuedFraction cf = cf_expand(f);
        t.rows.push_back({FlagTracker::plain(row.binary), flags.checked(f.str(), row.fraction),
                          flags.checked(cf.str(), row.cf),
                          flags.checked(std::to_string(cf.size()), std::to_string(row.length))});
    }
    t.footnotes = flags.take_footnotes();
    return t;
}

RefTable build_table5() {
    FlagTracker flags;
    RefTable t;
    t.title = "table 5: high-measure 16-bit sequences and their CF lengths";
    t.header = {"binary", "fraction", "continued fraction", "R"};
    for (const auto& row : refdata::unstructured_rows()) {
        const Fraction f = Fraction::parse(row.fraction);
        const ContinuedFraction cf = cf_expand(f);
        const auto period = dseq_period(f.den).get_ui();
        const BitString bits = dseq_bits(f.num, f.den, period);
        t.rows.push_back({flags.checked(bits.str(), row.binary), FlagTracker::plain(row.fraction),
                          flags.checked(cf.str(), row.cf),
                          flags.checked(std::to_string(cf.size()), std::to_string(row.length))});
    }
    t.footnotes = flags.take_footnotes();
    return t;
}

std::string layout(const RefTable& t, bool color) {
    const char* kYellow = "\033[33m";
    const char* kReset = "\033[0m";
    std::vector<std::size_t> widths(t.header.size());
    for (std::size_t c = 0; c < t.header.size(); ++c) widths[c] = t.header[c].size();
    auto cell_width = [](const Cell& cell) {
        return cell.text.size() + (cell.marker.empty() ? 0 : cell.marker.size() + 1);
    };
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], cell_width(row[c]));
        }
    }
    std::ostringstream os;
    os << t.title << "\n";
    auto emit_row = [&](const std::vector<std::string>& texts) {
        for (std::size_t c = 0; c < texts.size(); ++c) {
            os << texts[c];
            if (c + 1 < texts.size()) os << std::string(widths[c] - texts[c].size() + 2, ' ');
        }
        os << "\n";
    };
    emit_row(t.header);
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string text = row[c].text;
            if (!row[c].marker.empty()) {
                text += " ";
                text += color ? kYellow + row[c].marker + kReset : row[c].marker;
            }
            os << text;
            if (c + 1 < row.size()) os << std::string(widths[c] - cell_width(row[c]) + 2, ' ');
        }
        os << "\n";
    }
    if (!t.footnotes.empty()) {
        os << "\n";
        for (const auto& note : t.footnotes) os << note << "\n";
    }
    return os.str();
}

bool decoration_enabled(const std::ostream& out) {
    return &out == &std::cout && isatty(fileno(stdout)) != 0 &&
           std::getenv("RAND_CF_NO_COLOR") == nullptr;
}

// ---------------------------------------------------------------------------
// subcommand bodies

Fraction fraction_or_bits(const std::string& arg) {
    if (arg.find('/') != std::string::npos) return Fraction::parse(arg);
    return bits_to_fraction(BitString::parse(arg));
}

void cmd_cf(const std::string& arg, std::ostream& out) {
    const Fraction f = fraction_or_bits(arg);
    const std::size_t r = r_measure(f);
    out << cf_expand(f).str() << "\n";
    out << "R = " << r << "\n";
}

void cmd_measure(const std::string& bits_text, bool as_json, std::ostream& out) {
    const MeasureReport rep = measure_report(BitString::parse(bits_text));
    if (as_json) {
        nlohmann::json j;
        j["sequence"] = rep.sequence.str();
        j["numerator"] = rep.fraction.num.get_str();
        j["denominator"] = rep.fraction.den.get_str();
        auto cf = nlohmann::json::array();
        for (const auto& q : rep.cf.quotients()) cf.push_back(q.get_str());
        j["cf"] = std::move(cf);
        j["r_cf"] = rep.r_cf;
        j["r_auto_num"] = rep.r_auto.get_num().get_str();
        j["r_auto_den"] = rep.r_auto.get_den().get_str();
        out << j.dump() << "\n";
        return;
    }
    out << "sequence: " << rep.sequence.str() << "\n";
    out << "fraction: " << rep.fraction.str() << "\n";
    out << "cf:       " << rep.cf.str() << "\n";
    out << "r_cf:     " << rep.r_cf << "\n";
    out << "r_auto:   " << rep.r_auto.get_num().get_str() << "/"
        << rep.r_auto.get_den().get_str() << " (" << approx(rep.r_auto) << ")\n";
    if (rep.period_hint) {
        out << "period:   " << rep.period_hint->get_str() << "\n";
    }
}

void cmd_scan(const Natural& q, const std::vector<std::string>& nums_text,
              const std::string& csv_path, bool full, std::ostream& out) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!csv_path.empty()) {
        file.open(csv_path, std::ios::binary);  // LF line endings everywhere
        if (!file) throw std::runtime_error("cannot open '" + csv_path + "' for writing");
        sink = &file;
    }
    std::optional<unsigned long> period;
    if (full) period = dseq_period(q).get_ui();

    *sink << (full ? "m,R,binary,cf" : "m,R") << "\n";
    auto emit = [&](const Natural& m, std::size_t r) {
        *sink << m.get_str() << "," << r;
        if (full) {
            // the cf field contains commas, so it is quoted
            *sink << "," << dseq_bits(m, q, *period).str() << ",\""
                  << cf_expand(Fraction(m, q)).str() << "\"";
        }
        *sink << "\n";
    };
    if (nums_text.empty()) {
        scan_cf_lengths(q, emit);
    } else {
        std::vector<Natural> nums;
        nums.reserve(nums_text.size());
        for (const auto& text : nums_text) nums.push_back(natural_from_decimal(text, "numerator"));
        for (const auto& row : scan_cf_lengths(q, nums)) emit(row.m, row.r);
    }
}

}  // namespace

std::string render_table(int id, bool color) {
    switch (id) {
        case 2: return layout(build_table2(), color);
        case 3: return layout(build_table3(), color);
        case 4: return layout(build_table4(), color);
        case 5: return layout(build_table5(), color);
        default: throw std::invalid_argument("table id must be 2, 3, 4 or 5");
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"continued-fraction randomness measures for binary sequences", "randcf"};
    app.require_subcommand(1);

    auto* pn = app.add_subcommand("pn", "generate a PN sequence from a tap polynomial");
    std::string pn_poly, pn_seed;
    unsigned long pn_len = 0;
    pn->add_option("--poly", pn_poly, "tap polynomial, \"6,1,0\" or \"1000011\"")->required();
    pn->add_option("--seed", pn_seed, "initial register bits a_0..a_{r-1}")->required();
    pn->add_option("--len", pn_len, "number of output bits")->required();
    pn->callback([&] {
        out << pn_sequence(TapPolynomial::parse(pn_poly), BitString::parse(pn_seed), pn_len).str()
            << "\n";
    });

    auto* ds = app.add_subcommand("dseq", "binary expansion digits of a fraction");
    std::string ds_frac;
    unsigned long ds_len = 0;
    ds->add_option("--frac", ds_frac, "fraction m/q, q odd")->required();
    ds->add_option("--len", ds_len, "number of digits")->required();
    ds->callback([&] {
        const Fraction f = Fraction::parse(ds_frac);
        out << dseq_bits(f.num, f.den, ds_len).str() << "\n";
    });

    auto* tofrac = app.add_subcommand("tofrac", "generator fraction of a bit string");
    std::string tofrac_bits;
    tofrac->add_option("bits", tofrac_bits, "bit string")->required();
    tofrac->callback([&] { out << bits_to_fraction(BitString::parse(tofrac_bits)).str() << "\n"; });

    auto* cf = app.add_subcommand("cf", "continued fraction and R of a fraction or bit string");
    std::string cf_arg;
    cf->add_option("value", cf_arg, "\"m/q\" or a bit string")->required();
    cf->callback([&] { cmd_cf(cf_arg, out); });

    auto* measure = app.add_subcommand("measure", "full measure report for a bit string");
    std::string measure_bits;
    bool measure_json = false;
    measure->add_option("bits", measure_bits, "bit string")->required();
    measure->add_flag("--json", measure_json, "machine-readable output");
    measure->callback([&] { cmd_measure(measure_bits, measure_json, out); });

    auto* order = app.add_subcommand("order", "multiplicative order of base modulo q");
    std::string order_base, order_mod;
    order->add_option("--base", order_base, "base")->required();
    order->add_option("--mod", order_mod, "modulus")->required();
    order->callback([&] {
        out << multiplicative_order(natural_from_decimal(order_base, "base"),
                                    natural_from_decimal(order_mod, "modulus"))
                   .get_str()
            << "\n";
    });

    auto* scan = app.add_subcommand("scan", "CF lengths across numerators of one denominator");
    std::string scan_den, scan_csv;
    std::vector<std::string> scan_nums;
    bool scan_full = false;
    scan->add_option("--den", scan_den, "denominator q")->required();
    scan->add_option("--nums", scan_nums, "numerators, comma separated (default 1..q-1)")
        ->delimiter(',');
    scan->add_option("--csv", scan_csv, "write CSV to a file instead of stdout");
    scan->add_flag("--full", scan_full, "add binary and cf columns (odd q only)");
    scan->callback([&] {
        cmd_scan(natural_from_decimal(scan_den, "denominator"), scan_nums, scan_csv, scan_full,
                 out);
    });

    auto* table = app.add_subcommand("table", "reference table with recomputed columns");
    int table_id = 0;
    table->add_option("--id", table_id, "table id")
        ->required()
        ->check(CLI::IsMember({2, 3, 4, 5}));
    table->callback([&] { out << render_table(table_id, decoration_enabled(out)); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace randcf
