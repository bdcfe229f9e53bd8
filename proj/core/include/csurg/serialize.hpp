#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "csurg/atlas.hpp"
#include "csurg/contact.hpp"
#include "csurg/monodromy.hpp"

namespace csurg::serialize {

// Reports are deterministic byte-for-byte: objects with sorted keys, exact
// numbers rendered as strings ("p/q" for rationals, decimal for integers).

std::string sl2_to_json(const monodromy::SL2Matrix& m);
monodromy::SL2Matrix parse_sl2(std::string_view json_text);

struct WordReport {
    monodromy::TwistWord word;
    monodromy::SL2Matrix matrix;
    Integer trace;
    monodromy::MonodromyType type;
};

WordReport make_word_report(const monodromy::TwistWord& w);
std::string word_report_json(const WordReport& r);
WordReport parse_word_report(std::string_view json_text);
std::string word_report_table(const WordReport& r);

struct VerifyReport {
    Integer m;
    bool holds;
    bool in_family;  // the bundle family has m < 1
};

VerifyReport make_verify_report(const Integer& m);
std::string verify_report_json(const VerifyReport& r);
std::string verify_report_table(const VerifyReport& r);

struct ExpansionReport {
    Rational r;
    contact::ExpandedChain expansion;
};

ExpansionReport make_expansion_report(const Rational& r);
std::string expansion_report_json(const ExpansionReport& r);
ExpansionReport parse_expansion_report(std::string_view json_text);
std::string expansion_report_table(const ExpansionReport& r);

struct CertificateReport {
    atlas::FamilyParams params;
    contact::TightnessCertificate certificate;
};

CertificateReport make_certificate_report(const atlas::FamilyParams& fp);
std::string certificate_report_json(const CertificateReport& r);
CertificateReport parse_certificate_report(std::string_view json_text);
std::string certificate_report_table(const CertificateReport& r);

struct HomologyReport {
    std::string source;  // "family(m;p/q)" or the input file path
    AbelianGroup h1;
};

std::string homology_report_json(const HomologyReport& r);
std::string homology_report_table(const HomologyReport& r);

// Accepts {"type": "presentation"|"framed_link"|"rational_link", ...} and
// computes H1 of the encoded object.
AbelianGroup h1_of_input_json(std::string_view json_text);

// Columns: m,p,q,r,r_prime,h1,structure_count,no_taut,no_lamination,
// tight_route,d3_values,expected_hyperbolic. d3 values are joined by ';'.
std::string atlas_to_csv(const std::vector<atlas::AtlasRow>& rows);
std::string atlas_to_json(const std::vector<atlas::AtlasRow>& rows);
std::vector<atlas::AtlasRow> parse_atlas_json(std::string_view json_text);
std::string atlas_to_table(const std::vector<atlas::AtlasRow>& rows);

struct KirbyReport {
    std::string source;
    bool verified;
    std::size_t moves;
    AbelianGroup start_h1;
    AbelianGroup target_h1;
};

KirbyReport make_kirby_report(const linkalg::MoveScript& script, const std::string& source);
std::string kirby_report_json(const KirbyReport& r);
std::string kirby_report_table(const KirbyReport& r);

}  // namespace csurg::serialize
