#pragma once

#include "xop/recurrence.hpp"

#include <string>
#include <vector>

namespace xop {

struct CaseParams {
    Rational a = 0;
    Rational c = 0;
    Rational alpha = 0;
};

/// One published coefficient table, evaluated at a parameter sample.
struct PaperTable {
    std::string case_id;
    ExcFamily family;
    Poly lambda;
    std::string lambda_text;
    // lambda as produced by the builders, for comparison with the printed one.
    Poly builder_lambda;
    // The printed lambda is the negative of the builder's.
    bool lambda_sign_flipped = false;
    std::map<int, RationalFn> A;
    std::map<int, std::string> A_text;
    // Repaired forms of printed entries that do not hold as written; those
    // slots are informational and the repaired form is checked instead.
    std::map<int, RationalFn> corrected;
    std::map<int, std::string> corrected_text;
    // Operator coefficients, published only for charlier-12-ord7.
    std::map<int, Poly> h;
    std::map<int, std::string> h_text;
};

const std::vector<std::string>& paper_case_ids();
// Throws NotFoundError for an unknown id.
PaperTable paper_table(const std::string& case_id, const CaseParams& params);
// Printed coefficients with repaired entries substituted.
Recurrence table_recurrence(const PaperTable& table);

enum class EntryStatus { match, mismatch, informational };
std::string to_string(EntryStatus s);

struct TableEntry {
    std::string slot;
    std::string sample;
    EntryStatus status = EntryStatus::match;
    std::string paper;
    std::string derived;
    std::string note;
};

struct VerificationReport {
    std::string case_id;
    std::vector<TableEntry> entries;

    bool passed() const;
    int count(EntryStatus s) const;
};

struct TableSamples {
    // Empty vectors select the defaults of the acceptance grid.
    std::vector<Rational> a;
    std::vector<std::pair<Rational, Rational>> ac;
    std::vector<Rational> alpha;
    int n_max = 12;
    int residual_n_max = 10;
};

// Derives every tabulated quantity independently (direct fit, plus the
// operator route for discrete families) and compares it with the table.
VerificationReport verify_paper_tables(const std::string& case_id, const TableSamples& samples = {});

} // namespace xop
