#pragma once

#include "xop/paper_tables.hpp"
#include "xop/recurrence.hpp"

#include <json.hpp>

#include <string>

namespace xop {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings, never as decimals.
Json to_json(const Rational& q);
Json to_json(const Poly& p);
Json to_json(const RationalFn& f);
Json to_json(const Recurrence& rec);
Json to_json(const DiffOp& op);
Json to_json(const VerificationReport& rep);

Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RationalFn ratfn_from_json(const Json& j);

std::string latex(const Rational& q);
std::string latex(const Poly& p, char var = 'x');
std::string latex(const RationalFn& f, char var = 'n');
// Cases layout, one line per j.
std::string latex(const Recurrence& rec);

// Rows j,n,value; constant coefficients collapse to a single j,*,value row.
std::string recurrence_csv(const Recurrence& rec, int n_lo, int n_hi);

} // namespace xop
