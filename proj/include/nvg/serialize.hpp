#pragma once

#include <nvg/enumeration.hpp>
#include <nvg/polyfit.hpp>

#include <string>
#include <vector>

namespace nvg {

/*
 * Deterministic text renderings.  Byte-identical output for identical
 * inputs is part of the contract: fixed field order, fixed widths computed
 * from the data, '\n' newlines, no locale dependence, big integers as
 * decimal strings, rationals as {"num", "den"} pairs of decimal strings.
 */

std::string to_table(const GrowthSeries& s);
std::string to_csv(const GrowthSeries& s);  // header k,q,p,source
std::string to_json(const GrowthSeries& s);

std::string to_table(const std::vector<HypothesisReport>& reports, int k_max);
std::string to_csv(const std::vector<HypothesisReport>& reports);
std::string to_json(const std::vector<HypothesisReport>& reports, int k_max);

// "1 + 1/2 k + 1/2 k^2" style, ascending powers, zero terms skipped.
std::string polynomial_text(const RationalPolynomial& p);

std::string rational_text(const BigRational& q);  // "a/b", or "a" when b == 1

}  // namespace nvg
