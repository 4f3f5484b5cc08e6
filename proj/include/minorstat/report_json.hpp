#pragma once

#include <json.hpp>

#include "minorstat/bigint.hpp"
#include "minorstat/bounds.hpp"
#include "minorstat/minor_engine.hpp"
#include "minorstat/sampling.hpp"

namespace minorstat {

using OrderedJson = nlohmann::ordered_json;

/// Integers up to 2^53 in magnitude serialize as JSON numbers, larger ones as
/// decimal strings, so cross-language consumers never lose precision.
OrderedJson json_bigint(const BigInt& value);

/// Rationals always serialize as {"num": "...", "den": "..."} decimal strings.
OrderedJson json_rational(const BigRational& value);

OrderedJson json_minor_stats(const MinorStats& stats);
OrderedJson json_bounds_report(const BoundsReport& report);
OrderedJson json_table1(const std::vector<Table1Row>& rows);
OrderedJson json_estimate(const Estimate& est);
OrderedJson json_complement(const std::vector<ComplementEntry>& entries);

}  // namespace minorstat
