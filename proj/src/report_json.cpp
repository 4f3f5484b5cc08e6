#include "minorstat/report_json.hpp"

#include "minorstat/construct.hpp"

namespace minorstat {

OrderedJson json_bigint(const BigInt& value) {
  static const BigInt limit = BigInt(1) << 53;
  if (value <= limit && value >= -limit) {
    return OrderedJson(value.convert_to<std::int64_t>());
  }
  return OrderedJson(value.str());
}

OrderedJson json_rational(const BigRational& value) {
  OrderedJson j;
  j["num"] = numerator(value).str();
  j["den"] = denominator(value).str();
  return j;
}

OrderedJson json_minor_stats(const MinorStats& stats) {
  OrderedJson j;
  j["order_m"] = stats.order_m;
  j["total_count"] = json_bigint(stats.total_count);
  j["zero_count"] = json_bigint(stats.zero_count);
  j["nonzero_count"] = json_bigint(stats.nonzero_count);
  j["sum_squares"] = json_bigint(stats.sum_squares);
  if (stats.histogram) {
    auto hist = OrderedJson::array();
    for (const auto& [value, count] : *stats.histogram) {
      OrderedJson row;
      row["det"] = value;
      row["count"] = json_bigint(count);
      hist.push_back(std::move(row));
    }
    j["histogram"] = std::move(hist);
  }
  return j;
}

OrderedJson json_bounds_report(const BoundsReport& report) {
  OrderedJson j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["observed_mean_sq"] = json_rational(report.observed_mean_sq);
  j["bound_mean_sq"] = json_rational(report.bound_mean_sq);
  j["is_hadamard"] = report.is_hadamard;
  j["equality_attained"] = report.equality_attained;
  j["turan_floor"] = json_bigint(report.turan_floor);
  j["y_observed"] = json_bigint(report.y_observed);
  j["y_upper"] = json_rational(report.y_upper);
  j["z_observed"] = json_bigint(report.z_observed);
  j["z_lower"] = json_rational(report.z_lower);
  return j;
}

OrderedJson json_table1(const std::vector<Table1Row>& rows) {
  auto arr = OrderedJson::array();
  for (const Table1Row& row : rows) {
    OrderedJson j;
    j["m"] = row.m;
    j["p_m"] = json_rational(row.p_m);
    j["p_m_hat"] = json_rational(row.p_m_hat);
    j["n0"] = row.n0;
    j["pigeonhole_threshold"] = row.pigeonhole_threshold;
    j["p_m_rendered"] = row.p_m_rendered;
    j["p_m_hat_rendered"] = row.p_m_hat_rendered;
    arr.push_back(std::move(j));
  }
  return arr;
}

OrderedJson json_estimate(const Estimate& est) {
  OrderedJson j;
  j["mean"] = json_rational(est.mean);
  j["stderr"] = est.stderr_value;
  j["samples"] = est.samples;
  j["exhaustive"] = est.exhaustive;
  if (!est.exhaustive) {
    j["seed"] = est.seed;
    j["generator"] = kGeneratorName;
  }
  return j;
}

OrderedJson json_complement(const std::vector<ComplementEntry>& entries) {
  auto arr = OrderedJson::array();
  for (const ComplementEntry& e : entries) {
    OrderedJson j;
    j["m"] = e.m;
    j["z_m"] = json_bigint(e.z_m);
    j["z_complement"] = json_bigint(e.z_complement);
    j["equal"] = e.equal;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace minorstat
