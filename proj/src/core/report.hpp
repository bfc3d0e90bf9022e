#ifndef HARDCORE_REPORT_HPP
#define HARDCORE_REPORT_HPP

#include <string>

#include "indpoly.hpp"
#include "random_regular.hpp"
#include "sampler.hpp"
#include "scanner.hpp"

namespace hardcore {

/// Text serialization of every result type the tools emit. CSV files carry
/// a fixed header; JSON output is one object per line. Cells that a row's
/// hypotheses make meaningless (e.g. triangle-free-only bounds on a graph
/// with a triangle) serialize as "na" in CSV and null in JSON.

std::string bound_csv_header();
std::string bound_csv_row(const BoundRow& row);
std::string bound_json_row(const BoundRow& row);

std::string ratio_csv_header();
std::string ratio_csv_row(const RatioRecord& rec);
std::string ratio_json_row(const RatioRecord& rec);

std::string tightness_csv_header();
std::string tightness_csv_row(const TightnessRow& row);
std::string tightness_json_row(const TightnessRow& row);

std::string sample_json(const std::string& graph6, const SampleConfig& cfg,
                        const SampleStats& stats);

std::string eval_csv_header();
std::string eval_csv_row(const EvalExact& e, const mpq_class& lambda,
                         double log_p);
std::string eval_json(const EvalExact& e, const mpq_class& lambda,
                      double log_p);

std::string regular_sample_json(const std::string& graph6,
                                const RegularSample& sample);

/// %.12g rendering used by every CSV cell holding a double.
std::string format_double(double x);

} // namespace hardcore

#endif
