#pragma once

/**
 * Experiment harness: parameter sweeps over all c of bounded naive height
 * for a fixed target b, the extremal family b = f_c^5(0), and report
 * helpers over the resulting records.
 *
 * Sweeps are embarrassingly parallel across c. The OpenMP kernel writes
 * each record into its enumeration slot, so output is byte-identical at
 * any job count; the serial path is kept as the reference the parallel
 * kernel is tested against.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "preheight/rational.hpp"

namespace preheight {

struct SweepConfig {
    Rational b;
    std::uint64_t c_height_bound = 1;  // naive-height cap for swept c
    std::uint32_t depth_cap = 64;
    double eps = 1e-4;  // canonical-height tolerance for auxiliary checks
};

struct SurveyRecord {
    Rational c;
    double h_c = 0.0;
    double h_b = 0.0;
    std::vector<std::uint32_t> counts_per_level;  // new elements at depth 1, 2, ...
    std::uint64_t total_preimages = 0;
    bool has_depth5 = false;  // f_c^{-5}(b)(Q) nonempty (cycle-aware, cap-independent)
    bool closed = false;
};

/// One sweep row: the preimage tree of b under f_c plus the exact
/// depth-5 nonemptiness check.
SurveyRecord survey_one(const SweepConfig& cfg, const Rational& c);

/// Reference implementation: plain loop in enumeration order.
std::vector<SurveyRecord> sweep_parameters_serial(const SweepConfig& cfg);

/// OpenMP kernel; jobs <= 1 falls back to the serial path. Records are
/// merged in enumeration order regardless of the job count.
std::vector<SurveyRecord> sweep_parameters(const SweepConfig& cfg, int jobs = 1);

struct DepthFiveMax {
    Rational c;
    double h_c = 0.0;
};

/// The record with has_depth5 = true maximizing h_c (first in enumeration
/// order on ties), or empty if none. Records with closed = false are
/// excluded: their unions may be understated.
std::optional<DepthFiveMax> max_param_height_with_depth5(const std::vector<SurveyRecord>& records);

struct ExtremalPoint {
    Rational b;
    double ratio = 0.0;  // h(b) / h(c)
};

/// b = f_c^5(0) together with the height ratio h(b)/h(c). Requires
/// h(c) > 0; throws DomainError for c in {0, 1, -1}.
ExtremalPoint extremal_family(const Rational& c);

struct CorollaryBoundReport {
    double gamma_trial = 0.0;
    double h_b = 0.0;
    std::uint64_t max_total = 0;
    double threshold = 0.0;         // exp(gamma_trial * h_b)
    bool satisfied = false;         // max_total <= threshold
    bool degenerate_height = false; // h_b = 0: reads "constant >= max_total"
};

/// Descriptive only: compares the largest observed union against
/// exp(gamma_trial * h(b)). Empty when no closed record exists.
std::optional<CorollaryBoundReport> corollary_bound_report(
    const std::vector<SurveyRecord>& records, double gamma_trial);

/// Sum of the level counts for depths 1..4 is at most 2+4+8+16 = 30.
bool small_n_count_check(const SurveyRecord& record);

/// Columns: c_num,c_den,h_c,h_b,counts_per_level,total,has_depth5,closed.
/// Header row mandatory; floats at 12 significant digits; counts joined
/// with ';'. Byte-stable for a given record sequence.
void write_sweep_csv(const std::vector<SurveyRecord>& records, std::ostream& os);

}  // namespace preheight
