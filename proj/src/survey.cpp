#include "preheight/survey.hpp"

#include <cmath>
#include <cstddef>
#include <ostream>

#include "preheight/io.hpp"
#include "preheight/quad_map.hpp"

namespace preheight {

SurveyRecord survey_one(const SweepConfig& cfg, const Rational& c) {
    const PreimageTree tree = iterated_preimages(c, cfg.b, cfg.depth_cap);
    SurveyRecord rec;
    rec.c = c;
    rec.h_c = weil_height(c);
    rec.h_b = weil_height(cfg.b);
    rec.counts_per_level = tree.level_counts();
    rec.total_preimages = tree.union_size();
    // The tree records an element at its first depth only, so a target on
    // a cycle can have deep preimages invisible in the counts; decide
    // depth 5 from the exact fifth preimage set instead.
    rec.has_depth5 = !preimage_set(c, cfg.b, 5).empty();
    rec.closed = tree.closed;
    return rec;
}

std::vector<SurveyRecord> sweep_parameters_serial(const SweepConfig& cfg) {
    const std::vector<Rational> params = enumerate_rationals(cfg.c_height_bound);
    std::vector<SurveyRecord> records(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) records[i] = survey_one(cfg, params[i]);
    return records;
}

std::vector<SurveyRecord> sweep_parameters(const SweepConfig& cfg, int jobs) {
#ifdef _OPENMP
    if (jobs > 1) {
        const std::vector<Rational> params = enumerate_rationals(cfg.c_height_bound);
        std::vector<SurveyRecord> records(params.size());
        const auto count = static_cast<std::ptrdiff_t>(params.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            records[static_cast<std::size_t>(i)] = survey_one(cfg, params[static_cast<std::size_t>(i)]);
        }
        return records;
    }
#else
    (void)jobs;
#endif
    return sweep_parameters_serial(cfg);
}

std::optional<DepthFiveMax> max_param_height_with_depth5(
    const std::vector<SurveyRecord>& records) {
    std::optional<DepthFiveMax> best;
    for (const auto& rec : records) {
        if (!rec.closed || !rec.has_depth5) continue;
        if (!best || rec.h_c > best->h_c) best = DepthFiveMax{rec.c, rec.h_c};
    }
    return best;
}

ExtremalPoint extremal_family(const Rational& c) {
    const double h_c = weil_height(c);
    if (h_c <= 0.0) {
        throw DomainError("extremal_family: h(c) = 0 (c in {0, 1, -1}) gives no ratio");
    }
    const Rational b = iterate(c, Rational(0), 5);
    return {.b = b, .ratio = weil_height(b) / h_c};
}

std::optional<CorollaryBoundReport> corollary_bound_report(
    const std::vector<SurveyRecord>& records, double gamma_trial) {
    std::optional<CorollaryBoundReport> report;
    for (const auto& rec : records) {
        if (!rec.closed) continue;
        if (!report) {
            report = CorollaryBoundReport{};
            report->gamma_trial = gamma_trial;
            report->h_b = rec.h_b;
        }
        if (rec.total_preimages > report->max_total) report->max_total = rec.total_preimages;
    }
    if (report) {
        report->threshold = std::exp(gamma_trial * report->h_b);
        report->satisfied = static_cast<double>(report->max_total) <= report->threshold;
        report->degenerate_height = report->h_b == 0.0;
    }
    return report;
}

bool small_n_count_check(const SurveyRecord& record) {
    std::uint64_t sum = 0;
    const std::size_t upto = record.counts_per_level.size() < 4 ? record.counts_per_level.size() : 4;
    for (std::size_t i = 0; i < upto; ++i) sum += record.counts_per_level[i];
    return sum <= 30;
}

void write_sweep_csv(const std::vector<SurveyRecord>& records, std::ostream& os) {
    os << "c_num,c_den,h_c,h_b,counts_per_level,total,has_depth5,closed\n";
    for (const auto& rec : records) {
        os << rec.c.numerator().get_str() << ',' << rec.c.denominator().get_str() << ','
           << format_sig12(rec.h_c) << ',' << format_sig12(rec.h_b) << ',';
        for (std::size_t i = 0; i < rec.counts_per_level.size(); ++i) {
            if (i) os << ';';
            os << rec.counts_per_level[i];
        }
        os << ',' << rec.total_preimages << ',' << bool_str(rec.has_depth5) << ','
           << bool_str(rec.closed) << '\n';
    }
}

}  // namespace preheight
