#include <cmath>
#include <sstream>

#include "doctest.h"
#include "preheight/quad_map.hpp"
#include "preheight/survey.hpp"
#include "support.hpp"

using namespace preheight;
using namespace preheight::testing;

namespace {

SweepConfig cfg_for(const Rational& b, std::uint64_t bound, std::uint32_t depth = 64) {
    SweepConfig cfg;
    cfg.b = b;
    cfg.c_height_bound = bound;
    cfg.depth_cap = depth;
    return cfg;
}

std::string csv_of(const std::vector<SurveyRecord>& records) {
    std::ostringstream out;
    write_sweep_csv(records, out);
    return out.str();
}

}  // namespace

TEST_CASE("sweep over b = 0 at bound 1") {
    const auto records = sweep_parameters_serial(cfg_for(Rational(0), 1));
    REQUIRE(records.size() == 3);  // c = -1, 0, 1 in enumeration order

    CHECK(records[0].c == Rational(-1));
    CHECK(records[0].total_preimages == 3);
    CHECK(records[0].counts_per_level == std::vector<std::uint32_t>{2, 1});
    CHECK(records[0].closed);
    CHECK(records[0].has_depth5);  // 0 and -1 trade places forever

    CHECK(records[1].c == Rational(0));
    CHECK(records[1].total_preimages == 1);
    CHECK(records[1].has_depth5);  // fixed point

    CHECK(records[2].c == Rational(1));
    CHECK(records[2].total_preimages == 0);
    CHECK(records[2].counts_per_level.empty());
    CHECK(!records[2].has_depth5);
    CHECK(records[2].closed);

    for (const auto& rec : records) CHECK(small_n_count_check(rec));
}

TEST_CASE("sweep over b = 4 at bound 1") {
    const auto records = sweep_parameters_serial(cfg_for(Rational(4), 1));
    REQUIRE(records.size() == 3);
    CHECK(records[1].c == Rational(0));
    CHECK(records[1].counts_per_level == std::vector<std::uint32_t>{2});
    CHECK(records[1].total_preimages == 2);
    CHECK(records[1].closed);
    // No depth-5 chain into 4 among |c| <= 1.
    CHECK(!max_param_height_with_depth5(records).has_value());
}

TEST_CASE("sweep over b = -1 at bound 1: cycle gives a depth-5 witness") {
    const auto records = sweep_parameters_serial(cfg_for(Rational(-1), 1));
    const auto best = max_param_height_with_depth5(records);
    REQUIRE(best.has_value());
    CHECK(best->c == Rational(-1));
    CHECK(best->h_c == 0.0);
}

TEST_CASE("sweep over b = f_1^5(0): forward construction guarantees depth 5") {
    const Rational b = iterate(Rational(1), Rational(0), 5);
    CHECK(b == Rational(677));
    const auto records = sweep_parameters_serial(cfg_for(b, 3));
    bool c1_has_depth5 = false;
    for (const auto& rec : records) {
        if (rec.c == Rational(1)) c1_has_depth5 = rec.has_depth5;
        CHECK(small_n_count_check(rec));
        if (!rec.counts_per_level.empty()) CHECK(rec.counts_per_level[0] <= 2);
        for (std::size_t k = 1; k < rec.counts_per_level.size(); ++k) {
            CHECK(rec.counts_per_level[k] <= 2 * rec.counts_per_level[k - 1]);
        }
    }
    CHECK(c1_has_depth5);
    CHECK(max_param_height_with_depth5(records).has_value());
}

TEST_CASE("extremal family") {
    const auto e2 = extremal_family(Rational(2));
    CHECK(e2.b == Rational(2090918));
    CHECK(e2.ratio == doctest::Approx(std::log(2090918.0) / std::log(2.0)).epsilon(1e-12));
    CHECK(e2.ratio == doctest::Approx(20.996).epsilon(1e-3));

    const auto e10 = extremal_family(Rational(10));
    CHECK(e10.b == iterate(Rational(10), Rational(0), 5));
    CHECK(e10.ratio > 16.0);
    CHECK(e10.ratio < 16.4);

    const auto e100 = extremal_family(Rational(100));
    CHECK(e100.ratio > 16.0);
    CHECK(e100.ratio < 16.05);

    CHECK_THROWS_AS(extremal_family(Rational(0)), DomainError);
    CHECK_THROWS_AS(extremal_family(Rational(1)), DomainError);
    CHECK_THROWS_AS(extremal_family(Rational(-1)), DomainError);
}

TEST_CASE("extremal family appears in its own sweep") {
    // h(c) > 0 cases, including a preperiodic parameter (c = -2).
    for (long cv : {2L, -2L, 3L}) {
        const Rational c(cv);
        const auto ext = extremal_family(c);
        const auto rec = survey_one(cfg_for(ext.b, 1), c);  // bound irrelevant here
        CHECK(rec.has_depth5);
    }
}

TEST_CASE("corollary bound report") {
    const auto r4 = corollary_bound_report(sweep_parameters_serial(cfg_for(Rational(4), 1)), 1.0);
    REQUIRE(r4.has_value());
    CHECK(r4->max_total == 2);
    CHECK(r4->threshold == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(r4->satisfied);
    CHECK(!r4->degenerate_height);

    const auto r0 = corollary_bound_report(sweep_parameters_serial(cfg_for(Rational(0), 1)), 1.0);
    REQUIRE(r0.has_value());
    CHECK(r0->max_total == 3);
    CHECK(r0->degenerate_height);  // h(b) = 0: reads "constant >= 3"

    CHECK(!corollary_bound_report({}, 1.0).has_value());
}

TEST_CASE("small_n_count_check: synthetic boundary") {
    SurveyRecord rec;
    rec.counts_per_level = {2, 4, 8, 16};
    rec.total_preimages = 30;
    CHECK(small_n_count_check(rec));
    rec.counts_per_level = {2, 4, 8, 16, 100};  // level 5 not counted
    CHECK(small_n_count_check(rec));
    rec.counts_per_level = {2, 4, 8, 17};
    CHECK(!small_n_count_check(rec));
}

TEST_CASE("sweep CSV: golden output") {
    const auto records = sweep_parameters_serial(cfg_for(Rational(0), 1));
    CHECK(csv_of(records) ==
          "c_num,c_den,h_c,h_b,counts_per_level,total,has_depth5,closed\n"
          "-1,1,0,0,2;1,3,true,true\n"
          "0,1,0,0,1,1,true,true\n"
          "1,1,0,0,,0,false,true\n");
}

TEST_CASE("parallel sweep matches the serial reference and is deterministic") {
    const auto cfg = cfg_for(Rational::from_string("-7/4"), 12);
    const auto serial = sweep_parameters_serial(cfg);
    const std::string serial_csv = csv_of(serial);
    for (int jobs : {1, 2, 8}) {
        CHECK(csv_of(sweep_parameters(cfg, jobs)) == serial_csv);
    }
    CHECK(csv_of(sweep_parameters_serial(cfg)) == serial_csv);  // repeatable byte-for-byte
}
