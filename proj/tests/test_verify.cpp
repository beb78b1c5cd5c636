#include <catch2/catch_amalgamated.hpp>

#include "hecke/verify.hpp"

using hecke::Partition;

TEST_CASE("classical integer characters from bead moves") {
    namespace vd = hecke::verify::detail;
    CHECK(vd::classical_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(vd::classical_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(vd::classical_character(Partition{2, 2}, Partition{2, 2}) == 2);
    CHECK(vd::classical_character(Partition{2, 2}, Partition{4}) == 0);
    CHECK(vd::classical_character(Partition{3, 1}, Partition{2, 1, 1}) == 1);
    CHECK(vd::classical_character(Partition{3, 1}, Partition{2, 2}) == -1);
    CHECK(vd::classical_character(Partition{4}, Partition{2, 2}) == 1);
    CHECK(vd::classical_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    // Dimensions at the identity: hook length products.
    CHECK(vd::classical_character(Partition{3, 2}, Partition{1, 1, 1, 1, 1}) == 5);
    CHECK(vd::classical_character(Partition{2, 2, 1}, Partition{1, 1, 1, 1, 1}) == 5);
}

TEST_CASE("subpartition enumeration") {
    namespace vd = hecke::verify::detail;
    auto subs = vd::subpartitions(Partition{2, 1});
    CHECK(subs.size() == 5);
    for (const Partition& p :
         {Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}})
        CHECK(std::find(subs.begin(), subs.end(), p) != subs.end());
}

TEST_CASE("suites pass at reduced bounds") {
    CHECK(hecke::verify::run_relations(2, 2, 3).all_pass());
    CHECK(hecke::verify::run_sign_rep_vs_trace(3).all_pass());
    CHECK(hecke::verify::run_hook_decomposition(4).all_pass());
    CHECK(hecke::verify::run_hook_sums(5).all_pass());
    CHECK(hecke::verify::run_21_closed_form(5).all_pass());
    CHECK(hecke::verify::run_weighted_hook_sum(5).all_pass());
    CHECK(hecke::verify::run_strip_shape_identities(4).all_pass());
    CHECK(hecke::verify::run_branching(5).all_pass());
    CHECK(hecke::verify::run_q1_specialization(4, 2).all_pass());
    CHECK(hecke::verify::run_tableau_counts(5, 5).all_pass());
    CHECK(hecke::verify::run_classical_cross_check(5).all_pass());
    CHECK(hecke::verify::run_removal_order(4).all_pass());
}

TEST_CASE("threaded runs agree with serial runs") {
    auto serial = hecke::verify::run_sign_rep_vs_trace(3, hecke::verify::default_trace_pairs(), 1);
    auto parallel =
        hecke::verify::run_sign_rep_vs_trace(3, hecke::verify::default_trace_pairs(), 4);
    REQUIRE(serial.cases.size() == parallel.cases.size());
    for (std::size_t i = 0; i < serial.cases.size(); ++i) {
        CHECK(serial.cases[i].label == parallel.cases[i].label);
        CHECK(serial.cases[i].pass == parallel.cases[i].pass);
    }
    CHECK(parallel.all_pass());
}

TEST_CASE("suite reports expose failures") {
    hecke::verify::SuiteReport report{"demo",
                                      {{"a", true}, {"b", false}, {"c", true}, {"d", false}}};
    CHECK_FALSE(report.all_pass());
    CHECK(report.failure_count() == 2);
    CHECK(hecke::verify::SuiteReport{"empty", {}}.all_pass());
}
