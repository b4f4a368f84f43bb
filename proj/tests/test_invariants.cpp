#include <catch2/catch_amalgamated.hpp>

#include "omega/invariants.hpp"

using namespace omega;

namespace {

Pattern pat(const char* text) { return Pattern::parse(text); }

}  // namespace

TEST_CASE("euler numbers by census") {
    auto r4 = euler_number(build_poset(PosetSpec::reduced_norm_at_least(4, 0), 6));
    CHECK(r4.chi == 4);
    CHECK(r4.abs_euler == 4);
    CHECK(r4.chi_compactified == 5);
    CHECK(r4.cells_by_degree == std::map<int, long long>{{1, 1}, {2, 5}});

    // 11 degree-3 cells, 5 degree-2, 1 degree-1
    auto r3 = euler_number(build_poset(PosetSpec::reduced_norm_at_least(3, 0), 6));
    CHECK(r3.cells_by_degree == std::map<int, long long>{{1, 1}, {2, 5}, {3, 11}});
    CHECK(r3.chi == -7);
    CHECK(r3.abs_euler == 7);

    auto r1 = euler_number(build_poset(PosetSpec::reduced_norm_at_least(1, 0), 2));
    CHECK(r1.cells_by_degree == std::map<int, long long>{{1, 1}});
    CHECK(r1.abs_euler == 1);

    // the all-parity census of the (6,3,0) case reproduces the quoted count 10
    auto r3_all =
        euler_number(build_poset(PosetSpec::reduced_norm_at_least(3, 0), 6, ParityPolicy::all));
    CHECK(r3_all.abs_euler == 10);
}

TEST_CASE("stability quantities") {
    auto q33 = stability_quantities(build_poset(PosetSpec::generators({pat("(3,3)")}), 6));
    CHECK(q33.eta == -2);
    CHECK(q33.psi == Rational(2));
    CHECK(q33.xi == Rational(4));
    CHECK(q33.maximal_elements_used == std::vector<Pattern>{pat("(3,3)")});

    // for the skeleton families the maximal elements are the reduced-norm-k
    // stratum, with norm maximized at d
    for (int d : {6, 8}) {
        for (int k = 1; k < std::min(d, 6); ++k) {
            auto q = stability_quantities(build_poset(PosetSpec::reduced_norm_at_least(k, 0), d));
            INFO("d = " << d << ", k = " << k);
            CHECK(q.eta == d - 2 * k);
            CHECK(q.psi == Rational(d - k));
            CHECK(q.xi == Rational(k));
        }
    }

    auto q4 = stability_quantities(build_poset(PosetSpec::generators({pat("(4)")}), 4));
    CHECK(q4.eta == -2);
    CHECK(q4.psi == Rational(1));

    CHECK_THROWS_AS(
        stability_quantities(ClosedPoset(6, ParityPolicy::matched, {}, PosetSpec::full())),
        ValidationError);
}

TEST_CASE("psi is consistent and below d") {
    for (int d : {4, 6, 8}) {
        std::vector<PosetSpec> specs = {PosetSpec::reduced_norm_at_least(2, 0),
                                        PosetSpec::max_entry_at_least(3),
                                        PosetSpec::free_group_complement(),
                                        PosetSpec::generators({pat("(2)")})};
        for (const auto& spec : specs) {
            auto q = stability_quantities(build_poset(spec, d));
            CHECK(Rational(d + q.eta, 2) == q.psi);
            CHECK(q.psi < d);
            CHECK(d - q.psi == q.xi);
        }
        // boundary case: the full poset has the all-ones pattern of norm d
        // among its maximal elements, so eta = d and psi lands exactly on d
        auto full = stability_quantities(build_poset(PosetSpec::full(), d));
        CHECK(full.eta == d);
        CHECK(full.psi == Rational(d));
    }
}

TEST_CASE("complement cohomology examples") {
    auto skeleton = complement_cohomology(build_poset(PosetSpec::reduced_norm_at_least(4, 0), 6));
    CHECK(skeleton.at(3) == HomologyGroup{4, {}});
    CHECK(skeleton.groups.size() == 1);  // all other reduced groups vanish

    auto arnold = complement_cohomology(build_poset(PosetSpec::max_entry_at_least(3), 6));
    CHECK(arnold.at(1) == HomologyGroup{1, {}});
    CHECK(arnold.at(2) == HomologyGroup{1, {}});
    CHECK(arnold.groups.size() == 2);

    auto nothing = complement_cohomology(build_poset(PosetSpec::full(), 6));
    CHECK(nothing.groups.empty());
}

TEST_CASE("complement homology examples") {
    auto fg6 = complement_homology(build_poset(PosetSpec::free_group_complement(), 6));
    CHECK(fg6.at(1) == HomologyGroup{6, {}});  // kappa(6) = 6
    CHECK(fg6.groups.size() == 1);

    auto fg4 = complement_homology(build_poset(PosetSpec::free_group_complement(), 4));
    CHECK(fg4.at(1) == HomologyGroup{2, {}});  // kappa(4) = 2

    auto skeleton = complement_homology(build_poset(PosetSpec::reduced_norm_at_least(4, 0), 6));
    CHECK(skeleton.at(3) == HomologyGroup{4, {}});
    CHECK(skeleton.groups.size() == 1);
}

TEST_CASE("stabilization reports") {
    auto r = stabilization_report(PosetSpec::generators({pat("(3,3)")}), 6, 8);
    CHECK(r.pass);
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].d_from == 6);
    CHECK(r.steps[0].d_to == 8);

    auto arnold = stabilization_report(PosetSpec::max_entry_at_least(3), 6, 8);
    CHECK(arnold.pass);

    auto trivial = stabilization_report(PosetSpec::generators({pat("(3,3)")}), 6, 6);
    CHECK(trivial.steps.empty());
    CHECK(trivial.pass);

    CHECK_THROWS_AS(stabilization_report(PosetSpec::full(), 6, 7), ValidationError);
    CHECK_THROWS_AS(stabilization_report(PosetSpec::full(), 6, 4), ValidationError);
}

TEST_CASE("stabilization certified ranges carry the stability quantities") {
    auto r = stabilization_report(PosetSpec::generators({pat("(2)")}), 4, 8);
    REQUIRE(r.steps.size() == 2);
    for (const auto& step : r.steps) {
        // eta of <(2)> is 0 at every level, so psi = (d+2)/2
        CHECK(step.eta == 0);
        CHECK(step.psi == Rational(step.d_to, 2));
        for (const auto& cmp : step.complement)
            if (cmp.in_certified_range) CHECK(cmp.agree);
    }
    CHECK(r.pass);
}

TEST_CASE("stabilization detects the genuine <(1,1)> counterexample") {
    // Between d = 2 and d = 4 the complement of <(1,1)> gains the isolated
    // all-simple-roots component: reduced H_0 goes 0 -> Z while the stated
    // range still certifies j = 0 (xi(4) = 1).  The report must flag it.
    auto r = stabilization_report(PosetSpec::generators({pat("(1,1)")}), 2, 4);
    REQUIRE(r.steps.size() == 1);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.steps[0].pass);
    CHECK(r.steps[0].xi == Rational(1));
    CHECK_FALSE(r.steps[0].finding.empty());
    bool saw_j0 = false;
    for (const auto& cmp : r.steps[0].complement) {
        if (cmp.j == 0) {
            saw_j0 = true;
            CHECK(cmp.in_certified_range);
            CHECK_FALSE(cmp.agree);
            CHECK(cmp.lhs == HomologyGroup{0, {}});
            CHECK(cmp.rhs == HomologyGroup{1, {}});
        }
    }
    CHECK(saw_j0);
    // from d = 4 on, the component count is stable and the steps certify
    CHECK(stabilization_report(PosetSpec::generators({pat("(1,1)")}), 4, 8).pass);
}

TEST_CASE("bouquet checks") {
    auto b64 = bouquet_check(6, 4, 0);
    CHECK(b64.pass);
    CHECK(b64.expected_degree == 2);
    CHECK(b64.rank_at_expected == 4);
    CHECK(b64.census_chi == 4);

    auto b21 = bouquet_check(2, 1, 0);
    CHECK(b21.pass);
    CHECK(b21.expected_degree == 1);
    CHECK(b21.rank_at_expected == 1);

    auto b63 = bouquet_check(6, 3, 0);
    CHECK(b63.pass);
    CHECK(b63.expected_degree == 3);
    CHECK(b63.census_chi == -7);
    CHECK(b63.rank_at_expected == 7);  // the SNF route agrees with the census

    CHECK_THROWS_AS(bouquet_check(6, 6, 0), ValidationError);
    CHECK_THROWS_AS(bouquet_check(6, 3, 1), ValidationError);  // q parity
}

TEST_CASE("codimension report") {
    auto family = codimension_report(build_poset(PosetSpec::reduced_norm_at_least(4, 0), 6));
    CHECK(family.min_reduced_norm == 4);
    CHECK(family.max_reduced_norm_over_maximal == 4);
    CHECK(family.max_reduced_norm == 5);

    auto gen = codimension_report(build_poset(PosetSpec::generators({pat("(1,2,2,1)")}), 6));
    CHECK(gen.min_reduced_norm == 2);
    CHECK(gen.max_reduced_norm == 5);  // closure reaches (6)

    auto single = codimension_report(build_poset(PosetSpec::generators({pat("(6)")}), 6));
    CHECK(single.min_reduced_norm == 5);
    CHECK(single.max_reduced_norm == 5);
    CHECK(single.max_reduced_norm_over_maximal == 5);
}

TEST_CASE("euler equals the alternating homology rank sum") {
    for (int d : {4, 6, 8}) {
        for (const auto& spec :
             {PosetSpec::reduced_norm_at_least(2, 0), PosetSpec::max_entry_at_least(3),
              PosetSpec::free_group_complement(), PosetSpec::generators({pat("(2,2)")})}) {
            auto theta = build_poset(spec, d);
            auto h = complex_homology(build_sub_complex(theta));
            CHECK(euler_number(theta).chi == h.euler_characteristic());
        }
    }
}
