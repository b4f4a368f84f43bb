#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "omega/pattern.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

Pattern pat(const char* text) { return Pattern::parse(text); }

Pattern random_pattern(std::mt19937_64& rng, int max_norm) {
    std::vector<int> entries;
    int budget = static_cast<int>(rng() % static_cast<unsigned>(max_norm + 1));
    while (budget > 0) {
        int e = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(budget, 4)));
        entries.push_back(e);
        budget -= e;
    }
    return Pattern(entries);
}

}  // namespace

TEST_CASE("norms and support") {
    CHECK(pat("(1,2,1)").norm() == 4);
    CHECK(pat("(1,2,1)").reduced_norm() == 1);
    CHECK(pat("(1,2,1)").support_size() == 3);
    CHECK(pat("()").norm() == 0);
    CHECK(pat("()").reduced_norm() == 0);
    CHECK(pat("()").support_size() == 0);
}

TEST_CASE("merge_at") {
    CHECK(pat("(1,2,1)").merge_at(1) == pat("(3,1)"));
    CHECK(pat("(1,2,1)").merge_at(2) == pat("(1,3)"));
    CHECK(pat("(2,2)").merge_at(1) == pat("(4)"));
    CHECK_THROWS_AS(pat("(1,2,1)").merge_at(0), ValidationError);
    CHECK_THROWS_AS(pat("(1,2,1)").merge_at(3), ValidationError);
    CHECK_THROWS_AS(pat("(4)").merge_at(1), ValidationError);
}

TEST_CASE("insert_at") {
    CHECK(pat("(1,2,1)").insert_at(0) == pat("(2,1,2,1)"));
    CHECK(pat("(1,2,1)").insert_at(3) == pat("(1,2,1,2)"));
    CHECK(pat("()").insert_at(0) == pat("(2)"));
    CHECK_THROWS_AS(pat("(1,2,1)").insert_at(-1), ValidationError);
    CHECK_THROWS_AS(pat("(1,2,1)").insert_at(4), ValidationError);
}

TEST_CASE("merge and insert norm bookkeeping") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Pattern p = random_pattern(rng, 10);
        for (int i = 1; i <= p.support_size() - 1; ++i) {
            Pattern m = p.merge_at(i);
            CHECK(m.norm() == p.norm());
            CHECK(m.reduced_norm() == p.reduced_norm() + 1);
            CHECK(m.support_size() == p.support_size() - 1);
        }
        for (int i = 0; i <= p.support_size(); ++i) {
            Pattern ins = p.insert_at(i);
            CHECK(ins.norm() == p.norm() + 2);
            CHECK(ins.reduced_norm() == p.reduced_norm() + 1);
        }
    }
}

TEST_CASE("elementary successors") {
    CHECK(elementary_successors(pat("(4)"), 6) ==
          std::set<Pattern>{pat("(2,4)"), pat("(4,2)")});
    CHECK(elementary_successors(pat("(1,2,1)"), 4) ==
          std::set<Pattern>{pat("(3,1)"), pat("(1,3)")});
    // I_1 and I_2 both give (1,2,2,1); the set collapses them
    CHECK(elementary_successors(pat("(1,2,1)"), 6) ==
          std::set<Pattern>{pat("(3,1)"), pat("(1,3)"), pat("(2,1,2,1)"), pat("(1,2,2,1)"),
                            pat("(1,2,1,2)")});
}

TEST_CASE("successors match the oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Pattern p = random_pattern(rng, 8);
        auto expected = oracle::one_step_images(p.entries(), 10);
        std::set<std::vector<int>> got;
        for (const auto& s : elementary_successors(p, 10)) got.insert(s.entries());
        CHECK(got == expected);
    }
}

TEST_CASE("order examples") {
    CHECK(order_leq(pat("(3,1)"), pat("(1,2,1)"), 6));
    CHECK_FALSE(order_leq(pat("(1,3)"), pat("(3,1)"), 6));
    CHECK(order_leq(pat("(2)"), pat("()"), 6));
    CHECK(order_leq(pat("(1,2,1)"), pat("(1,2,1)"), 6));
}

TEST_CASE("order agrees with reachability oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        Pattern a = random_pattern(rng, 6);
        Pattern b = random_pattern(rng, 6);
        CHECK(order_leq(a, b, 6) == oracle::reachable(b.entries(), a.entries(), 6));
    }
}

TEST_CASE("order is a partial order") {
    auto universe = oracle::patterns_up_to(6, true);
    std::vector<Pattern> pats;
    for (const auto& c : universe) pats.push_back(Pattern(c));
    for (const auto& a : pats) CHECK(order_leq(a, a, 6));  // reflexive
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        const Pattern& a = pats[rng() % pats.size()];
        const Pattern& b = pats[rng() % pats.size()];
        const Pattern& c = pats[rng() % pats.size()];
        // antisymmetry via strict reduced-norm growth
        if (order_leq(a, b, 6) && order_leq(b, a, 6)) CHECK(a == b);
        // transitivity
        if (order_leq(a, b, 6) && order_leq(b, c, 6)) CHECK(order_leq(a, c, 6));
        // every strictly smaller element has strictly bigger reduced norm
        if (order_leq(a, b, 6) && a != b) CHECK(a.reduced_norm() > b.reduced_norm());
    }
}

TEST_CASE("codec") {
    CHECK(pat("(1,2,1)").entries() == std::vector<int>{1, 2, 1});
    CHECK(pat("()").empty());
    CHECK(pat("(12)").entries() == std::vector<int>{12});  // one entry, value twelve
    CHECK(pat("(1,2,1)").to_string() == "(1,2,1)");
    CHECK(pat("()").to_string() == "()");
}

TEST_CASE("codec round-trips") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        Pattern p = random_pattern(rng, 12);
        CHECK(Pattern::parse(p.to_string()) == p);
    }
}

TEST_CASE("codec rejects malformed text with a position") {
    auto check_pos = [](const char* text, std::size_t expected) {
        try {
            Pattern::parse(text);
            FAIL("expected a parse error for " << text);
        } catch (const ParseError& e) {
            CHECK(e.position() == expected);
        }
    };
    check_pos("", 0);
    check_pos("1,2", 0);
    check_pos("(", 1);
    check_pos("(1,,2)", 3);
    check_pos("(0)", 2);
    check_pos("(1 2)", 2);
    check_pos("(1,2) ", 5);
    CHECK_THROWS_AS(Pattern::parse("(-1)"), ParseError);
    CHECK_THROWS_AS(Pattern(std::vector<int>{1, 0}), ValidationError);
}
