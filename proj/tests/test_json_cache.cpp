#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "omega/cache.hpp"
#include "omega/json_io.hpp"

using namespace omega;

namespace {

Pattern pat(const char* text) { return Pattern::parse(text); }

}  // namespace

TEST_CASE("sha256 against known vectors") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // block-boundary lengths
    CHECK(sha256_hex(std::string(55, 'a')) ==
          "9f4390f8d30c2dd92ec9f095b65e2b9ae9b0a925a5258e241c9f1e910f734318");
    CHECK(sha256_hex(std::string(64, 'a')) ==
          "ffe054fe7ae0cb6dc65c3af9b61d5209f439851db43d0ba5997337df154668eb");
}

TEST_CASE("poset specs round-trip through JSON") {
    std::vector<PosetSpec> specs = {
        PosetSpec::generators({pat("(3,3)"), pat("(1,2,1)")}),
        PosetSpec::reduced_norm_at_least(4, 2),
        PosetSpec::max_entry_at_least(3),
        PosetSpec::free_group_complement(),
        PosetSpec::strictly_below(pat("(1,2,2,1)")),
        PosetSpec::at_or_below(pat("(2)")),
        PosetSpec::full(),
    };
    for (const auto& spec : specs) {
        json j = to_json(spec);
        PosetSpec back = poset_spec_from_json(j);
        CHECK(to_json(back) == j);
        CHECK(canonical_spec_string(back) == canonical_spec_string(spec));
    }
    CHECK_THROWS_AS(poset_spec_from_json(json{{"family", {{"type", "nonsense"}}}}),
                    ValidationError);
}

TEST_CASE("complex dump schema") {
    auto theta = build_poset(PosetSpec::reduced_norm_at_least(4, 0), 6);
    json dump = to_json(build_sub_complex(theta));
    CHECK(dump["schema"] == "omega/1");
    CHECK(dump["d"] == 6);
    CHECK(dump["degrees"]["1"] == json::array({"(6)"}));
    CHECK(dump["degrees"]["2"].size() == 5);
    // the degree-2 boundary is the all-ones column against (6)
    auto triplets = dump["boundaries"]["2"];
    REQUIRE(triplets.size() == 5);
    for (int j = 0; j < 5; ++j) {
        CHECK(triplets[j][0] == 0);
        CHECK(triplets[j][1] == j);
        CHECK(triplets[j][2] == 1);
    }
}

TEST_CASE("homology table JSON carries degrees, ranks, torsion and fingerprint") {
    auto theta = build_poset(PosetSpec::reduced_norm_at_least(4, 0), 6);
    auto h = complex_homology(build_sub_complex(theta));
    json j = to_json(h);
    REQUIRE(j["groups"].size() == 1);
    CHECK(j["groups"][0]["degree"] == 2);
    CHECK(j["groups"][0]["rank"] == 4);
    CHECK(j["groups"][0]["torsion"] == json::array());
    CHECK(j["fingerprint"].get<std::string>().size() == 64);
}

TEST_CASE("fingerprints distinguish complexes and survive recomputation") {
    auto a = complex_homology(build_sub_complex(build_poset(PosetSpec::reduced_norm_at_least(4, 0), 6)));
    auto b = complex_homology(build_sub_complex(build_poset(PosetSpec::reduced_norm_at_least(3, 0), 6)));
    auto a_again =
        complex_homology(build_sub_complex(build_poset(PosetSpec::reduced_norm_at_least(4, 0), 6)));
    CHECK(a.fingerprint != b.fingerprint);
    CHECK(a.fingerprint == a_again.fingerprint);
}

TEST_CASE("result cache stores and returns exact bytes") {
    auto dir = std::filesystem::temp_directory_path() /
               ("omega-cache-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    ResultCache cache(dir);
    std::string key = sha256_hex("some canonical request");
    CHECK_FALSE(cache.lookup(key).has_value());
    std::string payload = "{\"x\": 1}\nwith trailing bytes\x01\x02";
    cache.store(key, payload);
    auto hit = cache.lookup(key);
    REQUIRE(hit.has_value());
    CHECK(*hit == payload);
    // no temp droppings left behind
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        CHECK(entry.path().string().find(".tmp.") == std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory resolution prefers the explicit flag") {
    auto flagged = ResultCache::resolve("/tmp/omega-explicit");
    CHECK(flagged.directory() == std::filesystem::path("/tmp/omega-explicit"));
    ::setenv("OMEGA_CACHE_DIR", "/tmp/omega-from-env", 1);
    auto from_env = ResultCache::resolve("");
    CHECK(from_env.directory() == std::filesystem::path("/tmp/omega-from-env"));
    ::unsetenv("OMEGA_CACHE_DIR");
}

TEST_CASE("chains serialize as pattern/coefficient pairs") {
    Chain c;
    c.add(pat("(3,1)"), 1);
    c.add(pat("(1,3)"), -1);
    CHECK(to_json(c) == json::array({{"(1,3)", -1}, {"(3,1)", 1}}));
    Int huge = Int("123456789012345678901234567890");
    Chain big;
    big.add(pat("(2)"), huge);
    CHECK(to_json(big)[0][1] == "123456789012345678901234567890");
}
