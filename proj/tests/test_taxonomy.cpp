#include <doctest.h>

#include <set>

#include "jsonspace/parse.hpp"
#include "jsonspace/render.hpp"
#include "jsonspace/taxonomy.hpp"
#include "test_support.hpp"

using namespace jsonspace;

TEST_CASE("size tiers split at 100 and 1000 minified bytes") {
  CHECK(size_tier(0) == SizeTier::Tier1);
  CHECK(size_tier(99) == SizeTier::Tier1);
  CHECK(size_tier(100) == SizeTier::Tier2);
  CHECK(size_tier(999) == SizeTier::Tier2);
  CHECK(size_tier(1000) == SizeTier::Tier3);
  CHECK(size_tier(50000) == SizeTier::Tier3);
}

TEST_CASE("tier descriptions") {
  CHECK(tier_description(SizeTier::Tier1) == "Tier 1 Minified < 100 bytes");
  CHECK(tier_description(SizeTier::Tier2) ==
        "Tier 2 Minified ≥ 100 < 1000 bytes");
  CHECK(tier_description(SizeTier::Tier3) ==
        "Tier 3 Minified ≥ 1000 bytes");
  CHECK(tier_name(SizeTier::Tier2) == "Tier 2");
}

TEST_CASE("a single string document is pure textual weight") {
  ContentWeights weights = content_weights(parse("\"ab\""));
  CHECK(weights.total_nodes == 1);
  CHECK(weights.document_bytes == 4);
  CHECK(weights.textual.count == 1);
  CHECK(weights.textual.bytes == 4);
  CHECK(weights.textual.weight == doctest::Approx(100.0));
  CHECK(weights.numeric.weight == 0.0);
  CHECK(weights.boolean_like.weight == 0.0);
}

TEST_CASE("weights multiply count share by byte share") {
  // [1,"ab",true]: 4 nodes, 13 bytes; numeric 1 node 1 byte,
  // textual 1 node 4 bytes, boolean 1 node 4 bytes.
  ContentWeights weights = content_weights(parse(R"([1,"ab",true])"));
  CHECK(weights.total_nodes == 4);
  CHECK(weights.document_bytes == 13);
  CHECK(weights.numeric.weight ==
        doctest::Approx(25.0 * (100.0 / 13.0) / 100.0));
  CHECK(weights.textual.weight ==
        doctest::Approx(25.0 * (400.0 / 13.0) / 100.0));
  CHECK(weights.boolean_like.weight == weights.textual.weight);
}

TEST_CASE("structural nodes dilute the shares but carry no class") {
  ContentWeights weights = content_weights(parse(R"({"a":{"b":"xx"}})"));
  CHECK(weights.total_nodes == 3);
  CHECK(weights.textual.count == 1);
  CHECK(weights.textual.bytes == 4);
  CHECK(weights.document_bytes == 16);
  CHECK(weights.textual.weight ==
        doctest::Approx((100.0 / 3.0) * (25.0) / 100.0));
}

TEST_CASE("qualifiers take every argmax class") {
  auto single = content_qualifiers(content_weights(parse("[1,2,\"a\"]")));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == ContentClass::Numeric);

  auto tied = content_qualifiers(content_weights(parse(R"(["ab",1234])")));
  REQUIRE(tied.size() == 2);
  CHECK(tied[0] == ContentClass::Textual);
  CHECK(tied[1] == ContentClass::Numeric);

  auto empty = content_qualifiers(content_weights(parse("{}")));
  REQUIRE(empty.size() == 3);
  CHECK(empty[0] == ContentClass::Textual);
  CHECK(empty[1] == ContentClass::Numeric);
  CHECK(empty[2] == ContentClass::Boolean);
}

TEST_CASE("redundancy is the duplicate share of all nodes") {
  RedundancyStats stats = redundancy(parse("[1,1,1,1]"));
  CHECK(stats.total_nodes == 5);
  CHECK(stats.unique_nodes == 2);
  CHECK(stats.percentage == doctest::Approx(60.0));

  RedundancyStats none = redundancy(parse(R"({"a":1,"b":2})"));
  CHECK(none.percentage == 0.0);

  RedundancyStats fixture =
      redundancy(parse(read_file(test_data_dir() + "/weather.json")));
  CHECK(fixture.total_nodes == 24);
  CHECK(fixture.unique_nodes == 19);
  CHECK(fixed2_truncated(fixture.percentage) == "20.83");
}

TEST_CASE("nesting profile of a two-level object") {
  NestingProfile profile = nesting_profile(parse(R"({"a":{"b":"xx"}})"));
  CHECK(profile.height == 2);
  REQUIRE(profile.level_bytes.size() == 1);
  CHECK(profile.level_bytes.at(3) == 4);
  CHECK(profile.largest_level == 3);
  CHECK(profile.weight == 4);
}

TEST_CASE("nesting weight needs a scalar level below the root") {
  CHECK(nesting_profile(parse("{}")).weight == 0);
  CHECK(nesting_profile(parse("[[]]")).weight == 0);
  CHECK_FALSE(nesting_profile(parse("[[]]")).largest_level.has_value());
  // A root scalar sits at level 1, which never counts.
  CHECK(nesting_profile(parse("\"abc\"")).weight == 0);
  CHECK(nesting_profile(parse("[1]")).weight == 1);
}

TEST_CASE("largest level ties go to the smaller level") {
  NestingProfile profile = nesting_profile(parse(R"({"a":1,"b":[2]})"));
  CHECK(profile.level_bytes.at(2) == 1);
  CHECK(profile.level_bytes.at(3) == 1);
  CHECK(profile.largest_level == 2);
  CHECK(profile.weight == 2);
}

TEST_CASE("flat wide documents score low, deep documents high") {
  NestingProfile flat = nesting_profile(parse("[1,2,3,4,5,6,7,8,9]"));
  CHECK(flat.height == 1);
  CHECK(flat.weight == 1);

  NestingProfile deep =
      nesting_profile(parse(R"({"a":{"b":{"c":{"d":[1,2,3]}}}})"));
  CHECK(deep.height == 5);
  CHECK(deep.largest_level == 6);
  CHECK(deep.weight == 25);
}

TEST_CASE("category acronyms combine tier, class, redundancy, nesting") {
  CHECK(category_acronym(SizeTier::Tier2, ContentClass::Numeric, false,
                         true) == "Tier 2 NNN");
  CHECK(category_acronym(SizeTier::Tier1, ContentClass::Textual, false,
                         false) == "Tier 1 TNF");
  CHECK(category_acronym(SizeTier::Tier3, ContentClass::Boolean, true,
                         false) == "Tier 3 BRF");
  CHECK(category_acronym(SizeTier::Tier1, ContentClass::Numeric, true,
                         false) == "Tier 1 NRF");
}

TEST_CASE("classify pulls the pieces together") {
  TaxonomyReport report = classify(parse("[1,1,1,1]"));
  CHECK(report.minified_bytes == 9);
  CHECK(report.tier == SizeTier::Tier1);
  CHECK(report.redundant);
  CHECK_FALSE(report.nested);
  REQUIRE(report.categories.size() == 1);
  CHECK(report.categories[0] == "Tier 1 NRF");
}

TEST_CASE("empty object claims every class") {
  TaxonomyReport report = classify(parse("{}"));
  REQUIRE(report.categories.size() == 3);
  CHECK(report.categories[0] == "Tier 1 TNF");
  CHECK(report.categories[1] == "Tier 1 NNF");
  CHECK(report.categories[2] == "Tier 1 BNF");
}

TEST_CASE("the fixture classifies as Tier 2 NNN") {
  TaxonomyReport report =
      classify(parse(read_file(test_data_dir() + "/weather.json")));
  CHECK(report.minified_bytes == 184);
  CHECK(report.tier == SizeTier::Tier2);
  CHECK(fixed2_truncated(report.weights.numeric.weight) == "3.80");
  CHECK(fixed2_truncated(report.weights.textual.weight) == "0.95");
  CHECK(fixed2_truncated(report.weights.boolean_like.weight) == "1.53");
  CHECK(report.nesting.height == 4);
  CHECK(report.nesting.level_bytes ==
        std::map<int, std::uint64_t>{{2, 6}, {3, 18}, {4, 29}, {5, 2}});
  CHECK(report.nesting.weight == 12);
  REQUIRE(report.categories.size() == 1);
  CHECK(report.categories[0] == "Tier 2 NNN");
}

TEST_CASE("every classification lands in the 36-category space") {
  std::set<std::string> valid;
  for (SizeTier tier : {SizeTier::Tier1, SizeTier::Tier2, SizeTier::Tier3})
    for (ContentClass c : {ContentClass::Textual, ContentClass::Numeric,
                           ContentClass::Boolean})
      for (bool redundant : {false, true})
        for (bool nested : {false, true})
          valid.insert(category_acronym(tier, c, redundant, nested));
  REQUIRE(valid.size() == 36);

  DocumentGenerator generator(5150);
  for (int i = 0; i < 500; ++i) {
    TaxonomyReport report = classify(generator.next(6));
    REQUIRE(!report.categories.empty());
    CHECK(report.categories.size() == report.qualifiers.size());
    for (const auto& acronym : report.categories)
      CHECK(valid.count(acronym) == 1);
    CHECK(report.redundant == (report.redundancy.percentage >=
                               kRedundantThresholdPct));
    CHECK(report.nested == (report.nesting.weight >= kNestedThreshold));
    CHECK(report.tier == size_tier(report.minified_bytes));
  }
}

TEST_CASE("histograms cover the corpus exactly once per metric") {
  std::vector<TaxonomyReport> reports;
  reports.push_back(classify(parse(read_file(test_data_dir() + "/weather.json"))));
  reports.push_back(classify(parse("[1,1,1,1]")));
  reports.push_back(classify(parse("{}")));

  auto histograms = corpus_histograms(reports);
  REQUIRE(histograms.size() == 5);
  for (const auto& histogram : histograms) {
    std::uint64_t total = 0;
    for (const auto& [label, count] : histogram.bins) total += count;
    CAPTURE(histogram.metric);
    CHECK(total == reports.size());
  }

  CHECK(histograms[0].metric == "byte_size");
  REQUIRE(histograms[0].bins.size() == 2);  // 0..99 and 100..199
  CHECK(histograms[0].bins[0].first == "0");
  CHECK(histograms[0].bins[0].second == 2);
  CHECK(histograms[0].bins[1].first == "100");
  CHECK(histograms[0].bins[1].second == 1);

  CHECK(histograms[1].metric == "redundancy");
  CHECK(histograms[1].bins.size() == 40);
  CHECK(histograms[1].bins[1].first == "2.5");
  // 60% redundant lands in the [60, 62.5) bin.
  CHECK(histograms[1].bins[24].first == "60.0");
  CHECK(histograms[1].bins[24].second == 1);

  CHECK(histograms[2].metric == "nesting");
  CHECK(histograms[2].bins[0].first == "0");

  CHECK(histograms[3].metric == "content_type");
  CHECK(histograms[4].metric == "category");
}
