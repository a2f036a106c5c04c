#include <catch2/catch_amalgamated.hpp>

#include "refclass/synth.hpp"
#include "testutil.hpp"

using namespace refclass;

namespace {

std::string serialize_corpus(const GeneratedCorpus& gen) {
    testutil::TempDir dir("gen");
    write_generated_files(gen, dir.str() + "/items.tsv", dir.str() + "/refs.tsv",
                          dir.str() + "/taxonomy.tsv", dir.str() + "/truth.tsv");
    return testutil::read_file(dir.str() + "/items.tsv") + "\x1e" +
           testutil::read_file(dir.str() + "/refs.tsv") + "\x1e" +
           testutil::read_file(dir.str() + "/taxonomy.tsv") + "\x1e" +
           testutil::read_file(dir.str() + "/truth.tsv");
}

}  // namespace

TEST_CASE("generation is deterministic in the seed") {
    GeneratorConfig cfg;
    cfg.n_items = 1500;
    cfg.n_categories = 12;
    cfg.refs_mean = 5;
    cfg.multi_category_fraction = 0.2;
    cfg.multidisciplinary_fraction = 0.1;
    cfg.titleless_fraction = 0.1;
    cfg.refless_fraction = 0.05;
    cfg.within_category_prob = 0.8;
    cfg.seed = 77;
    auto a = generate(cfg);
    auto b = generate(cfg);
    CHECK(serialize_corpus(a) == serialize_corpus(b));

    cfg.seed = 78;
    auto c = generate(cfg);
    CHECK(serialize_corpus(a) != serialize_corpus(c));
}

TEST_CASE("generated files round-trip through ingest") {
    GeneratorConfig cfg;
    cfg.n_items = 800;
    cfg.n_categories = 7;
    cfg.refs_mean = 4;
    cfg.multi_category_fraction = 0.3;
    cfg.multidisciplinary_fraction = 0.15;
    cfg.titleless_fraction = 0.2;
    cfg.within_category_prob = 0.7;
    cfg.seed = 31;
    auto gen = generate(cfg);

    testutil::TempDir dir("roundtrip");
    write_generated_files(gen, dir.str() + "/items.tsv", dir.str() + "/refs.tsv",
                          dir.str() + "/taxonomy.tsv", dir.str() + "/truth.tsv");
    Taxonomy t = load_taxonomy(dir.str() + "/taxonomy.tsv");
    CHECK(t.serialize() == gen.taxonomy.serialize());
    auto [corpus, report] = load_corpus(dir.str() + "/items.tsv", dir.str() + "/refs.tsv", t);

    REQUIRE(corpus.size() == gen.corpus.size());
    REQUIRE(corpus.edge_count() == gen.corpus.edge_count());
    CHECK(report.items_kept == cfg.n_items);
    CHECK(report.rejected_unknown_category == 0);
    CHECK(report.dangling_dropped == 0);
    for (ItemId i = 0; i < corpus.size(); ++i) {
        CHECK(corpus.key(i) == gen.corpus.key(i));
        CHECK(corpus.doc_type(i) == gen.corpus.doc_type(i));
        CHECK(corpus.year(i) == gen.corpus.year(i));
        REQUIRE(std::vector<CategoryId>(corpus.original_categories(i).begin(),
                                        corpus.original_categories(i).end()) ==
                std::vector<CategoryId>(gen.corpus.original_categories(i).begin(),
                                        gen.corpus.original_categories(i).end()));
        REQUIRE(std::vector<ItemId>(corpus.out_edges(i).begin(), corpus.out_edges(i).end()) ==
                std::vector<ItemId>(gen.corpus.out_edges(i).begin(), gen.corpus.out_edges(i).end()));
        REQUIRE(std::vector<uint32_t>(corpus.title_tokens(i).begin(), corpus.title_tokens(i).end()) ==
                std::vector<uint32_t>(gen.corpus.title_tokens(i).begin(),
                                      gen.corpus.title_tokens(i).end()));
    }
}

TEST_CASE("pure planted corpus is fully recoverable") {
    GeneratorConfig cfg;
    cfg.n_items = 5000;
    cfg.n_categories = 25;
    cfg.within_category_prob = 1.0;
    cfg.seed = 1;
    auto gen = generate(cfg);
    auto result = classify_pass(gen.corpus, gen.taxonomy, Level::subject);
    CHECK(score_against_truth(result, gen.truth) == 1.0);
    uint64_t with_refs = 0, classified = 0;
    for (ItemId i = 0; i < gen.corpus.size(); ++i) {
        if (!gen.corpus.out_edges(i).empty()) ++with_refs;
        if (result.classified(i)) ++classified;
    }
    CHECK(with_refs == classified);
    CHECK(with_refs == gen.stats.items_with_refs);
}

TEST_CASE("config validation") {
    GeneratorConfig cfg;
    SECTION("zero items is fine") {
        cfg.n_items = 0;
        auto gen = generate(cfg);
        CHECK(gen.corpus.size() == 0);
        CHECK(gen.corpus.edge_count() == 0);
    }
    SECTION("probabilities out of range") {
        cfg.within_category_prob = 1.5;
        CHECK_THROWS_AS(generate(cfg), ValidationError);
    }
    SECTION("references demanded but impossible") {
        cfg.refless_fraction = 1.0;
        cfg.refs_mean = 5.0;
        CHECK_THROWS_AS(generate(cfg), ValidationError);
    }
    SECTION("too few categories") {
        cfg.n_categories = 1;
        CHECK_THROWS_AS(generate(cfg), ValidationError);
    }
    SECTION("fractions exceeding one") {
        cfg.multi_category_fraction = 0.7;
        cfg.multidisciplinary_fraction = 0.5;
        CHECK_THROWS_AS(generate(cfg), ValidationError);
    }
}

TEST_CASE("generated corpora satisfy the corpus invariants") {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        GeneratorConfig cfg;
        cfg.n_items = 2000;
        cfg.n_categories = 10;
        cfg.refs_mean = 6;
        cfg.within_category_prob = 0.75;
        cfg.multi_category_fraction = 0.25;
        cfg.multidisciplinary_fraction = 0.1;
        cfg.refless_fraction = 0.1;
        cfg.seed = seed;
        auto gen = generate(cfg);
        const Corpus& c = gen.corpus;
        uint64_t out_total = 0, in_total = 0;
        for (ItemId i = 0; i < c.size(); ++i) {
            out_total += c.out_edges(i).size();
            in_total += c.in_edges(i).size();
            for (ItemId j : c.out_edges(i)) {
                CHECK(j < c.size());
                CHECK(j != i);
                CHECK(c.year(j) <= c.year(i));  // references point backward
            }
            CHECK(c.original_categories(i).size() <= 6);
            CHECK(!c.original_categories(i).empty());
        }
        CHECK(out_total == c.edge_count());
        CHECK(in_total == c.edge_count());
    }
}

TEST_CASE("multidisciplinary and multi-category originals behave as planted") {
    GeneratorConfig cfg;
    cfg.n_items = 3000;
    cfg.n_categories = 16;
    cfg.refs_mean = 5;
    cfg.within_category_prob = 1.0;
    cfg.multi_category_fraction = 0.3;
    cfg.multidisciplinary_fraction = 0.2;
    cfg.seed = 13;
    auto gen = generate(cfg);
    const Taxonomy& t = gen.taxonomy;

    uint64_t unique_n = 0, multi_n = 0, md_n = 0;
    for (ItemId i = 0; i < gen.corpus.size(); ++i) {
        auto cats = gen.corpus.original_categories(i);
        if (cats.size() > 1) {
            ++multi_n;
        } else if (t.multidisciplinary(cats[0])) {
            ++md_n;
        } else {
            ++unique_n;
            CHECK(cats[0] == gen.truth.category[i]);
        }
    }
    CHECK(unique_n == gen.stats.unique_original);
    CHECK(multi_n == gen.stats.multi_original);
    CHECK(md_n == gen.stats.multidisciplinary_original);
}

TEST_CASE("score_against_truth accounting") {
    GeneratorConfig cfg;
    cfg.n_items = 300;
    cfg.n_categories = 5;
    cfg.refs_mean = 4;
    cfg.within_category_prob = 1.0;
    cfg.seed = 9;
    auto gen = generate(cfg);
    auto result = classify_pass(gen.corpus, gen.taxonomy, Level::subject);
    REQUIRE(score_against_truth(result, gen.truth) == 1.0);

    // flip one classified item
    uint64_t k = result.classified_count();
    for (ItemId i = 0; i < result.size(); ++i) {
        if (result.classified(i)) {
            result.labels[i] = result.labels[i] == gen.truth.category[i]
                                   ? (result.labels[i] + 1) % gen.taxonomy.category_count()
                                   : gen.truth.category[i];
            break;
        }
    }
    double flipped = score_against_truth(result, gen.truth);
    CHECK_THAT(flipped, Catch::Matchers::WithinAbs(static_cast<double>(k - 1) / k, 1e-12));

    SECTION("size mismatch rejected") {
        PlantedTruth wrong;
        wrong.category.assign(result.size() + 1, 0);
        wrong.area.assign(result.size() + 1, 0);
        CHECK_THROWS_AS(score_against_truth(result, wrong), ValidationError);
    }
}

TEST_CASE("recovery degrades monotonically with noise") {
    double last = 1.1;
    for (double p : {0.9, 0.7, 0.5}) {
        GeneratorConfig cfg;
        cfg.n_items = 6000;
        cfg.n_categories = 20;
        cfg.refs_mean = 8;
        cfg.within_category_prob = p;
        cfg.seed = 1;
        auto gen = generate(cfg);
        auto result = classify_pass(gen.corpus, gen.taxonomy, Level::subject);
        double recovery = score_against_truth(result, gen.truth);
        CHECK(recovery < last);
        CHECK(recovery > 0.5);
        last = recovery;
    }
}

TEST_CASE("generator can plant into a supplied taxonomy") {
    Taxonomy def = default_taxonomy();
    GeneratorConfig cfg;
    cfg.n_items = 1000;
    cfg.n_categories = 25;  // ignored when a taxonomy is supplied
    cfg.taxonomy = &def;
    cfg.refs_mean = 4;
    cfg.multidisciplinary_fraction = 0.1;
    cfg.seed = 6;
    auto gen = generate(cfg);
    CHECK(gen.taxonomy.category_count() == 252);
    for (ItemId i = 0; i < gen.corpus.size(); ++i) {
        CHECK_FALSE(def.multidisciplinary(gen.truth.category[i]));
        CHECK(def.broad_area_of(gen.truth.category[i]).has_value());
    }
    auto result = classify_pass(gen.corpus, gen.taxonomy, Level::subject);
    CHECK(score_against_truth(result, gen.truth) == 1.0);
}
