#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "refclass/common.hpp"
#include "refclass/corpus.hpp"
#include "refclass/engine.hpp"
#include "refclass/taxonomy.hpp"
#include "refclass/tsv.hpp"

namespace refclass {

// Synthetic corpus with planted ground-truth labels; the stand-in for
// proprietary bibliographic data in tests and benchmarks.
struct GeneratorConfig {
    uint64_t n_items = 10000;
    uint32_t n_categories = 25;
    const Taxonomy* taxonomy = nullptr;  // supplied taxonomy; nullptr generates one

    double refs_mean = 15.0;        // references per item, normal-ish
    double refs_dispersion = 5.0;
    double within_category_prob = 1.0;  // reference targets the planted category

    double multi_category_fraction = 0.0;      // items getting 2-6 original categories
    double multidisciplinary_fraction = 0.0;   // items whose original is a multidisciplinary label
    double titleless_fraction = 0.0;
    double refless_fraction = 0.0;

    int32_t year_min = 1950;
    int32_t year_max = 2017;
    double category_skew = 1.0;  // Zipf exponent for category sizes; 0 = uniform
    uint64_t seed = 1;
};

struct PlantedTruth {
    std::vector<CategoryId> category;  // per item
    std::vector<BroadAreaId> area;     // derived through the taxonomy
};

struct GenerationStats {
    std::array<uint64_t, kDocTypeCount> doc_type_counts{};
    uint64_t items_with_refs = 0;
    uint64_t unique_original = 0;
    uint64_t multi_original = 0;
    uint64_t multidisciplinary_original = 0;
    std::map<int32_t, uint64_t> items_by_year;
    std::map<int32_t, uint64_t> items_with_refs_by_year;
};

struct GeneratedCorpus {
    Taxonomy taxonomy;
    Corpus corpus;
    PlantedTruth truth;
    GenerationStats stats;
    IngestReport ingest;
};

namespace detail {

// Generated scheme: "Category 001".."Category NNN" spread round-robin over
// ~sqrt(n) areas, plus per-area multidisciplinary labels and one
// "General Multidisciplinary" without an area when the config plants
// multidisciplinary originals.
inline Taxonomy generate_taxonomy(const GeneratorConfig& cfg) {
    uint32_t n_areas = std::max<uint32_t>(
        2, static_cast<uint32_t>(std::lround(std::sqrt(static_cast<double>(cfg.n_categories)))));
    n_areas = std::min(n_areas, cfg.n_categories);
    std::vector<std::string> labels, areas;
    std::vector<bool> flags;
    char buf[64];
    for (uint32_t c = 0; c < cfg.n_categories; ++c) {
        std::snprintf(buf, sizeof buf, "Category %03u", c + 1);
        labels.emplace_back(buf);
        std::snprintf(buf, sizeof buf, "Area %02u", c % n_areas + 1);
        areas.emplace_back(buf);
        flags.push_back(false);
    }
    if (cfg.multidisciplinary_fraction > 0.0) {
        for (uint32_t a = 0; a < n_areas; ++a) {
            std::snprintf(buf, sizeof buf, "Area %02u Multidisciplinary", a + 1);
            labels.emplace_back(buf);
            std::snprintf(buf, sizeof buf, "Area %02u", a + 1);
            areas.emplace_back(buf);
            flags.push_back(true);
        }
        labels.emplace_back("General Multidisciplinary");
        areas.emplace_back("");
        flags.push_back(true);
    }
    return Taxonomy::from_rows(labels, areas, flags);
}

}  // namespace detail

// Deterministic in the seed: references point backward in generation order
// (years are non-decreasing), landing in the planted category with
// within_category_prob and uniformly elsewhere otherwise. Original categories
// per item: the planted category alone, planted plus same-area neighbors, or
// a multidisciplinary label.
inline GeneratedCorpus generate(const GeneratorConfig& cfg) {
    for (double p : {cfg.within_category_prob, cfg.multi_category_fraction,
                     cfg.multidisciplinary_fraction, cfg.titleless_fraction, cfg.refless_fraction})
        if (p < 0.0 || p > 1.0) throw ValidationError("generator: probabilities must be in [0,1]");
    if (cfg.n_categories < 2) throw ValidationError("generator: n_categories must be >= 2");
    if (cfg.multi_category_fraction + cfg.multidisciplinary_fraction > 1.0)
        throw ValidationError("generator: multi + multidisciplinary fractions exceed 1");
    if (cfg.year_min > cfg.year_max) throw ValidationError("generator: year range is empty");
    if (cfg.refs_mean < 0.0 || cfg.refs_dispersion < 0.0)
        throw ValidationError("generator: refs distribution parameters must be non-negative");
    if (cfg.refs_mean > 0.0 && cfg.refless_fraction >= 1.0)
        throw ValidationError("generator: references requested but refless_fraction is 1");

    GeneratedCorpus gen;
    gen.taxonomy = cfg.taxonomy ? *cfg.taxonomy : detail::generate_taxonomy(cfg);
    const Taxonomy& t = gen.taxonomy;

    // Plantable categories: non-multidisciplinary with a defined broad area.
    std::vector<CategoryId> plantable;
    for (CategoryId c = 0; c < t.category_count(); ++c)
        if (!t.multidisciplinary(c) && t.broad_area_of(c)) plantable.push_back(c);
    if (plantable.size() < 2) throw ValidationError("generator: taxonomy has fewer than 2 plantable categories");
    if (cfg.multidisciplinary_fraction > 0.0 && t.multidisciplinary_count() == 0)
        throw ValidationError("generator: multidisciplinary originals requested but taxonomy has none");

    // Zipf-ish category weights for heavy-tailed sizes.
    std::vector<double> cum;
    cum.reserve(plantable.size());
    double acc = 0.0;
    for (size_t r = 0; r < plantable.size(); ++r) {
        acc += cfg.category_skew <= 0.0 ? 1.0 : 1.0 / std::pow(static_cast<double>(r + 1), cfg.category_skew);
        cum.push_back(acc);
    }

    // Same-area neighbor pools for multi-category originals, and the per-area
    // multidisciplinary label when present.
    std::vector<std::vector<CategoryId>> by_area(t.area_count());
    for (CategoryId c : plantable) by_area[*t.broad_area_of(c)].push_back(c);
    std::vector<CategoryId> area_multi(t.area_count(), kNoCategory);
    CategoryId general_multi = kNoCategory;
    CategoryId first_multi = kNoCategory;
    for (CategoryId c = 0; c < t.category_count(); ++c) {
        if (!t.multidisciplinary(c)) continue;
        if (first_multi == kNoCategory) first_multi = c;
        if (auto a = t.broad_area_of(c)) {
            if (area_multi[*a] == kNoCategory) area_multi[*a] = c;
        } else if (general_multi == kNoCategory) {
            general_multi = c;
        }
    }

    Rng rng(cfg.seed);
    CorpusBuilder builder;
    gen.truth.category.reserve(cfg.n_items);
    gen.truth.area.reserve(cfg.n_items);

    // Per-category membership so far, for backward in-category references.
    std::vector<std::vector<ItemId>> members(t.category_count());

    static constexpr std::array<double, kDocTypeCount> kDocTypeCum = {0.70, 0.85, 0.90, 0.94, 0.97, 1.0};
    const double year_span = static_cast<double>(cfg.year_max - cfg.year_min + 1);
    const size_t noise_words = 50, cat_words = 30;

    std::vector<CategoryId> originals;
    std::vector<std::string> title;
    std::vector<ItemId> refs;
    char buf[64];

    for (uint64_t i = 0; i < cfg.n_items; ++i) {
        // Planted truth.
        double u = rng.real() * acc;
        size_t rank = static_cast<size_t>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
        if (rank >= plantable.size()) rank = plantable.size() - 1;
        CategoryId planted = plantable[rank];
        BroadAreaId planted_area = *t.broad_area_of(planted);
        gen.truth.category.push_back(planted);
        gen.truth.area.push_back(planted_area);

        // Original category set.
        originals.clear();
        double case_draw = rng.real();
        if (case_draw < cfg.multi_category_fraction) {
            originals.push_back(planted);
            const auto& pool = by_area[planted_area];
            uint64_t extra = 1 + rng.below(5);
            for (uint64_t e = 0; e < extra; ++e) {
                CategoryId pick = planted;
                for (int tries = 0; tries < 8 && pick == planted; ++tries) {
                    if (pool.size() >= 2 && rng.real() < 0.8)
                        pick = pool[rng.below(pool.size())];
                    else
                        pick = plantable[rng.below(plantable.size())];
                }
                if (pick != planted) originals.push_back(pick);
            }
            // The set must stay multi-category; fall back to the next
            // plantable when every draw collided with the planted one.
            if (originals.size() == 1)
                originals.push_back(plantable[(rank + 1) % plantable.size()]);
            ++gen.stats.multi_original;
        } else if (case_draw < cfg.multi_category_fraction + cfg.multidisciplinary_fraction) {
            CategoryId m = kNoCategory;
            bool prefer_general = general_multi != kNoCategory && rng.chance(0.5);
            if (!prefer_general && area_multi[planted_area] != kNoCategory)
                m = area_multi[planted_area];
            else if (general_multi != kNoCategory)
                m = general_multi;
            else if (area_multi[planted_area] != kNoCategory)
                m = area_multi[planted_area];
            else
                m = first_multi;
            originals.push_back(m);
            ++gen.stats.multidisciplinary_original;
        } else {
            originals.push_back(planted);
            ++gen.stats.unique_original;
        }

        // Document type, year, title.
        double dt_draw = rng.real();
        DocType dt = DocType::other;
        for (size_t k = 0; k < kDocTypeCount; ++k) {
            if (dt_draw < kDocTypeCum[k]) {
                dt = static_cast<DocType>(k);
                break;
            }
        }
        ++gen.stats.doc_type_counts[static_cast<size_t>(dt)];
        int32_t year = cfg.year_min +
                       static_cast<int32_t>(static_cast<double>(i) * year_span / std::max<double>(1, static_cast<double>(cfg.n_items)));
        ++gen.stats.items_by_year[year];

        title.clear();
        if (!rng.chance(cfg.titleless_fraction)) {
            for (int w = 0; w < 4; ++w) {
                std::snprintf(buf, sizeof buf, "topic%uw%02u", planted, static_cast<unsigned>(rng.below(cat_words)));
                title.emplace_back(buf);
            }
            for (int w = 0; w < 3; ++w) {
                std::snprintf(buf, sizeof buf, "common%02u", static_cast<unsigned>(rng.below(noise_words)));
                title.emplace_back(buf);
            }
        }

        std::snprintf(buf, sizeof buf, "IT%08llu", static_cast<unsigned long long>(i));
        ItemId id = builder.add_item(buf, dt, year, originals, title);

        // References: backward draws, in-category with within_category_prob.
        refs.clear();
        if (i > 0 && !rng.chance(cfg.refless_fraction)) {
            double want = cfg.refs_mean + cfg.refs_dispersion * rng.normal();
            int64_t r = static_cast<int64_t>(std::llround(want));
            r = std::clamp<int64_t>(r, 0, static_cast<int64_t>(std::min<uint64_t>(i, 1000)));
            const auto& own = members[planted];
            for (int64_t k = 0; k < r; ++k) {
                if (rng.chance(cfg.within_category_prob)) {
                    if (own.empty()) continue;  // no earlier item in the planted category
                    refs.push_back(own[rng.below(own.size())]);
                } else {
                    // uniform over earlier items outside the planted category
                    for (int tries = 0; tries < 32; ++tries) {
                        ItemId cand = static_cast<ItemId>(rng.below(i));
                        if (gen.truth.category[cand] != planted) {
                            refs.push_back(cand);
                            break;
                        }
                    }
                }
            }
        }
        std::sort(refs.begin(), refs.end());
        refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
        if (!refs.empty()) {
            ++gen.stats.items_with_refs;
            ++gen.stats.items_with_refs_by_year[year];
        }
        for (ItemId target : refs) builder.add_edge(id, target, gen.ingest);
        gen.ingest.edge_rows += refs.size();

        members[planted].push_back(id);
    }

    gen.ingest.item_rows = cfg.n_items;
    gen.ingest.items_kept = cfg.n_items;
    gen.corpus = builder.finish(gen.ingest);
    return gen;
}

// Fraction of classified items whose assigned label matches the planted one.
inline double score_against_truth(const ClassificationResult& result, const PlantedTruth& truth) {
    if (result.size() != truth.category.size())
        throw ValidationError("score_against_truth: result does not match truth");
    uint64_t classified = 0, correct = 0;
    for (ItemId i = 0; i < result.size(); ++i) {
        if (!result.classified(i)) continue;
        ++classified;
        Label want = result.level == Level::subject ? truth.category[i] : truth.area[i];
        if (result.labels[i] == want) ++correct;
    }
    if (classified == 0) return 0.0;
    return static_cast<double>(correct) / static_cast<double>(classified);
}

// Standard corpus files plus the planted-truth TSV.
inline void write_generated_files(const GeneratedCorpus& gen, const std::string& items_path,
                                  const std::string& refs_path, const std::string& taxonomy_path,
                                  const std::string& truth_path) {
    {
        detail::FileWriter w(taxonomy_path);
        w.write(gen.taxonomy.serialize());
        w.close();
    }
    {
        detail::FileWriter w(items_path);
        w.write("key\tdoc_type\tyear\tcategories\ttitle\n");
        const Corpus& c = gen.corpus;
        for (ItemId i = 0; i < c.size(); ++i) {
            w.write(c.key(i));
            w.write("\t");
            w.write(doc_type_name(c.doc_type(i)));
            w.write("\t");
            w.write_u64(static_cast<uint64_t>(c.year(i)));
            w.write("\t");
            bool first = true;
            for (CategoryId cat : c.original_categories(i)) {
                if (!first) w.write("|");
                w.write(gen.taxonomy.category_label(cat));
                first = false;
            }
            w.write("\t");
            first = true;
            for (uint32_t tok : c.title_tokens(i)) {
                if (!first) w.write(" ");
                w.write(c.token_text(tok));
                first = false;
            }
            w.write("\n");
        }
        w.close();
    }
    {
        detail::FileWriter w(refs_path);
        const Corpus& c = gen.corpus;
        for (ItemId i = 0; i < c.size(); ++i) {
            for (ItemId j : c.out_edges(i)) {
                w.write(c.key(i));
                w.write("\t");
                w.write(c.key(j));
                w.write("\n");
            }
        }
        w.close();
    }
    {
        detail::FileWriter w(truth_path);
        const Corpus& c = gen.corpus;
        for (ItemId i = 0; i < c.size(); ++i) {
            w.write(c.key(i));
            w.write("\t");
            w.write(gen.taxonomy.category_label(gen.truth.category[i]));
            w.write("\n");
        }
        w.close();
    }
}

}  // namespace refclass
