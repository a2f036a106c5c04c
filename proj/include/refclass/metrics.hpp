#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "refclass/common.hpp"
#include "refclass/corpus.hpp"
#include "refclass/engine.hpp"
#include "refclass/taxonomy.hpp"
#include "refclass/tsv.hpp"

namespace refclass {

// Internal agreement: over masked, classified items whose original
// classification is itself usable as a classifier label at this level
// (unique non-multidisciplinary category, or a single defined broad area),
// the fraction whose new label equals the original one.
inline double agreement_rate(const ClassificationResult& result, const Corpus& corpus,
                             const Taxonomy& t, const std::vector<bool>& mask) {
    if (result.size() != corpus.size() || mask.size() != corpus.size())
        throw ValidationError("agreement_rate: result/mask do not match corpus");
    auto originals = detail::initial_classifier_labels(corpus, t, result.level);
    uint64_t eligible = 0, agree = 0;
    for (ItemId i = 0; i < corpus.size(); ++i) {
        if (!mask[i] || originals[i] == kNoLabel || !result.classified(i)) continue;
        ++eligible;
        if (result.labels[i] == originals[i]) ++agree;
    }
    if (eligible == 0) throw ValidationError("agreement_rate: no eligible items");
    return static_cast<double>(agree) / static_cast<double>(eligible);
}

// Classified-item counts per label.
inline std::vector<uint64_t> category_sizes(const ClassificationResult& result) {
    size_t space = 0;
    for (Label l : result.labels)
        if (l != kNoLabel) space = std::max(space, static_cast<size_t>(l) + 1);
    std::vector<uint64_t> sizes(space, 0);
    for (Label l : result.labels)
        if (l != kNoLabel) ++sizes[l];
    return sizes;
}

// Scale measure of the classification: N / sum of squared category sizes.
inline double granularity(const ClassificationResult& result) {
    uint64_t n = result.classified_count();
    if (n == 0) throw ValidationError("granularity: no classified items");
    double sum_sq = 0.0;
    for (uint64_t s : category_sizes(result)) sum_sq += static_cast<double>(s) * static_cast<double>(s);
    return static_cast<double>(n) / sum_sq;
}

// Per publication year: classified items with references over items with
// references, among masked items. Years without such a denominator are
// absent from the map.
inline std::map<int32_t, double> coverage_by_year(const ClassificationResult& result,
                                                  const Corpus& corpus,
                                                  const std::vector<bool>& mask) {
    if (result.size() != corpus.size() || mask.size() != corpus.size())
        throw ValidationError("coverage_by_year: result/mask do not match corpus");
    std::map<int32_t, std::pair<uint64_t, uint64_t>> acc;  // year -> (with refs, classified with refs)
    for (ItemId i = 0; i < corpus.size(); ++i) {
        if (!mask[i] || corpus.out_edges(i).empty()) continue;
        auto& [denom, num] = acc[corpus.year(i)];
        ++denom;
        if (result.classified(i)) ++num;
    }
    std::map<int32_t, double> out;
    for (const auto& [year, counts] : acc)
        out[year] = static_cast<double>(counts.second) / static_cast<double>(counts.first);
    return out;
}

struct TieStats {
    double tie_rate = 0.0;                    // non-majority over all engine assignments
    double tie_broken_by_original_rate = 0.0; // resolved by step 1, over all ties
    bool has_ties = false;
    uint64_t assignments = 0;
    uint64_t ties = 0;
    uint64_t broken_by_original = 0;
    uint64_t broken_by_size = 0;
    uint64_t broken_lexicographic = 0;
};

// Provenance tallies over engine assignments; tfidf fallback rows are not
// part of the tie accounting.
inline TieStats tie_stats(const ClassificationResult& result) {
    TieStats s;
    for (ItemId i = 0; i < result.size(); ++i) {
        if (!result.classified(i)) continue;
        switch (result.provenances[i]) {
            case Provenance::majority:
                ++s.assignments;
                break;
            case Provenance::tie_broken_by_original:
                ++s.assignments;
                ++s.ties;
                ++s.broken_by_original;
                break;
            case Provenance::tie_broken_by_size:
                ++s.assignments;
                ++s.ties;
                ++s.broken_by_size;
                break;
            case Provenance::tie_broken_lexicographic:
                ++s.assignments;
                ++s.ties;
                ++s.broken_lexicographic;
                break;
            case Provenance::tfidf:
                break;
        }
    }
    s.has_ties = s.ties > 0;
    if (s.assignments > 0) s.tie_rate = static_cast<double>(s.ties) / static_cast<double>(s.assignments);
    if (s.ties > 0)
        s.tie_broken_by_original_rate =
            static_cast<double>(s.broken_by_original) / static_cast<double>(s.ties);
    return s;
}

// Counts mirroring the usual dataset accounting: totals, reference coverage,
// and the multidisciplinary slices, for the whole corpus and the mask.
struct DatasetCounts {
    uint64_t items = 0;
    uint64_t with_references = 0;
    uint64_t any_multidisciplinary = 0;  // original set contains a multidisciplinary category
    uint64_t no_area_category = 0;       // original set contains a category without a broad area
    uint64_t classifier_items = 0;
    uint64_t classified = 0;
    uint64_t classified_with_references = 0;
    uint64_t classified_any_multidisciplinary = 0;
    uint64_t classified_no_area_category = 0;
};

inline DatasetCounts dataset_counts(const ClassificationResult& result, const Corpus& corpus,
                                    const Taxonomy& t, const std::vector<bool>& mask) {
    auto classifier = detail::initial_classifier_labels(corpus, t, result.level);
    DatasetCounts c;
    for (ItemId i = 0; i < corpus.size(); ++i) {
        if (!mask[i]) continue;
        ++c.items;
        bool refs = !corpus.out_edges(i).empty();
        if (refs) ++c.with_references;
        bool multi = false, no_area = false;
        for (CategoryId cat : corpus.original_categories(i)) {
            if (t.multidisciplinary(cat)) multi = true;
            if (!t.broad_area_of(cat)) no_area = true;
        }
        if (multi) ++c.any_multidisciplinary;
        if (no_area) ++c.no_area_category;
        if (classifier[i] != kNoLabel) ++c.classifier_items;
        if (result.classified(i)) {
            ++c.classified;
            if (refs) ++c.classified_with_references;
            if (multi) ++c.classified_any_multidisciplinary;
            if (no_area) ++c.classified_no_area_category;
        }
    }
    return c;
}

struct MetricsReport {
    Level level = Level::subject;
    std::optional<double> agreement;  // absent when no item is eligible
    std::optional<double> granularity_value;
    std::map<int32_t, double> coverage;
    TieStats ties;
    std::vector<std::pair<std::string, uint64_t>> sizes;  // label text -> classified count
    DatasetCounts all_items;
    DatasetCounts masked_items;
    std::vector<PassSummary> pass_summaries;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["level"] = level_name(level);
        j["agreement_rate"] = agreement ? nlohmann::ordered_json(*agreement) : nlohmann::ordered_json(nullptr);
        j["granularity"] =
            granularity_value ? nlohmann::ordered_json(*granularity_value) : nlohmann::ordered_json(nullptr);
        nlohmann::ordered_json cov = nlohmann::ordered_json::object();
        for (const auto& [year, f] : coverage) cov[std::to_string(year)] = f;
        j["coverage_by_year"] = cov;
        j["tie_stats"] = {{"tie_rate", ties.tie_rate},
                          {"tie_broken_by_original_rate", ties.tie_broken_by_original_rate},
                          {"has_ties", ties.has_ties},
                          {"assignments", ties.assignments},
                          {"ties", ties.ties},
                          {"broken_by_original", ties.broken_by_original},
                          {"broken_by_size", ties.broken_by_size},
                          {"broken_lexicographic", ties.broken_lexicographic}};
        auto counts_json = [](const DatasetCounts& c) {
            return nlohmann::ordered_json{{"items", c.items},
                                          {"with_references", c.with_references},
                                          {"any_multidisciplinary", c.any_multidisciplinary},
                                          {"no_area_category", c.no_area_category},
                                          {"classifier_items", c.classifier_items},
                                          {"classified", c.classified},
                                          {"classified_with_references", c.classified_with_references},
                                          {"classified_any_multidisciplinary", c.classified_any_multidisciplinary},
                                          {"classified_no_area_category", c.classified_no_area_category}};
        };
        j["counts"] = {{"all_items", counts_json(all_items)}, {"masked_items", counts_json(masked_items)}};
        nlohmann::ordered_json passes = nlohmann::ordered_json::array();
        for (const PassSummary& p : pass_summaries)
            passes.push_back({{"pass", p.pass},
                              {"classifier_items", p.classifier_items},
                              {"classified_items", p.classified_items}});
        j["passes"] = passes;
        nlohmann::ordered_json sz = nlohmann::ordered_json::array();
        for (const auto& [label, count] : sizes) sz.push_back({{"label", label}, {"count", count}});
        j["category_sizes"] = sz;
        return j;
    }
};

inline MetricsReport build_metrics_report(const ClassificationResult& result, const Corpus& corpus,
                                          const Taxonomy& t, const std::vector<bool>& mask) {
    MetricsReport r;
    r.level = result.level;
    try {
        r.agreement = agreement_rate(result, corpus, t, mask);
    } catch (const ValidationError&) {
        r.agreement.reset();
    }
    if (result.classified_count() > 0) r.granularity_value = granularity(result);
    r.coverage = coverage_by_year(result, corpus, mask);
    r.ties = tie_stats(result);
    auto sizes = category_sizes(result);
    for (Label l = 0; l < sizes.size(); ++l)
        if (sizes[l] > 0) r.sizes.emplace_back(detail::label_text(t, result.level, l), sizes[l]);
    std::sort(r.sizes.begin(), r.sizes.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    r.all_items = dataset_counts(result, corpus, t, std::vector<bool>(corpus.size(), true));
    r.masked_items = dataset_counts(result, corpus, t, mask);
    r.pass_summaries = result.pass_summaries;
    return r;
}

// Category-size TSV for plotting: label, classified-item count, descending.
inline void write_category_sizes(const std::string& path, const MetricsReport& report) {
    detail::FileWriter w(path);
    w.write("label\tclassified_items\n");
    for (const auto& [label, count] : report.sizes) {
        w.write(label);
        w.write("\t");
        w.write_u64(count);
        w.write("\n");
    }
    w.close();
}

// Blinded evaluation sample: items whose original classification is eligible
// at the result's level and which received a new label. Each row shows the
// original and new labels in an order reversed in half the cases; the key
// file records which side is the original. Deterministic in the seed.
inline void export_sample(const ClassificationResult& result, const Corpus& corpus,
                          const Taxonomy& t, uint64_t n, uint64_t seed,
                          const std::string& sample_path, const std::string& key_path) {
    auto originals = detail::initial_classifier_labels(corpus, t, result.level);
    std::vector<ItemId> eligible;
    for (ItemId i : corpus.key_order())
        if (originals[i] != kNoLabel && result.classified(i)) eligible.push_back(i);
    if (n > eligible.size())
        throw ValidationError("export_sample: requested " + std::to_string(n) + " rows but only " +
                              std::to_string(eligible.size()) + " items are eligible");

    Rng rng(seed);
    // Partial Fisher-Yates over the key-ordered eligible list.
    for (uint64_t k = 0; k < n; ++k) {
        uint64_t j = k + rng.below(eligible.size() - k);
        std::swap(eligible[k], eligible[j]);
    }

    detail::FileWriter sample(sample_path);
    detail::FileWriter key(key_path);
    sample.write("key\tcategory_a\tcategory_b\n");
    key.write("key\toriginal_is\n");
    for (uint64_t k = 0; k < n; ++k) {
        ItemId i = eligible[k];
        const std::string& orig = detail::label_text(t, result.level, originals[i]);
        const std::string& fresh = detail::label_text(t, result.level, result.labels[i]);
        bool reversed = rng.chance(0.5);
        sample.write(corpus.key(i));
        sample.write("\t");
        sample.write(reversed ? fresh : orig);
        sample.write("\t");
        sample.write(reversed ? orig : fresh);
        sample.write("\n");
        key.write(corpus.key(i));
        key.write("\t");
        key.write(reversed ? "b" : "a");
        key.write("\n");
    }
    sample.close();
    key.close();
}

}  // namespace refclass
