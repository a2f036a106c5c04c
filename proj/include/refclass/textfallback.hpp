#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "refclass/corpus.hpp"
#include "refclass/engine.hpp"
#include "refclass/taxonomy.hpp"

namespace refclass {

// Inverse title-word frequencies over the whole corpus. A word's weight is
// ln(titled_items / document_frequency); ubiquitous words weigh zero.
class Vocabulary {
public:
    static Vocabulary build(const Corpus& corpus) {
        if (corpus.titled_item_count() == 0)
            throw ValidationError("vocabulary: corpus has no titled items");
        Vocabulary v;
        v.df_.assign(corpus.token_count(), 0);
        for (ItemId i = 0; i < corpus.size(); ++i)
            for (uint32_t tok : corpus.title_tokens(i)) ++v.df_[tok];
        v.idf_.resize(v.df_.size());
        const double n = static_cast<double>(corpus.titled_item_count());
        for (size_t w = 0; w < v.df_.size(); ++w)
            v.idf_[w] = v.df_[w] ? std::log(n / static_cast<double>(v.df_[w])) : 0.0;
        v.titled_items_ = corpus.titled_item_count();
        return v;
    }

    size_t word_count() const { return idf_.size(); }
    uint64_t titled_items() const { return titled_items_; }
    uint32_t df(uint32_t token) const { return token < df_.size() ? df_[token] : 0; }
    double idf(uint32_t token) const { return token < idf_.size() ? idf_[token] : 0.0; }

    // Lookup by word text; absent for words appearing in no title.
    std::optional<double> idf_of(const Corpus& corpus, std::string_view word) const {
        auto tok = corpus.find_token(word);
        if (!tok || df(*tok) == 0) return std::nullopt;
        return idf(*tok);
    }

private:
    std::vector<uint32_t> df_;
    std::vector<double> idf_;
    uint64_t titled_items_ = 0;
};

// Sum of IDFs over the shared words of two token sets (sorted unique ids).
// Accumulated in ascending token order so independent implementations can
// reproduce the value bit for bit.
inline double tfidf_similarity(std::span<const uint32_t> a, std::span<const uint32_t> b,
                               const Vocabulary& v) {
    double sum = 0.0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            sum += v.idf(a[i]);
            ++i;
            ++j;
        }
    }
    return sum;
}

// Inverted index over the titles of classifier items at one level. Postings
// are in ascending item id; words that carry no weight are not indexed.
class TitleIndex {
public:
    static TitleIndex build(const Corpus& corpus, const Taxonomy& t, Level level,
                            const Vocabulary& v) {
        TitleIndex idx;
        idx.level_ = level;
        idx.classifier_labels_ = detail::initial_classifier_labels(corpus, t, level);
        std::vector<uint64_t> counts(corpus.token_count() + 1, 0);
        for (ItemId i = 0; i < corpus.size(); ++i) {
            if (idx.classifier_labels_[i] == kNoLabel) continue;
            for (uint32_t tok : corpus.title_tokens(i))
                if (v.idf(tok) > 0.0) ++counts[tok + 1];
        }
        for (size_t w = 1; w < counts.size(); ++w) counts[w] += counts[w - 1];
        idx.offsets_ = counts;
        idx.postings_.resize(counts.back());
        std::vector<uint64_t> fill(counts.begin(), counts.end() - 1);
        for (ItemId i = 0; i < corpus.size(); ++i) {
            if (idx.classifier_labels_[i] == kNoLabel) continue;
            for (uint32_t tok : corpus.title_tokens(i))
                if (v.idf(tok) > 0.0) idx.postings_[fill[tok]++] = i;
        }
        return idx;
    }

    Level level() const { return level_; }
    Label classifier_label(ItemId i) const { return classifier_labels_[i]; }

    std::span<const ItemId> postings(uint32_t token) const {
        if (token + 1 >= offsets_.size()) return {};
        return {postings_.data() + offsets_[token], offsets_[token + 1] - offsets_[token]};
    }

private:
    Level level_ = Level::subject;
    std::vector<Label> classifier_labels_;
    std::vector<uint64_t> offsets_;
    std::vector<ItemId> postings_;
};

// Adopt the label of the classifier whose title shares the largest summed IDF
// with the item's. The item itself never competes. Equal-similarity ties with
// different labels break toward the larger global class, then the
// lexicographically smallest label, mirroring the engine ladder. No overlap
// on weighted words means no evidence and no assignment.
inline std::optional<Assignment> classify_by_title(const Corpus& corpus, ItemId item,
                                                   const TitleIndex& index, const Vocabulary& v,
                                                   const GlobalClassCounts& global,
                                                   const Taxonomy& t) {
    auto tokens = corpus.title_tokens(item);
    if (tokens.empty()) return std::nullopt;

    // Walk the item's words in ascending text order so every candidate's
    // score accumulates in one canonical order; independent implementations
    // then reproduce the sums bit for bit.
    std::vector<uint32_t> ordered(tokens.begin(), tokens.end());
    std::sort(ordered.begin(), ordered.end(), [&corpus](uint32_t a, uint32_t b) {
        return corpus.token_text(a) < corpus.token_text(b);
    });
    std::unordered_map<ItemId, double> scores;
    for (uint32_t tok : ordered) {
        double w = v.idf(tok);
        if (w <= 0.0) continue;
        for (ItemId cand : index.postings(tok)) {
            if (cand == item) continue;
            scores[cand] += w;
        }
    }
    if (scores.empty()) return std::nullopt;

    double best = 0.0;
    for (const auto& [cand, s] : scores) best = std::max(best, s);
    if (best <= 0.0) return std::nullopt;

    Label pick = kNoLabel;
    uint64_t pick_global = 0;
    for (const auto& [cand, s] : scores) {
        if (s != best) continue;
        Label l = index.classifier_label(cand);
        if (pick == kNoLabel) {
            pick = l;
            pick_global = global.count_of(l);
            continue;
        }
        if (l == pick) continue;
        uint64_t g = global.count_of(l);
        if (g > pick_global) {
            pick = l;
            pick_global = g;
        } else if (g == pick_global &&
                   detail::label_text(t, index.level(), l) < detail::label_text(t, index.level(), pick)) {
            pick = l;
        }
    }
    return Assignment{pick, Provenance::tfidf, 0};
}

}  // namespace refclass
