#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "refclass/corpus.hpp"
#include "refclass/taxonomy.hpp"

namespace refclass {

// Classification granularity. The label space is CategoryId at subject level
// and BroadAreaId at broad level; both fit the same dense handle type.
enum class Level : uint8_t { subject = 0, broad = 1 };
using Label = uint16_t;
inline constexpr Label kNoLabel = 0xFFFF;

inline const char* level_name(Level l) { return l == Level::subject ? "subject" : "broad"; }

inline std::optional<Level> parse_level(std::string_view s) {
    if (s == "subject") return Level::subject;
    if (s == "broad") return Level::broad;
    return std::nullopt;
}

enum class Mode : uint8_t { references = 0, references_and_citations = 1 };

// Population behind the final "bigger class wins" tie-break: either every
// classifier-reference occurrence in the pass, or distinct eligible
// classifier items.
enum class SizeMetric : uint8_t { occurrences = 0, distinct_items = 1 };

enum class Provenance : uint8_t {
    majority = 0,
    tie_broken_by_original,
    tie_broken_by_size,
    tie_broken_lexicographic,
    tfidf,
};

inline const char* provenance_name(Provenance p) {
    static constexpr std::array<const char*, 5> names = {
        "majority", "tie_broken_by_original", "tie_broken_by_size", "tie_broken_lexicographic",
        "tfidf"};
    return names[static_cast<size_t>(p)];
}

inline std::optional<Provenance> parse_provenance(std::string_view s) {
    for (size_t i = 0; i < 5; ++i)
        if (s == provenance_name(static_cast<Provenance>(i))) return static_cast<Provenance>(i);
    return std::nullopt;
}

enum class UnclassifiedReason : uint8_t { classified = 0, no_references, no_classifier_references };

// Per-item tally of classifier labels. Entries are sorted by label, counts
// strictly positive; the total equals the number of contributing neighbors
// plus tie-break additions once applied.
struct CategoryDistribution {
    std::vector<std::pair<Label, uint32_t>> counts;

    uint32_t count_of(Label l) const {
        auto it = std::lower_bound(counts.begin(), counts.end(), l,
                                   [](const auto& e, Label v) { return e.first < v; });
        return (it != counts.end() && it->first == l) ? it->second : 0;
    }
    uint64_t total() const {
        uint64_t s = 0;
        for (const auto& [l, c] : counts) s += c;
        return s;
    }
    bool empty() const { return counts.empty(); }
};

// Pass-wide tally per label, frozen before any decision runs.
struct GlobalClassCounts {
    std::vector<uint64_t> counts;  // dense by label
    SizeMetric metric = SizeMetric::occurrences;

    uint64_t count_of(Label l) const { return l < counts.size() ? counts[l] : 0; }
    uint64_t total() const {
        uint64_t s = 0;
        for (uint64_t c : counts) s += c;
        return s;
    }
};

struct Assignment {
    Label label = kNoLabel;
    Provenance provenance = Provenance::majority;
    uint8_t pass = 1;  // first pass at which the item became classified
};

struct PassSummary {
    uint32_t pass = 1;
    uint64_t classifier_items = 0;  // items eligible to label their neighbors
    uint64_t classified_items = 0;
};

// Per-item outcome of a pass (or of a whole pipeline run). Assignments and
// unclassified reasons partition the corpus exactly.
class ClassificationResult {
public:
    Level level = Level::subject;
    std::vector<Label> labels;               // kNoLabel when unclassified
    std::vector<Provenance> provenances;     // valid where classified
    std::vector<uint8_t> first_pass;         // valid where classified
    std::vector<UnclassifiedReason> reasons;
    std::vector<std::vector<std::pair<Label, uint32_t>>> distributions;  // empty unless retained
    GlobalClassCounts global;                // final pass counts
    std::vector<PassSummary> pass_summaries;

    size_t size() const { return labels.size(); }
    bool classified(ItemId i) const { return labels[i] != kNoLabel; }
    std::optional<Assignment> assignment(ItemId i) const {
        if (!classified(i)) return std::nullopt;
        return Assignment{labels[i], provenances[i], first_pass[i]};
    }
    uint64_t classified_count() const {
        return static_cast<uint64_t>(
            std::count_if(labels.begin(), labels.end(), [](Label l) { return l != kNoLabel; }));
    }
    bool distributions_retained() const { return !distributions.empty(); }
};

// An item can label its neighbors at subject level iff its original
// classification is a single non-multidisciplinary category.
inline std::optional<CategoryId> classifier_label_subject(std::span<const CategoryId> originals,
                                                          const Taxonomy& t) {
    if (originals.size() != 1) return std::nullopt;
    if (t.multidisciplinary(originals[0])) return std::nullopt;
    return originals[0];
}

inline std::optional<CategoryId> classifier_label_subject(const Corpus& c, ItemId i, const Taxonomy& t) {
    return classifier_label_subject(c.original_categories(i), t);
}

// At broad level multidisciplinary categories are usable as long as every
// original category maps to the same defined broad area.
inline std::optional<BroadAreaId> classifier_label_broad(std::span<const CategoryId> originals,
                                                         const Taxonomy& t) {
    if (originals.empty()) return std::nullopt;
    std::optional<BroadAreaId> area;
    for (CategoryId c : originals) {
        auto a = t.broad_area_of(c);
        if (!a) return std::nullopt;
        if (area && *area != *a) return std::nullopt;
        area = a;
    }
    return area;
}

inline std::optional<BroadAreaId> classifier_label_broad(const Corpus& c, ItemId i, const Taxonomy& t) {
    return classifier_label_broad(c.original_categories(i), t);
}

namespace detail {

// kNoLabel-sentinel form of the classifier rules for the hot path.
inline std::vector<Label> initial_classifier_labels(const Corpus& c, const Taxonomy& t, Level level) {
    std::vector<Label> out(c.size(), kNoLabel);
    for (ItemId i = 0; i < c.size(); ++i) {
        if (level == Level::subject) {
            if (auto l = classifier_label_subject(c, i, t)) out[i] = *l;
        } else {
            if (auto l = classifier_label_broad(c, i, t)) out[i] = *l;
        }
    }
    return out;
}

// Eligible tie-break additions from a set of original categories:
// non-multidisciplinary categories at subject level, categories with a
// defined broad area (mapped) at broad level. One addition per category.
inline void eligible_original_labels(std::span<const CategoryId> originals, const Taxonomy& t,
                                     Level level, std::vector<Label>& out) {
    out.clear();
    for (CategoryId c : originals) {
        if (level == Level::subject) {
            if (!t.multidisciplinary(c)) out.push_back(c);
        } else {
            if (auto a = t.broad_area_of(c)) out.push_back(*a);
        }
    }
}

inline const std::string& label_text(const Taxonomy& t, Level level, Label l) {
    return level == Level::subject ? t.category_label(l) : t.area_label(l);
}

// Reusable per-thread tally scratch plus the decision ladder. The counts
// array is label-space sized and reset via the touched list.
class Decider {
public:
    Decider(const Taxonomy& t, Level level, size_t label_space)
        : taxonomy_(t), level_(level), counts_(label_space, 0) {}

    void reset() {
        for (Label l : touched_) counts_[l] = 0;
        touched_.clear();
    }

    void add(Label l, uint32_t n = 1) {
        if (counts_[l] == 0) touched_.push_back(l);
        counts_[l] += n;
    }

    bool empty() const { return touched_.empty(); }

    // Decision ladder over the current tally: strict majority; then the
    // tie-break additions joined to the tally and the maximum redetermined;
    // then the larger global class among the still-tied labels; then the
    // lexicographically smallest label. Tally must be nonempty.
    std::pair<Label, Provenance> decide(std::span<const Label> tie_break_additions,
                                        const GlobalClassCounts& global) {
        if (touched_.empty()) throw InternalError("decide: empty distribution");
        collect_max();
        if (max_set_.size() == 1) return {max_set_[0], Provenance::majority};

        if (!tie_break_additions.empty()) {
            for (Label l : tie_break_additions) add(l);
            collect_max();
            if (max_set_.size() == 1) return {max_set_[0], Provenance::tie_broken_by_original};
        }

        uint64_t best_global = 0;
        size_t n_best = 0;
        Label pick = kNoLabel;
        for (Label l : max_set_) {
            uint64_t g = global.count_of(l);
            if (n_best == 0 || g > best_global) {
                best_global = g;
                n_best = 1;
                pick = l;
            } else if (g == best_global) {
                ++n_best;
                if (label_text(taxonomy_, level_, l) < label_text(taxonomy_, level_, pick)) pick = l;
            }
        }
        return {pick, n_best == 1 ? Provenance::tie_broken_by_size : Provenance::tie_broken_lexicographic};
    }

    // Tally snapshot, sorted by label.
    std::vector<std::pair<Label, uint32_t>> snapshot() const {
        std::vector<std::pair<Label, uint32_t>> out;
        out.reserve(touched_.size());
        for (Label l : touched_) out.emplace_back(l, counts_[l]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void collect_max() {
        uint32_t best = 0;
        for (Label l : touched_) best = std::max(best, counts_[l]);
        max_set_.clear();
        for (Label l : touched_)
            if (counts_[l] == best) max_set_.push_back(l);
    }

    const Taxonomy& taxonomy_;
    Level level_;
    std::vector<uint32_t> counts_;
    std::vector<Label> touched_;
    std::vector<Label> max_set_;
};

inline size_t label_space(const Taxonomy& t, Level level) {
    return level == Level::subject ? t.category_count() : t.area_count();
}

inline unsigned resolve_threads(unsigned requested, size_t n) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned t = requested ? requested : (hw ? hw : 1);
    return static_cast<unsigned>(std::min<size_t>(t, std::max<size_t>(n, 1)));
}

template <typename Fn>
inline void parallel_ranges(size_t n, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads, n);
    if (threads <= 1) {
        fn(0u, size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    size_t chunk = (n + threads - 1) / threads;
    for (unsigned ti = 0; ti < threads; ++ti) {
        size_t begin = std::min(n, ti * chunk);
        size_t end = std::min(n, begin + chunk);
        pool.emplace_back([&fn, ti, begin, end] { fn(ti, begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace detail

struct PassOptions {
    Mode mode = Mode::references;
    SizeMetric size_metric = SizeMetric::occurrences;
    // Distribution retention: nullopt means automatic (on below 1M items).
    std::optional<bool> retain_distributions;
    unsigned threads = 0;  // 0 = hardware concurrency
    // When true, tie-break step 1 of an iterative pass adds the item's
    // previous-pass label instead of its original categories.
    bool iter_tie_break_uses_previous = false;
};

namespace detail {

inline bool retain_distributions(const PassOptions& opt, const Corpus& c) {
    return opt.retain_distributions.value_or(c.size() < 1'000'000);
}

// One pass of the tally-and-decide procedure over frozen neighbor labels.
// Two strictly sequential phases: (1) accumulate GlobalClassCounts over the
// whole corpus, (2) tally and decide per item. Per-item work within a phase
// is independent and order-free, so any thread count produces identical
// output.
inline ClassificationResult run_pass(const Corpus& corpus, const Taxonomy& t, Level level,
                                     const std::vector<Label>& neighbor_labels,
                                     const ClassificationResult* prev, uint32_t pass_number,
                                     const PassOptions& opt) {
    const size_t n = corpus.size();
    const size_t space = label_space(t, level);
    const bool use_citations = opt.mode == Mode::references_and_citations;
    const bool retain = retain_distributions(opt, corpus);
    const bool tie_break_previous = opt.iter_tie_break_uses_previous && prev != nullptr;

    ClassificationResult result;
    result.level = level;
    result.labels.assign(n, kNoLabel);
    result.provenances.assign(n, Provenance::majority);
    result.first_pass.assign(n, 0);
    result.reasons.assign(n, UnclassifiedReason::no_references);
    if (retain) result.distributions.resize(n);
    result.global.metric = opt.size_metric;
    result.global.counts.assign(space, 0);

    // Phase 1: global class counts, frozen before any decision.
    if (opt.size_metric == SizeMetric::occurrences) {
        unsigned nt = resolve_threads(opt.threads, n);
        std::vector<std::vector<uint64_t>> partials(nt, std::vector<uint64_t>(space, 0));
        detail::parallel_ranges(n, nt, [&](unsigned ti, size_t begin, size_t end) {
            std::vector<uint64_t>& local = partials[ti];
            for (size_t i = begin; i < end; ++i) {
                for (ItemId j : corpus.out_edges(static_cast<ItemId>(i))) {
                    Label l = neighbor_labels[j];
                    if (l != kNoLabel) ++local[l];
                }
                if (use_citations) {
                    for (ItemId j : corpus.in_edges(static_cast<ItemId>(i))) {
                        Label l = neighbor_labels[j];
                        if (l != kNoLabel) ++local[l];
                    }
                }
            }
        });
        for (const auto& local : partials)
            for (size_t l = 0; l < space; ++l) result.global.counts[l] += local[l];
    } else {
        for (size_t j = 0; j < n; ++j)
            if (neighbor_labels[j] != kNoLabel) ++result.global.counts[neighbor_labels[j]];
    }

    // Phase 2: tally and decide per item against the frozen global counts.
    detail::parallel_ranges(n, opt.threads, [&](unsigned, size_t begin, size_t end) {
        Decider decider(t, level, space);
        std::vector<Label> additions;
        for (size_t i = begin; i < end; ++i) {
            ItemId item = static_cast<ItemId>(i);
            decider.reset();
            size_t neighbors = corpus.out_edges(item).size();
            for (ItemId j : corpus.out_edges(item)) {
                Label l = neighbor_labels[j];
                if (l != kNoLabel) decider.add(l);
            }
            if (use_citations) {
                neighbors += corpus.in_edges(item).size();
                for (ItemId j : corpus.in_edges(item)) {
                    Label l = neighbor_labels[j];
                    if (l != kNoLabel) decider.add(l);
                }
            }
            if (decider.empty()) {
                result.reasons[i] = neighbors == 0 ? UnclassifiedReason::no_references
                                                   : UnclassifiedReason::no_classifier_references;
                continue;
            }
            if (tie_break_previous && prev->classified(item)) {
                additions.assign(1, prev->labels[item]);
            } else {
                eligible_original_labels(corpus.original_categories(item), t, level, additions);
            }
            auto [label, prov] = decider.decide(additions, result.global);
            result.labels[i] = label;
            result.provenances[i] = prov;
            result.reasons[i] = UnclassifiedReason::classified;
            result.first_pass[i] = static_cast<uint8_t>(
                prev && prev->classified(item) ? prev->first_pass[item] : pass_number);
            if (retain) result.distributions[i] = decider.snapshot();
        }
    });

    PassSummary summary;
    summary.pass = pass_number;
    summary.classifier_items = static_cast<uint64_t>(std::count_if(
        neighbor_labels.begin(), neighbor_labels.end(), [](Label l) { return l != kNoLabel; }));
    summary.classified_items = result.classified_count();
    if (prev) result.pass_summaries = prev->pass_summaries;
    result.pass_summaries.push_back(summary);
    return result;
}

}  // namespace detail

// Tally of labeled neighbors for one item: references always contribute, and
// in citation mode the citing items contribute with the same weight.
inline CategoryDistribution tally(const Corpus& corpus, ItemId item,
                                  const std::function<std::optional<Label>(ItemId)>& labeler,
                                  Mode mode) {
    std::vector<std::pair<Label, uint32_t>> acc;
    auto add = [&](ItemId j) {
        if (auto l = labeler(j)) {
            auto it = std::lower_bound(acc.begin(), acc.end(), *l,
                                       [](const auto& e, Label v) { return e.first < v; });
            if (it != acc.end() && it->first == *l)
                ++it->second;
            else
                acc.insert(it, {*l, 1});
        }
    };
    for (ItemId j : corpus.out_edges(item)) add(j);
    if (mode == Mode::references_and_citations)
        for (ItemId j : corpus.in_edges(item)) add(j);
    return CategoryDistribution{std::move(acc)};
}

// The decision ladder on an explicit distribution. item_originals are the
// item's own original categories; only the eligible ones enter tie-break
// step 1. Errors on an empty distribution; callers mark such items
// unclassified instead.
inline std::pair<Label, Provenance> decide(const CategoryDistribution& dist,
                                           std::span<const CategoryId> item_originals,
                                           const GlobalClassCounts& global, const Taxonomy& t,
                                           Level level) {
    if (dist.empty()) throw InternalError("decide: empty distribution");
    detail::Decider decider(t, level, detail::label_space(t, level));
    for (const auto& [l, c] : dist.counts) decider.add(l, c);
    std::vector<Label> additions;
    detail::eligible_original_labels(item_originals, t, level, additions);
    return decider.decide(additions, global);
}

// Initial pass: neighbors label through the classifier rule for the level.
inline ClassificationResult classify_pass(const Corpus& corpus, const Taxonomy& t, Level level,
                                          const PassOptions& opt = {}) {
    auto labels = detail::initial_classifier_labels(corpus, t, level);
    return detail::run_pass(corpus, t, level, labels, nullptr, 1, opt);
}

// Iterative pass: a neighbor labels through its previous-pass assignment when
// it has one (unique and non-multidisciplinary by construction), else through
// the initial classifier rule. Every neighbor usable in the previous pass
// stays usable, so the classified set never shrinks.
inline ClassificationResult iterate(const Corpus& corpus, const Taxonomy& t, Level level,
                                    const ClassificationResult& prev, const PassOptions& opt = {}) {
    if (prev.level != level) throw ValidationError("iterate: level mismatch with previous result");
    if (prev.size() != corpus.size()) throw ValidationError("iterate: result does not match corpus");
    auto labels = detail::initial_classifier_labels(corpus, t, level);
    for (ItemId i = 0; i < corpus.size(); ++i)
        if (prev.classified(i)) labels[i] = prev.labels[i];
    uint32_t pass_number = prev.pass_summaries.empty() ? 2 : prev.pass_summaries.back().pass + 1;
    return detail::run_pass(corpus, t, level, labels, &prev, pass_number, opt);
}

// Full pipeline: one initial pass plus passes-1 iterations.
struct PipelineConfig {
    Level level = Level::subject;
    uint32_t passes = 1;
    PassOptions pass;
};

inline ClassificationResult run_pipeline(const Corpus& corpus, const Taxonomy& t,
                                         const PipelineConfig& config) {
    if (config.passes < 1) throw ValidationError("passes must be >= 1");
    if (config.passes > 255) throw ValidationError("passes must be <= 255");
    ClassificationResult result = classify_pass(corpus, t, config.level, config.pass);
    for (uint32_t p = 2; p <= config.passes; ++p)
        result = iterate(corpus, t, config.level, result, config.pass);
    return result;
}

}  // namespace refclass
