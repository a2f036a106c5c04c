#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "refclass/common.hpp"
#include "refclass/taxonomy.hpp"
#include "refclass/tsv.hpp"

namespace refclass {

// Dense item handle; the external string key lives in the corpus tables.
using ItemId = uint32_t;
inline constexpr ItemId kNoItem = 0xFFFFFFFF;

enum class DocType : uint8_t { article = 0, proceedings_paper, review, editorial, letter, other };
inline constexpr size_t kDocTypeCount = 6;

inline const char* doc_type_name(DocType t) {
    static constexpr std::array<const char*, kDocTypeCount> names = {
        "article", "proceedings_paper", "review", "editorial", "letter", "other"};
    return names[static_cast<size_t>(t)];
}

inline std::optional<DocType> parse_doc_type(std::string_view s) {
    for (size_t i = 0; i < kDocTypeCount; ++i)
        if (s == doc_type_name(static_cast<DocType>(i))) return static_cast<DocType>(i);
    return std::nullopt;
}

// Title tokenization: lowercase, split on non-alphanumeric runs, drop tokens
// shorter than 2 chars and pure numbers.
inline std::vector<std::string> tokenize_title(std::string_view title) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (cur.size() >= 2) {
            bool all_digits = std::all_of(cur.begin(), cur.end(),
                                          [](char c) { return c >= '0' && c <= '9'; });
            if (!all_digits) out.push_back(cur);
        }
        cur.clear();
    };
    for (char ch : title) {
        unsigned char u = static_cast<unsigned char>(ch);
        if (std::isalnum(u)) {
            cur.push_back(static_cast<char>(std::tolower(u)));
        } else {
            flush();
        }
    }
    flush();
    return out;
}

struct IngestOptions {
    bool strict = false;  // unknown category label aborts instead of rejecting the row
    int32_t year_min = 1800;
    int32_t year_max = 2100;
};

struct IngestReport {
    uint64_t item_rows = 0;
    uint64_t items_kept = 0;
    uint64_t rejected_unknown_category = 0;
    uint64_t rejected_bad_year = 0;
    uint64_t rejected_too_many_categories = 0;
    uint64_t rejected_malformed = 0;
    uint64_t unknown_doc_type_as_other = 0;

    uint64_t edge_rows = 0;
    uint64_t edges_kept = 0;
    uint64_t dangling_dropped = 0;
    uint64_t self_citations_dropped = 0;
    uint64_t duplicate_edges_dropped = 0;
    uint64_t malformed_edge_rows = 0;

    std::vector<std::string> notes;  // first few rejected rows, with line numbers

    void note(const std::string& msg) {
        if (notes.size() < 50) notes.push_back(msg);
    }

    nlohmann::ordered_json to_json() const {
        return nlohmann::ordered_json{
            {"items",
             {{"rows", item_rows},
              {"kept", items_kept},
              {"rejected_unknown_category", rejected_unknown_category},
              {"rejected_bad_year", rejected_bad_year},
              {"rejected_too_many_categories", rejected_too_many_categories},
              {"rejected_malformed", rejected_malformed},
              {"unknown_doc_type_as_other", unknown_doc_type_as_other}}},
            {"references",
             {{"rows", edge_rows},
              {"kept", edges_kept},
              {"dangling_dropped", dangling_dropped},
              {"self_citations_dropped", self_citations_dropped},
              {"duplicate_edges_dropped", duplicate_edges_dropped},
              {"malformed_rows", malformed_edge_rows}}},
            {"notes", notes}};
    }
};

// Immutable item/edge store. Adjacency is CSR both ways; in_edges is the
// exact transpose of out_edges. All edge endpoints resolve, no self loops.
class Corpus {
public:
    size_t size() const { return keys_.size(); }
    size_t edge_count() const { return out_targets_.size(); }

    const std::string& key(ItemId i) const { return keys_[i]; }
    DocType doc_type(ItemId i) const { return doc_types_[i]; }
    int32_t year(ItemId i) const { return years_[i]; }

    std::span<const CategoryId> original_categories(ItemId i) const {
        return {cat_values_.data() + cat_offsets_[i], cat_offsets_[i + 1] - cat_offsets_[i]};
    }

    // References (cited items) and citations (citing items).
    std::span<const ItemId> out_edges(ItemId i) const {
        return {out_targets_.data() + out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]};
    }
    std::span<const ItemId> in_edges(ItemId i) const {
        return {in_targets_.data() + in_offsets_[i], in_offsets_[i + 1] - in_offsets_[i]};
    }

    bool has_title(ItemId i) const { return title_offsets_[i + 1] > title_offsets_[i]; }

    // Sorted unique token ids of the item's title; empty when untitled.
    std::span<const uint32_t> title_tokens(ItemId i) const {
        return {title_token_values_.data() + title_offsets_[i], title_offsets_[i + 1] - title_offsets_[i]};
    }

    size_t token_count() const { return token_table_.size(); }
    const std::string& token_text(uint32_t tok) const { return token_table_[tok]; }
    size_t titled_item_count() const { return titled_items_; }

    std::optional<uint32_t> find_token(std::string_view word) const {
        auto it = token_ids_.find(word);
        if (it == token_ids_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<ItemId> find(std::string_view key) const {
        auto it = by_key_.find(key);
        if (it == by_key_.end()) return std::nullopt;
        return it->second;
    }

    // Item ids in ascending external-key order; the stable row order for all
    // emitted files.
    const std::vector<ItemId>& key_order() const { return key_order_; }

private:
    friend class CorpusBuilder;

    std::vector<std::string> keys_;
    std::vector<DocType> doc_types_;
    std::vector<int32_t> years_;
    std::vector<uint32_t> cat_offsets_{0};
    std::vector<CategoryId> cat_values_;
    std::vector<uint64_t> title_offsets_{0};
    std::vector<uint32_t> title_token_values_;
    std::vector<std::string> token_table_;
    std::unordered_map<std::string, uint32_t, detail::StringHash, std::equal_to<>> token_ids_;
    size_t titled_items_ = 0;
    std::vector<uint64_t> out_offsets_;
    std::vector<ItemId> out_targets_;
    std::vector<uint64_t> in_offsets_;
    std::vector<ItemId> in_targets_;
    std::unordered_map<std::string, ItemId, detail::StringHash, std::equal_to<>> by_key_;
    std::vector<ItemId> key_order_;
};

// Two-phase construction: add all items, then edges, then finish(). Edges are
// buffered as id pairs, sorted, deduplicated, and packed into fixed-size
// adjacency arrays.
class CorpusBuilder {
public:
    // Returns the dense id. Duplicate keys are an identity error and abort.
    ItemId add_item(std::string key, DocType doc_type, int32_t year,
                    std::vector<CategoryId> categories, const std::vector<std::string>& title_tokens) {
        if (corpus_.keys_.size() >= kNoItem) throw ValidationError("corpus too large");
        std::sort(categories.begin(), categories.end());
        categories.erase(std::unique(categories.begin(), categories.end()), categories.end());
        if (categories.size() > 6)
            throw ValidationError("item \"" + key + "\": more than 6 original categories");
        ItemId id = static_cast<ItemId>(corpus_.keys_.size());
        auto [it, inserted] = corpus_.by_key_.emplace(key, id);
        if (!inserted) throw ValidationError("duplicate external key \"" + key + "\"");
        corpus_.keys_.push_back(std::move(key));
        corpus_.doc_types_.push_back(doc_type);
        corpus_.years_.push_back(year);
        corpus_.cat_values_.insert(corpus_.cat_values_.end(), categories.begin(), categories.end());
        corpus_.cat_offsets_.push_back(static_cast<uint32_t>(corpus_.cat_values_.size()));

        std::vector<uint32_t> toks;
        toks.reserve(title_tokens.size());
        for (const std::string& t : title_tokens) toks.push_back(intern_token(t));
        std::sort(toks.begin(), toks.end());
        toks.erase(std::unique(toks.begin(), toks.end()), toks.end());
        if (!toks.empty()) ++corpus_.titled_items_;
        corpus_.title_token_values_.insert(corpus_.title_token_values_.end(), toks.begin(), toks.end());
        corpus_.title_offsets_.push_back(corpus_.title_token_values_.size());
        return id;
    }

    void add_edge(ItemId citing, ItemId cited, IngestReport& report) {
        if (citing == cited) {
            ++report.self_citations_dropped;
            return;
        }
        edges_.emplace_back(citing, cited);
    }

    // Resolves keys; unresolvable endpoints count as dangling.
    void add_edge_keys(std::string_view citing, std::string_view cited, IngestReport& report) {
        auto a = corpus_.find(citing);
        auto b = corpus_.find(cited);
        if (!a || !b) {
            ++report.dangling_dropped;
            return;
        }
        add_edge(*a, *b, report);
    }

    Corpus finish(IngestReport& report) {
        const size_t n = corpus_.size();
        std::sort(edges_.begin(), edges_.end());
        auto last = std::unique(edges_.begin(), edges_.end());
        report.duplicate_edges_dropped += static_cast<uint64_t>(edges_.end() - last);
        edges_.erase(last, edges_.end());
        report.edges_kept = edges_.size();

        corpus_.out_offsets_.assign(n + 1, 0);
        corpus_.in_offsets_.assign(n + 1, 0);
        for (const auto& [src, dst] : edges_) {
            ++corpus_.out_offsets_[src + 1];
            ++corpus_.in_offsets_[dst + 1];
        }
        std::partial_sum(corpus_.out_offsets_.begin(), corpus_.out_offsets_.end(), corpus_.out_offsets_.begin());
        std::partial_sum(corpus_.in_offsets_.begin(), corpus_.in_offsets_.end(), corpus_.in_offsets_.begin());
        corpus_.out_targets_.resize(edges_.size());
        corpus_.in_targets_.resize(edges_.size());
        std::vector<uint64_t> in_fill(corpus_.in_offsets_.begin(), corpus_.in_offsets_.end() - 1);
        size_t pos = 0;
        for (const auto& [src, dst] : edges_) {
            corpus_.out_targets_[pos++] = dst;  // edges sorted by src, so out CSR fills in order
            corpus_.in_targets_[in_fill[dst]++] = src;
        }
        edges_.clear();
        edges_.shrink_to_fit();

        corpus_.key_order_.resize(n);
        std::iota(corpus_.key_order_.begin(), corpus_.key_order_.end(), 0u);
        std::sort(corpus_.key_order_.begin(), corpus_.key_order_.end(),
                  [this](ItemId a, ItemId b) { return corpus_.keys_[a] < corpus_.keys_[b]; });
        return std::move(corpus_);
    }

    uint32_t intern_token(const std::string& tok) {
        auto it = corpus_.token_ids_.find(tok);
        if (it != corpus_.token_ids_.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(corpus_.token_table_.size());
        corpus_.token_table_.push_back(tok);
        corpus_.token_ids_.emplace(tok, id);
        return id;
    }

private:
    Corpus corpus_;
    std::vector<std::pair<ItemId, ItemId>> edges_;
};

namespace detail {

inline bool looks_like_jsonl(const std::string& path) {
    return path.size() >= 6 && path.compare(path.size() - 6, 6, ".jsonl") == 0;
}

inline bool resolve_categories(const Taxonomy& t, std::string_view cell, std::vector<CategoryId>& out) {
    out.clear();
    if (trim(cell).empty()) return true;
    for (std::string_view part : split(cell, '|')) {
        auto cat = t.find_category(part);
        if (!cat) return false;
        out.push_back(*cat);
    }
    return true;
}

inline void ingest_item_row(CorpusBuilder& builder, const Taxonomy& t, const IngestOptions& opt,
                            IngestReport& report, size_t line_no, std::string_view key,
                            std::string_view doc_type_s, std::string_view year_s,
                            std::string_view categories_s, std::string_view title_s,
                            const std::vector<std::string>* categories_list) {
    ++report.item_rows;
    key = trim(key);
    if (key.empty()) {
        ++report.rejected_malformed;
        report.note("items line " + std::to_string(line_no) + ": empty key");
        return;
    }
    auto dt = parse_doc_type(trim(doc_type_s));
    if (!dt) {
        ++report.unknown_doc_type_as_other;
        dt = DocType::other;
    }
    int64_t year;
    if (!parse_int(year_s, year)) {
        ++report.rejected_malformed;
        report.note("items line " + std::to_string(line_no) + ": bad year \"" + std::string(year_s) + "\"");
        return;
    }
    if (year < opt.year_min || year > opt.year_max) {
        ++report.rejected_bad_year;
        report.note("items line " + std::to_string(line_no) + ": year " + std::to_string(year) + " out of range");
        return;
    }
    std::vector<CategoryId> cats;
    bool ok;
    if (categories_list) {
        ok = true;
        for (const std::string& label : *categories_list) {
            auto cat = t.find_category(label);
            if (!cat) {
                ok = false;
                break;
            }
            cats.push_back(*cat);
        }
    } else {
        ok = resolve_categories(t, categories_s, cats);
    }
    if (!ok) {
        if (opt.strict)
            throw ValidationError("items line " + std::to_string(line_no) + ": unknown category label");
        ++report.rejected_unknown_category;
        report.note("items line " + std::to_string(line_no) + ": unknown category label");
        return;
    }
    std::sort(cats.begin(), cats.end());
    cats.erase(std::unique(cats.begin(), cats.end()), cats.end());
    if (cats.size() > 6) {
        ++report.rejected_too_many_categories;
        report.note("items line " + std::to_string(line_no) + ": more than 6 categories");
        return;
    }
    builder.add_item(std::string(key), *dt, static_cast<int32_t>(year), std::move(cats),
                     tokenize_title(title_s));
    ++report.items_kept;
}

}  // namespace detail

// Loads items and the matched-reference edge list. Items file is TSV with
// header key<TAB>doc_type<TAB>year<TAB>categories<TAB>title (title column
// optional, categories pipe-separated) or JSON lines when the path ends in
// .jsonl. References are TSV citing_key<TAB>cited_key or JSON lines with
// fields citing/cited. Dangling references, self citations, and duplicate
// edges are dropped and counted; rows that fail validation are rejected and
// counted (strict mode aborts on unknown categories instead).
inline std::pair<Corpus, IngestReport> load_corpus(const std::string& items_path,
                                                   const std::string& refs_path, const Taxonomy& t,
                                                   const IngestOptions& opt = {}) {
    CorpusBuilder builder;
    IngestReport report;

    if (detail::looks_like_jsonl(items_path)) {
        detail::LineReader reader(items_path);
        std::string_view line;
        std::vector<std::string> cats;
        while (reader.next(line)) {
            if (detail::trim(line).empty()) continue;
            nlohmann::json row;
            try {
                row = nlohmann::json::parse(line);
            } catch (const nlohmann::json::exception&) {
                ++report.item_rows;
                ++report.rejected_malformed;
                report.note("items line " + std::to_string(reader.line_number()) + ": bad JSON");
                continue;
            }
            cats.clear();
            if (row.contains("categories"))
                for (const auto& c : row["categories"]) cats.push_back(c.get<std::string>());
            std::string year;
            if (row.contains("year"))
                year = row["year"].is_string() ? row["year"].get<std::string>()
                                               : nlohmann::to_string(row["year"]);
            detail::ingest_item_row(builder, t, opt, report, reader.line_number(),
                                    row.value("key", ""), row.value("doc_type", ""), year, "",
                                    row.value("title", ""), &cats);
        }
    } else {
        detail::LineReader reader(items_path);
        std::string_view line;
        if (!reader.next(line)) throw ValidationError("items file is empty: " + items_path);
        if (line != "key\tdoc_type\tyear\tcategories\ttitle" && line != "key\tdoc_type\tyear\tcategories")
            throw ValidationError("items file: bad header");
        while (reader.next(line)) {
            if (detail::trim(line).empty()) continue;
            auto cols = detail::split(line, '\t');
            if (cols.size() != 4 && cols.size() != 5) {
                ++report.item_rows;
                ++report.rejected_malformed;
                report.note("items line " + std::to_string(reader.line_number()) + ": expected 4 or 5 columns");
                continue;
            }
            detail::ingest_item_row(builder, t, opt, report, reader.line_number(), cols[0], cols[1],
                                    cols[2], cols[3], cols.size() == 5 ? cols[4] : "", nullptr);
        }
    }

    if (detail::looks_like_jsonl(refs_path)) {
        detail::LineReader reader(refs_path);
        std::string_view line;
        while (reader.next(line)) {
            if (detail::trim(line).empty()) continue;
            ++report.edge_rows;
            nlohmann::json row;
            try {
                row = nlohmann::json::parse(line);
            } catch (const nlohmann::json::exception&) {
                ++report.malformed_edge_rows;
                continue;
            }
            if (!row.contains("citing") || !row.contains("cited")) {
                ++report.malformed_edge_rows;
                continue;
            }
            builder.add_edge_keys(row["citing"].get<std::string>(), row["cited"].get<std::string>(), report);
        }
    } else {
        detail::LineReader reader(refs_path);
        std::string_view line;
        while (reader.next(line)) {
            if (detail::trim(line).empty()) continue;
            ++report.edge_rows;
            auto cols = detail::split(line, '\t');
            if (cols.size() != 2) {
                ++report.malformed_edge_rows;
                report.note("refs line " + std::to_string(reader.line_number()) + ": expected 2 columns");
                continue;
            }
            builder.add_edge_keys(detail::trim(cols[0]), detail::trim(cols[1]), report);
        }
    }

    return {builder.finish(report), std::move(report)};
}

// Boolean mask over items whose doc_type is in kinds. Classification always
// runs on all items; evaluation defaults to article + proceedings_paper.
inline std::vector<bool> filter_doc_types(const Corpus& c, std::span<const DocType> kinds) {
    std::array<bool, kDocTypeCount> wanted{};
    for (DocType k : kinds) wanted[static_cast<size_t>(k)] = true;
    std::vector<bool> mask(c.size());
    for (ItemId i = 0; i < c.size(); ++i) mask[i] = wanted[static_cast<size_t>(c.doc_type(i))];
    return mask;
}

}  // namespace refclass
