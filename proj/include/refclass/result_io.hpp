#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "refclass/corpus.hpp"
#include "refclass/engine.hpp"
#include "refclass/taxonomy.hpp"
#include "refclass/tsv.hpp"

namespace refclass {

// Result rows: key<TAB>level<TAB>label<TAB>pass<TAB>provenance, classified
// items only, ascending external key. UTF-8, newline-terminated, no header.
inline void write_result(const std::string& path, const ClassificationResult& result,
                         const Corpus& corpus, const Taxonomy& t) {
    detail::FileWriter w(path);
    const char* level = level_name(result.level);
    for (ItemId i : corpus.key_order()) {
        if (!result.classified(i)) continue;
        w.write(corpus.key(i));
        w.write("\t");
        w.write(level);
        w.write("\t");
        w.write(detail::label_text(t, result.level, result.labels[i]));
        w.write("\t");
        w.write_u64(result.first_pass[i]);
        w.write("\t");
        w.write(provenance_name(result.provenances[i]));
        w.write("\n");
    }
    w.close();
}

inline std::string serialize_result(const ClassificationResult& result, const Corpus& corpus,
                                    const Taxonomy& t) {
    std::string out;
    const char* level = level_name(result.level);
    for (ItemId i : corpus.key_order()) {
        if (!result.classified(i)) continue;
        out += corpus.key(i);
        out += '\t';
        out += level;
        out += '\t';
        out += detail::label_text(t, result.level, result.labels[i]);
        out += '\t';
        out += std::to_string(result.first_pass[i]);
        out += '\t';
        out += provenance_name(result.provenances[i]);
        out += '\n';
    }
    return out;
}

// Companion distributions: key<TAB>label:count|label:count|... with cells
// ordered by descending count then label text.
inline void write_distributions(const std::string& path, const ClassificationResult& result,
                                const Corpus& corpus, const Taxonomy& t) {
    if (!result.distributions_retained())
        throw ValidationError("write_distributions: distributions were not retained");
    detail::FileWriter w(path);
    std::vector<std::pair<Label, uint32_t>> cell;
    for (ItemId i : corpus.key_order()) {
        if (result.distributions[i].empty()) continue;
        cell = result.distributions[i];
        std::sort(cell.begin(), cell.end(), [&](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return detail::label_text(t, result.level, a.first) <
                   detail::label_text(t, result.level, b.first);
        });
        w.write(corpus.key(i));
        w.write("\t");
        bool first = true;
        for (const auto& [label, count] : cell) {
            if (!first) w.write("|");
            w.write(detail::label_text(t, result.level, label));
            w.write(":");
            w.write_u64(count);
            first = false;
        }
        w.write("\n");
    }
    w.close();
}

// Reads a result file back against the corpus it was produced from. Reasons
// are reconstructed from reference counts, not stored in the file.
inline ClassificationResult read_result(const std::string& path, const Corpus& corpus,
                                        const Taxonomy& t) {
    detail::LineReader reader(path);
    ClassificationResult result;
    std::optional<Level> level;
    std::vector<std::tuple<ItemId, Label, uint8_t, Provenance>> rows;
    std::string_view line;
    while (reader.next(line)) {
        if (detail::trim(line).empty()) continue;
        auto cols = detail::split(line, '\t');
        if (cols.size() != 5)
            throw ValidationError("result line " + std::to_string(reader.line_number()) +
                                  ": expected 5 columns");
        auto item = corpus.find(cols[0]);
        if (!item)
            throw ValidationError("result line " + std::to_string(reader.line_number()) +
                                  ": unknown key \"" + std::string(cols[0]) + "\"");
        auto l = parse_level(cols[1]);
        if (!l)
            throw ValidationError("result line " + std::to_string(reader.line_number()) + ": bad level");
        if (level && *level != *l)
            throw ValidationError("result file mixes levels");
        level = l;
        Label label;
        if (*l == Level::subject) {
            auto cat = t.find_category(cols[2]);
            if (!cat)
                throw ValidationError("result line " + std::to_string(reader.line_number()) +
                                      ": unknown category \"" + std::string(cols[2]) + "\"");
            label = *cat;
        } else {
            auto area = t.find_area(cols[2]);
            if (!area)
                throw ValidationError("result line " + std::to_string(reader.line_number()) +
                                      ": unknown broad area \"" + std::string(cols[2]) + "\"");
            label = *area;
        }
        int64_t pass;
        if (!detail::parse_int(cols[3], pass) || pass < 1 || pass > 255)
            throw ValidationError("result line " + std::to_string(reader.line_number()) + ": bad pass");
        auto prov = parse_provenance(cols[4]);
        if (!prov)
            throw ValidationError("result line " + std::to_string(reader.line_number()) +
                                  ": bad provenance");
        rows.emplace_back(*item, label, static_cast<uint8_t>(pass), *prov);
    }
    result.level = level.value_or(Level::subject);
    result.labels.assign(corpus.size(), kNoLabel);
    result.provenances.assign(corpus.size(), Provenance::majority);
    result.first_pass.assign(corpus.size(), 0);
    result.reasons.assign(corpus.size(), UnclassifiedReason::no_references);
    uint32_t max_pass = 1;
    for (const auto& [item, label, pass, prov] : rows) {
        if (result.labels[item] != kNoLabel)
            throw ValidationError("result file assigns \"" + corpus.key(item) + "\" twice");
        result.labels[item] = label;
        result.first_pass[item] = pass;
        result.provenances[item] = prov;
        result.reasons[item] = UnclassifiedReason::classified;
        max_pass = std::max<uint32_t>(max_pass, pass);
    }
    for (ItemId i = 0; i < corpus.size(); ++i) {
        if (result.classified(i)) continue;
        result.reasons[i] = corpus.out_edges(i).empty() ? UnclassifiedReason::no_references
                                                        : UnclassifiedReason::no_classifier_references;
    }
    result.global.counts.assign(detail::label_space(t, result.level), 0);
    PassSummary summary;
    summary.pass = max_pass;
    summary.classified_items = result.classified_count();
    result.pass_summaries.push_back(summary);
    return result;
}

inline uint64_t file_digest(const std::string& path) {
    detail::LineReader reader(path);
    uint64_t h = 0xcbf29ce484222325ull;
    std::string_view line;
    while (reader.next(line)) {
        h = detail::fnv1a64(line.data(), line.size(), h);
        h = detail::fnv1a64("\n", 1, h);
    }
    return h;
}

}  // namespace refclass
