#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "refclass/common.hpp"
#include "refclass/default_taxonomy.hpp"
#include "refclass/tsv.hpp"

namespace refclass {

// Dense handles into a loaded Taxonomy. Values are only meaningful against
// the taxonomy that issued them.
using CategoryId = uint16_t;
using BroadAreaId = uint16_t;

inline constexpr CategoryId kNoCategory = 0xFFFF;
inline constexpr BroadAreaId kNoArea = 0xFFFF;

// The category universe: labels, multidisciplinary flags, and the
// category -> broad-area map. Immutable after load; safe to share across
// threads.
class Taxonomy {
public:
    struct Category {
        std::string label;
        bool multidisciplinary = false;
        BroadAreaId broad_area = kNoArea;  // kNoArea means no broad area
    };

    size_t category_count() const { return categories_.size(); }
    size_t area_count() const { return area_labels_.size(); }

    const std::string& category_label(CategoryId c) const { return categories_.at(c).label; }
    const std::string& area_label(BroadAreaId a) const { return area_labels_.at(a); }
    bool multidisciplinary(CategoryId c) const { return categories_.at(c).multidisciplinary; }

    // The category's broad area; absent for categories without one
    // ("Multidisciplinary Sciences" in the default taxonomy).
    std::optional<BroadAreaId> broad_area_of(CategoryId c) const {
        if (c >= categories_.size()) throw ValidationError("unknown category id");
        BroadAreaId a = categories_[c].broad_area;
        if (a == kNoArea) return std::nullopt;
        return a;
    }

    std::optional<CategoryId> find_category(std::string_view label) const {
        auto it = by_label_.find(detail::trim(label));
        if (it == by_label_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<BroadAreaId> find_area(std::string_view label) const {
        auto it = area_by_label_.find(detail::trim(label));
        if (it == area_by_label_.end()) return std::nullopt;
        return it->second;
    }

    size_t multidisciplinary_count() const {
        return static_cast<size_t>(std::count_if(categories_.begin(), categories_.end(),
                                                 [](const Category& c) { return c.multidisciplinary; }));
    }

    // Canonical form: header plus rows in id order. Loading a canonical file
    // and serializing reproduces it byte for byte.
    std::string serialize() const {
        std::string out = "label\tbroad_area\tmultidisciplinary\n";
        for (const Category& c : categories_) {
            out += c.label;
            out += '\t';
            if (c.broad_area != kNoArea) out += area_labels_[c.broad_area];
            out += '\t';
            out += c.multidisciplinary ? '1' : '0';
            out += '\n';
        }
        return out;
    }

    // Builds from parallel row data; shared by the file loader, the embedded
    // default, and the synthetic generator.
    static Taxonomy from_rows(const std::vector<std::string>& labels,
                              const std::vector<std::string>& area_names,
                              const std::vector<bool>& multi_flags,
                              std::vector<std::string>* warnings = nullptr) {
        if (labels.size() != area_names.size() || labels.size() != multi_flags.size())
            throw ValidationError("taxonomy rows: mismatched column lengths");
        if (labels.size() >= kNoCategory)
            throw ValidationError("taxonomy too large: at most 65534 categories supported");
        Taxonomy t;
        for (size_t i = 0; i < labels.size(); ++i) {
            std::string label(detail::trim(labels[i]));
            if (label.empty())
                throw ValidationError("taxonomy row " + std::to_string(i + 2) + ": empty label");
            if (label.find('\t') != std::string::npos || label.find('\n') != std::string::npos)
                throw ValidationError("taxonomy row " + std::to_string(i + 2) + ": label contains tab or newline");
            if (t.by_label_.count(label))
                throw ValidationError("taxonomy row " + std::to_string(i + 2) + ": duplicate label \"" + label + "\"");
            Category cat;
            cat.label = label;
            cat.multidisciplinary = multi_flags[i];
            std::string area(detail::trim(area_names[i]));
            if (!area.empty()) {
                auto it = t.area_by_label_.find(area);
                if (it == t.area_by_label_.end()) {
                    if (t.area_labels_.size() >= kNoArea)
                        throw ValidationError("taxonomy too large: at most 65534 broad areas supported");
                    BroadAreaId id = static_cast<BroadAreaId>(t.area_labels_.size());
                    t.area_labels_.push_back(area);
                    t.area_by_label_.emplace(area, id);
                    cat.broad_area = id;
                } else {
                    cat.broad_area = it->second;
                }
            }
            if (!cat.multidisciplinary && warnings) {
                std::string lower = label;
                std::transform(lower.begin(), lower.end(), lower.begin(),
                               [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
                if (lower.find("multidisciplinary") != std::string::npos)
                    warnings->push_back("row " + std::to_string(i + 2) + ": label \"" + label +
                                        "\" contains \"Multidisciplinary\" but is not flagged multidisciplinary");
            }
            CategoryId id = static_cast<CategoryId>(t.categories_.size());
            t.by_label_.emplace(cat.label, id);
            t.categories_.push_back(std::move(cat));
        }
        if (t.categories_.empty()) throw ValidationError("taxonomy has no categories");
        return t;
    }

private:
    std::vector<Category> categories_;
    std::vector<std::string> area_labels_;
    std::unordered_map<std::string, CategoryId, detail::StringHash, std::equal_to<>> by_label_;
    std::unordered_map<std::string, BroadAreaId, detail::StringHash, std::equal_to<>> area_by_label_;
};

namespace detail {

inline Taxonomy parse_taxonomy_lines(const std::function<bool(std::string_view&)>& next_line,
                                     std::vector<std::string>* warnings) {
    std::string_view line;
    if (!next_line(line)) throw ValidationError("taxonomy file is empty");
    if (line != "label\tbroad_area\tmultidisciplinary")
        throw ValidationError("taxonomy file: bad header, expected "
                              "\"label<TAB>broad_area<TAB>multidisciplinary\"");
    std::vector<std::string> labels, areas;
    std::vector<bool> flags;
    size_t row = 1;
    while (next_line(line)) {
        ++row;
        if (detail::trim(line).empty()) continue;
        auto cols = detail::split(line, '\t');
        if (cols.size() != 3)
            throw ValidationError("taxonomy line " + std::to_string(row) + ": expected 3 tab-separated columns");
        if (cols[2] != "0" && cols[2] != "1")
            throw ValidationError("taxonomy line " + std::to_string(row) + ": multidisciplinary must be 0 or 1");
        labels.emplace_back(cols[0]);
        areas.emplace_back(cols[1]);
        flags.push_back(cols[2] == "1");
    }
    return Taxonomy::from_rows(labels, areas, flags, warnings);
}

}  // namespace detail

// Loads a taxonomy from a UTF-8 TSV file:
//   label<TAB>broad_area<TAB>multidisciplinary
// broad_area empty means the category has no broad area; multidisciplinary is
// 0/1. Duplicate labels and malformed rows are rejected with line numbers.
inline Taxonomy load_taxonomy(const std::string& path, std::vector<std::string>* warnings = nullptr) {
    detail::LineReader reader(path);
    return detail::parse_taxonomy_lines(
        [&reader](std::string_view& line) { return reader.next(line); }, warnings);
}

inline Taxonomy load_taxonomy_from_string(std::string_view text, std::vector<std::string>* warnings = nullptr) {
    size_t pos = 0;
    auto next = [&](std::string_view& line) {
        if (pos >= text.size()) return false;
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = nl + 1;
        return true;
    };
    return detail::parse_taxonomy_lines(next, warnings);
}

// The embedded default scheme: 252 categories, 14 broad areas, 9
// multidisciplinary flags.
inline Taxonomy default_taxonomy() {
    return load_taxonomy_from_string(kDefaultTaxonomyTsv);
}

}  // namespace refclass
