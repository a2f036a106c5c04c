// refclass: reassign every bibliographic item in a corpus to one subject
// category and one broad area from the categories of its classifier
// references, with an iterative pass, a citation-augmented mode, a TF-IDF
// title fallback, evaluation metrics, and a synthetic corpus generator.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "refclass/refclass.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct ClassifyArgs {
    std::string items, refs, taxonomy = "default", out;
    std::string level = "subject";
    uint32_t passes = 1;
    std::string mode = "references";
    std::string size_metric = "occurrences";
    std::string retain = "auto";
    std::string eval_doc_types = "article,proceedings_paper";
    bool title_fallback = false;
    bool strict = false;
    bool iter_tie_break_previous = false;
    int32_t year_min = 1800, year_max = 2100;
    unsigned threads = 0;
};

struct GenerateArgs {
    std::string out, taxonomy;
    refclass::GeneratorConfig cfg;
};

struct EvaluateArgs {
    std::string items, refs, taxonomy = "default", result, truth, out;
    std::string eval_doc_types = "article,proceedings_paper";
    uint64_t export_sample = 0;
    uint64_t sample_seed = 1;
    int32_t year_min = 1800, year_max = 2100;
};

struct TaxonomyCheckArgs {
    std::string file = "default";
};

refclass::Taxonomy load_taxonomy_arg(const std::string& arg, std::vector<std::string>* warnings) {
    if (arg == "default") return refclass::default_taxonomy();
    return refclass::load_taxonomy(arg, warnings);
}

std::vector<refclass::DocType> parse_doc_type_list(const std::string& csv) {
    std::vector<refclass::DocType> kinds;
    if (csv == "all") {
        for (size_t i = 0; i < refclass::kDocTypeCount; ++i)
            kinds.push_back(static_cast<refclass::DocType>(i));
        return kinds;
    }
    for (auto part : refclass::detail::split(csv, ',')) {
        auto dt = refclass::parse_doc_type(refclass::detail::trim(part));
        if (!dt) throw refclass::ValidationError("unknown doc type \"" + std::string(part) + "\"");
        kinds.push_back(*dt);
    }
    if (kinds.empty()) throw refclass::ValidationError("empty doc-type list");
    return kinds;
}

void write_json(const std::string& path, const ordered_json& j) {
    refclass::detail::FileWriter w(path);
    w.write(j.dump(2));
    w.write("\n");
    w.close();
}

void write_manifest(const std::string& path, const std::string& subcommand, const ordered_json& config,
                    const std::vector<std::string>& input_paths, const std::vector<std::string>& outputs) {
    ordered_json inputs = ordered_json::object();
    for (const std::string& p : input_paths) {
        char digest[20];
        std::snprintf(digest, sizeof digest, "%016llx",
                      static_cast<unsigned long long>(refclass::file_digest(p)));
        inputs[p] = std::string("fnv1a64:") + digest;
    }
    write_json(path, ordered_json{{"artifact", "refclass"},
                                  {"version", refclass::kVersion},
                                  {"subcommand", subcommand},
                                  {"config", config},
                                  {"inputs", inputs},
                                  {"outputs", outputs}});
}

int cmd_classify(const ClassifyArgs& a) {
    auto level = refclass::parse_level(a.level);
    if (!level) throw refclass::ValidationError("bad --level");
    refclass::PipelineConfig pc;
    pc.level = *level;
    pc.passes = a.passes;
    if (a.mode == "references")
        pc.pass.mode = refclass::Mode::references;
    else if (a.mode == "references_and_citations")
        pc.pass.mode = refclass::Mode::references_and_citations;
    else
        throw refclass::ValidationError("bad --mode");
    if (a.size_metric == "occurrences")
        pc.pass.size_metric = refclass::SizeMetric::occurrences;
    else if (a.size_metric == "distinct_items")
        pc.pass.size_metric = refclass::SizeMetric::distinct_items;
    else
        throw refclass::ValidationError("bad --size-metric");
    if (a.retain == "on")
        pc.pass.retain_distributions = true;
    else if (a.retain == "off")
        pc.pass.retain_distributions = false;
    else if (a.retain != "auto")
        throw refclass::ValidationError("bad --retain-distributions");
    pc.pass.threads = a.threads;
    pc.pass.iter_tie_break_uses_previous = a.iter_tie_break_previous;
    auto kinds = parse_doc_type_list(a.eval_doc_types);
    if (pc.pass.mode == refclass::Mode::references_and_citations && pc.level == refclass::Level::subject)
        std::cerr << "note: citation mode at subject level is supported but was only validated at "
                     "broad-area level\n";

    std::vector<std::string> warnings;
    refclass::Taxonomy taxonomy = load_taxonomy_arg(a.taxonomy, &warnings);
    for (const auto& w : warnings) std::cerr << "taxonomy warning: " << w << "\n";

    refclass::IngestOptions opt;
    opt.strict = a.strict;
    opt.year_min = a.year_min;
    opt.year_max = a.year_max;
    auto [corpus, ingest] = refclass::load_corpus(a.items, a.refs, taxonomy, opt);

    auto result = refclass::run_pipeline(corpus, taxonomy, pc);

    uint64_t fallback_assigned = 0;
    if (a.title_fallback) {
        if (corpus.titled_item_count() == 0)
            throw refclass::ValidationError("--title-fallback requires titles in the items file");
        auto vocab = refclass::Vocabulary::build(corpus);
        auto index = refclass::TitleIndex::build(corpus, taxonomy, pc.level, vocab);
        for (refclass::ItemId i = 0; i < corpus.size(); ++i) {
            if (result.classified(i)) continue;
            auto assignment = refclass::classify_by_title(corpus, i, index, vocab, result.global, taxonomy);
            if (!assignment) continue;
            result.labels[i] = assignment->label;
            result.provenances[i] = refclass::Provenance::tfidf;
            result.first_pass[i] = static_cast<uint8_t>(pc.passes);
            result.reasons[i] = refclass::UnclassifiedReason::classified;
            ++fallback_assigned;
        }
    }

    auto mask = refclass::filter_doc_types(corpus, kinds);
    auto metrics = refclass::build_metrics_report(result, corpus, taxonomy, mask);

    fs::create_directories(a.out);
    std::string result_path = a.out + "/result.tsv";
    refclass::write_result(result_path, result, corpus, taxonomy);
    std::vector<std::string> outputs = {"result.tsv", "ingest_report.json", "metrics.json",
                                        "category_sizes.tsv", "manifest.json"};
    if (result.distributions_retained()) {
        refclass::write_distributions(a.out + "/distributions.tsv", result, corpus, taxonomy);
        outputs.insert(outputs.begin() + 1, "distributions.tsv");
    }
    write_json(a.out + "/ingest_report.json", ingest.to_json());
    write_json(a.out + "/metrics.json", metrics.to_json());
    refclass::write_category_sizes(a.out + "/category_sizes.tsv", metrics);
    ordered_json config{{"items", a.items},
                        {"refs", a.refs},
                        {"taxonomy", a.taxonomy},
                        {"level", a.level},
                        {"passes", a.passes},
                        {"mode", a.mode},
                        {"size_metric", a.size_metric},
                        {"retain_distributions", a.retain},
                        {"eval_doc_types", a.eval_doc_types},
                        {"title_fallback", a.title_fallback},
                        {"strict", a.strict},
                        {"iter_tie_break_previous", a.iter_tie_break_previous},
                        {"year_min", a.year_min},
                        {"year_max", a.year_max},
                        {"threads", a.threads}};
    write_manifest(a.out + "/manifest.json", "classify", config, {a.items, a.refs}, outputs);

    std::cout << "items: " << corpus.size() << " (" << corpus.edge_count() << " references kept)\n";
    for (const auto& p : result.pass_summaries)
        std::cout << "pass " << p.pass << ": " << p.classifier_items << " classifiers, "
                  << p.classified_items << " classified\n";
    if (a.title_fallback) std::cout << "title fallback: " << fallback_assigned << " assigned\n";
    std::cout << "classified " << result.classified_count() << " of " << corpus.size() << " items -> "
              << result_path << "\n";
    return 0;
}

int cmd_generate(const GenerateArgs& args) {
    refclass::GeneratorConfig cfg = args.cfg;
    refclass::Taxonomy supplied;
    if (!args.taxonomy.empty() && args.taxonomy != "generated") {
        supplied = load_taxonomy_arg(args.taxonomy, nullptr);
        cfg.taxonomy = &supplied;
    }
    auto gen = refclass::generate(cfg);
    fs::create_directories(args.out);
    refclass::write_generated_files(gen, args.out + "/items.tsv", args.out + "/refs.tsv",
                                    args.out + "/taxonomy.tsv", args.out + "/truth.tsv");
    ordered_json config{{"n_items", cfg.n_items},
                        {"n_categories", cfg.n_categories},
                        {"taxonomy", args.taxonomy.empty() ? "generated" : args.taxonomy},
                        {"refs_mean", cfg.refs_mean},
                        {"refs_dispersion", cfg.refs_dispersion},
                        {"within_category_prob", cfg.within_category_prob},
                        {"multi_category_fraction", cfg.multi_category_fraction},
                        {"multidisciplinary_fraction", cfg.multidisciplinary_fraction},
                        {"titleless_fraction", cfg.titleless_fraction},
                        {"refless_fraction", cfg.refless_fraction},
                        {"year_min", cfg.year_min},
                        {"year_max", cfg.year_max},
                        {"category_skew", cfg.category_skew},
                        {"seed", cfg.seed}};
    write_manifest(args.out + "/manifest.json", "generate", config, {},
                   {"items.tsv", "refs.tsv", "taxonomy.tsv", "truth.tsv", "manifest.json"});
    std::cout << "generated " << gen.corpus.size() << " items, " << gen.corpus.edge_count()
              << " references, " << gen.taxonomy.category_count() << " categories -> " << args.out << "\n";
    return 0;
}

int cmd_evaluate(const EvaluateArgs& a) {
    std::vector<std::string> warnings;
    refclass::Taxonomy taxonomy = load_taxonomy_arg(a.taxonomy, &warnings);
    for (const auto& w : warnings) std::cerr << "taxonomy warning: " << w << "\n";
    refclass::IngestOptions opt;
    opt.year_min = a.year_min;
    opt.year_max = a.year_max;
    auto [corpus, ingest] = refclass::load_corpus(a.items, a.refs, taxonomy, opt);
    auto result = refclass::read_result(a.result, corpus, taxonomy);
    auto kinds = parse_doc_type_list(a.eval_doc_types);
    auto mask = refclass::filter_doc_types(corpus, kinds);
    auto metrics = refclass::build_metrics_report(result, corpus, taxonomy, mask);
    ordered_json report = metrics.to_json();

    if (!a.truth.empty()) {
        refclass::detail::LineReader reader(a.truth);
        refclass::PlantedTruth truth;
        truth.category.assign(corpus.size(), refclass::kNoCategory);
        truth.area.assign(corpus.size(), refclass::kNoArea);
        std::string_view line;
        while (reader.next(line)) {
            if (refclass::detail::trim(line).empty()) continue;
            auto cols = refclass::detail::split(line, '\t');
            if (cols.size() != 2)
                throw refclass::ValidationError("truth line " + std::to_string(reader.line_number()) +
                                                ": expected 2 columns");
            auto item = corpus.find(cols[0]);
            if (!item)
                throw refclass::ValidationError("truth line " + std::to_string(reader.line_number()) +
                                                ": unknown key");
            auto cat = taxonomy.find_category(cols[1]);
            if (!cat)
                throw refclass::ValidationError("truth line " + std::to_string(reader.line_number()) +
                                                ": unknown category");
            truth.category[*item] = *cat;
            if (auto area = taxonomy.broad_area_of(*cat)) truth.area[*item] = *area;
        }
        for (refclass::ItemId i = 0; i < corpus.size(); ++i)
            if (truth.category[i] == refclass::kNoCategory)
                throw refclass::ValidationError("truth file misses item \"" + corpus.key(i) + "\"");
        double recovery = refclass::score_against_truth(result, truth);
        report["planted_recovery"] = recovery;
        std::cout << "planted recovery: " << recovery << "\n";
    }

    fs::create_directories(a.out);
    std::vector<std::string> outputs = {"metrics.json", "manifest.json"};
    if (a.export_sample > 0) {
        refclass::export_sample(result, corpus, taxonomy, a.export_sample, a.sample_seed,
                                a.out + "/sample.tsv", a.out + "/sample_key.tsv");
        outputs.insert(outputs.begin(), {"sample.tsv", "sample_key.tsv"});
        std::cout << "exported " << a.export_sample << "-row blinded sample (seed " << a.sample_seed
                  << ")\n";
    }
    write_json(a.out + "/metrics.json", report);
    ordered_json config{{"items", a.items},
                        {"refs", a.refs},
                        {"taxonomy", a.taxonomy},
                        {"result", a.result},
                        {"truth", a.truth},
                        {"eval_doc_types", a.eval_doc_types},
                        {"export_sample", a.export_sample},
                        {"sample_seed", a.sample_seed}};
    std::vector<std::string> inputs = {a.items, a.refs, a.result};
    if (!a.truth.empty()) inputs.push_back(a.truth);
    write_manifest(a.out + "/manifest.json", "evaluate", config, inputs, outputs);
    std::cout << "metrics -> " << a.out << "/metrics.json\n";
    return 0;
}

int cmd_taxonomy_check(const TaxonomyCheckArgs& a) {
    std::vector<std::string> warnings;
    refclass::Taxonomy t = load_taxonomy_arg(a.file, &warnings);
    std::cout << (a.file == "default" ? "embedded default taxonomy" : a.file) << ": "
              << t.category_count() << " categories, " << t.area_count() << " broad areas, "
              << t.multidisciplinary_count() << " multidisciplinary\n";
    size_t no_area = 0;
    for (refclass::CategoryId c = 0; c < t.category_count(); ++c)
        if (!t.broad_area_of(c)) ++no_area;
    std::cout << no_area << " categories without a broad area\n";
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reference-based reclassification of bibliographic items into unique subject "
                 "categories and broad areas"};
    app.require_subcommand(1);
    app.set_config("--config");

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Ingest a corpus and run the reclassification");
    classify->configurable();
    classify->add_option("--items", ca.items, "Items file (TSV or .jsonl)")->required();
    classify->add_option("--refs", ca.refs, "References file (TSV or .jsonl)")->required();
    classify->add_option("--taxonomy", ca.taxonomy, "Taxonomy TSV path, or \"default\"");
    classify->add_option("--level", ca.level, "subject | broad")
        ->check(CLI::IsMember({"subject", "broad"}));
    classify->add_option("--passes", ca.passes, "Number of passes (>=2 adds iterative passes)")
        ->check(CLI::Range(1u, 255u));
    classify->add_option("--mode", ca.mode, "references | references_and_citations")
        ->check(CLI::IsMember({"references", "references_and_citations"}));
    classify->add_option("--size-metric", ca.size_metric,
                         "Final tie-break population: occurrences | distinct_items")
        ->check(CLI::IsMember({"occurrences", "distinct_items"}));
    classify->add_option("--retain-distributions", ca.retain, "auto | on | off")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    classify->add_option("--eval-doc-types", ca.eval_doc_types,
                         "Doc types used by evaluation metrics (csv or \"all\")");
    classify->add_flag("--title-fallback", ca.title_fallback,
                       "Classify leftover items by TF-IDF title similarity");
    classify->add_flag("--strict", ca.strict, "Abort on unknown category labels");
    classify->add_flag("--iter-tie-break-previous", ca.iter_tie_break_previous,
                       "Experimental: iterative tie-break uses the previous label");
    classify->add_option("--year-min", ca.year_min, "Smallest accepted publication year");
    classify->add_option("--year-max", ca.year_max, "Largest accepted publication year");
    classify->add_option("--threads", ca.threads, "Worker threads (0 = all cores); never affects output")
        ->envname("REFCLASS_THREADS");
    classify->add_option("--out", ca.out, "Output directory")->required();

    GenerateArgs ga;
    auto* generate = app.add_subcommand("generate", "Generate a synthetic corpus with planted labels");
    generate->configurable();
    generate->add_option("--n-items", ga.cfg.n_items, "Number of items");
    generate->add_option("--n-categories", ga.cfg.n_categories, "Number of planted categories");
    generate->add_option("--taxonomy", ga.taxonomy, "Taxonomy TSV to draw categories from");
    generate->add_option("--refs-mean", ga.cfg.refs_mean, "Mean references per item");
    generate->add_option("--refs-dispersion", ga.cfg.refs_dispersion, "Reference count dispersion");
    generate->add_option("--within-category-prob", ga.cfg.within_category_prob,
                         "Probability a reference stays in the planted category");
    generate->add_option("--multi-category-fraction", ga.cfg.multi_category_fraction,
                         "Fraction of items with 2-6 original categories");
    generate->add_option("--multidisciplinary-fraction", ga.cfg.multidisciplinary_fraction,
                         "Fraction of items with a multidisciplinary original");
    generate->add_option("--titleless-fraction", ga.cfg.titleless_fraction, "Fraction without titles");
    generate->add_option("--refless-fraction", ga.cfg.refless_fraction, "Fraction without references");
    generate->add_option("--year-min", ga.cfg.year_min, "First publication year");
    generate->add_option("--year-max", ga.cfg.year_max, "Last publication year");
    generate->add_option("--category-skew", ga.cfg.category_skew,
                         "Zipf exponent for category sizes (0 = uniform)");
    generate->add_option("--seed", ga.cfg.seed, "Generator seed");
    generate->add_option("--out", ga.out, "Output directory")->required();

    EvaluateArgs ea;
    auto* evaluate = app.add_subcommand("evaluate", "Compute metrics for an existing result file");
    evaluate->configurable();
    evaluate->add_option("--items", ea.items, "Items file")->required();
    evaluate->add_option("--refs", ea.refs, "References file")->required();
    evaluate->add_option("--taxonomy", ea.taxonomy, "Taxonomy TSV path, or \"default\"");
    evaluate->add_option("--result", ea.result, "Result TSV to evaluate")->required();
    evaluate->add_option("--truth", ea.truth, "Planted-truth TSV; reports recovery");
    evaluate->add_option("--eval-doc-types", ea.eval_doc_types, "Doc types for metrics (csv or \"all\")");
    auto* sample_opt = evaluate->add_option("--export-sample", ea.export_sample,
                                            "Export a blinded n-row sample for manual "
                                            "evaluation (default 142 rows)");
    sample_opt->expected(0, 1);
    evaluate->add_option("--sample-seed", ea.sample_seed, "Seed for the sample export");
    evaluate->add_option("--year-min", ea.year_min, "Smallest accepted publication year");
    evaluate->add_option("--year-max", ea.year_max, "Largest accepted publication year");
    evaluate->add_option("--out", ea.out, "Output directory")->required();

    TaxonomyCheckArgs ta;
    auto* taxonomy = app.add_subcommand("taxonomy", "Taxonomy utilities");
    taxonomy->require_subcommand(1);
    auto* check = taxonomy->add_subcommand("check", "Validate a taxonomy file and print a summary");
    check->add_option("--file", ta.file, "Taxonomy TSV path, or \"default\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify->parsed()) return cmd_classify(ca);
        if (generate->parsed()) return cmd_generate(ga);
        if (evaluate->parsed()) {
            if (sample_opt->count() > 0 && ea.export_sample == 0) ea.export_sample = 142;
            return cmd_evaluate(ea);
        }
        if (taxonomy->parsed() && check->parsed()) return cmd_taxonomy_check(ta);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const refclass::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const refclass::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const refclass::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
