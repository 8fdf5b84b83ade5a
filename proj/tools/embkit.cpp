// Command-line front end: validation, classification, ideal membership,
// copy queries, truncation, poset algebra and the property suites.
//
// Exit codes: 0 affirmative, 1 negative verdict, 2 input or usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "embkit/classify.hpp"
#include "embkit/generators.hpp"
#include "embkit/ideal.hpp"
#include "embkit/io.hpp"
#include "embkit/preorder.hpp"
#include "embkit/verify.hpp"

namespace {

struct Caps {
    std::uint32_t points = 256;
    std::uint32_t components = 4;
    std::uint32_t size = 6;
};

Caps parse_caps(const std::string& text) {
    Caps c;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("caps entries look like key=value");
        std::string key = item.substr(0, eq);
        std::uint32_t val = static_cast<std::uint32_t>(std::stoul(item.substr(eq + 1)));
        if (key == "points")
            c.points = val;
        else if (key == "components")
            c.components = val;
        else if (key == "size")
            c.size = val;
        else
            throw std::domain_error("unknown cap '" + key + "'");
    }
    return c;
}

embkit::CatalogueSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open " + path);
    return embkit::read_spec(in, std::filesystem::path(path).parent_path());
}

embkit::TraceProfile load_profile(const std::string& path, const embkit::CatalogueSpec& spec) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open " + path);
    return embkit::read_profile(in, spec);
}

embkit::FinitePreOrder load_preorder(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open " + path);
    return embkit::read_preorder(in);
}

std::vector<int> parse_points(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite catalogue toolkit for copy posets and their ideals"};
    app.require_subcommand(1);
    // global flags remain valid after the subcommand name
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string caps_text, format = "text";
    app.add_option("--seed", seed, "seed for randomized verbs");
    app.add_option("--caps", caps_text, "truncation caps points=N,components=K,size=M");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "record"}));

    std::string spec_path, profile_path, subset_text, pattern_text, preorder_op,
        preorder_path, suite = "all";

    auto* validate_cmd = app.add_subcommand("validate", "check the catalogue hypotheses");
    validate_cmd->add_option("spec", spec_path)->required();

    auto* classify_cmd = app.add_subcommand("classify", "symbolic classification");
    classify_cmd->add_option("spec", spec_path)->required();

    auto* report_cmd = app.add_subcommand("report", "full classification report");
    report_cmd->add_option("spec", spec_path)->required();

    auto* ideal_cmd = app.add_subcommand("ideal", "profile membership in the copy-free ideal");
    ideal_cmd->add_option("spec", spec_path)->required();
    ideal_cmd->add_option("profile", profile_path)->required();

    auto* copies_cmd =
        app.add_subcommand("copies", "does a point subset of the truncation contain a copy");
    copies_cmd->add_option("spec", spec_path)->required();
    copies_cmd->add_option("subset", subset_text, "comma-separated point list")->required();

    auto* truncate_cmd = app.add_subcommand("truncate", "emit a finite truncation");
    truncate_cmd->add_option("spec", spec_path)->required();

    auto* poset_cmd = app.add_subcommand("poset", "pre-order algebra");
    poset_cmd->add_option("op", preorder_op, "one of sm|sq|atoms|separative")->required();
    poset_cmd->add_option("file", preorder_path)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    verify_cmd->add_option("suite", suite, "suite name or 'all'");

    (void)pattern_text;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Caps caps;
    try {
        if (!caps_text.empty()) caps = parse_caps(caps_text);

        if (validate_cmd->parsed()) {
            auto spec = load_spec(spec_path);
            embkit::ValidationReport r = embkit::validate(spec);
            if (format == "record") {
                std::cout << "valid=" << (r.valid ? "true" : "false") << "\n";
                std::cout << "failures=" << r.failures.size() << "\n";
                std::cout << "unverified=" << r.unverified.size() << "\n";
            } else {
                std::cout << r.summary() << "\n";
            }
            return r.valid ? 0 : 1;
        }

        if (classify_cmd->parsed()) {
            auto spec = load_spec(spec_path);
            embkit::ClassificationReport r = embkit::report(spec);
            if (!r.validation_ok) {
                std::cerr << "spec fails validation:\n" << r.validation.summary() << "\n";
                return 2;
            }
            if (format == "record") {
                embkit::render_report_record(std::cout, r);
            } else {
                std::cout << "case " << r.tag << ": " << r.forcing_class->label()
                          << " ; indivisible: " << (r.indivisible ? "yes" : "no") << "\n";
            }
            return 0;
        }

        if (report_cmd->parsed()) {
            auto spec = load_spec(spec_path);
            embkit::ClassificationReport r = embkit::report(spec);
            if (format == "record")
                embkit::render_report_record(std::cout, r);
            else
                embkit::render_report_text(std::cout, r);
            return r.validation_ok ? 0 : 1;
        }

        if (ideal_cmd->parsed()) {
            auto spec = load_spec(spec_path);
            auto profile = load_profile(profile_path, spec);
            bool member = embkit::ideal_member(spec, profile);
            if (format == "record")
                std::cout << "member=" << (member ? "true" : "false") << "\n";
            else
                std::cout << "member: " << (member ? "true" : "false") << "\n";
            return member ? 0 : 1;
        }

        if (copies_cmd->parsed()) {
            auto spec = load_spec(spec_path);
            embkit::Truncation t =
                embkit::truncate(spec, caps.components, caps.size, caps.points);
            std::vector<int> s = parse_points(subset_text);
            bool hit = embkit::copy_inside_matching(t, s, t);
            if (format == "record")
                std::cout << "contains_copy=" << (hit ? "true" : "false") << "\n";
            else
                std::cout << "contains copy: " << (hit ? "true" : "false") << "\n";
            return hit ? 0 : 1;
        }

        if (truncate_cmd->parsed()) {
            auto spec = load_spec(spec_path);
            embkit::Truncation t =
                embkit::truncate(spec, caps.components, caps.size, caps.points);
            embkit::write_structure(std::cout, t.structure);
            if (format == "record")
                for (std::size_t b = 0; b < t.blocks.size(); ++b)
                    std::cout << "block=" << b << " class=" << t.blocks[b].class_index
                              << " points=" << t.blocks[b].points.size() << "\n";
            return 0;
        }

        if (poset_cmd->parsed()) {
            embkit::FinitePreOrder p = load_preorder(preorder_path);
            if (preorder_op == "sm") {
                embkit::write_preorder(std::cout, embkit::sm(p));
                return 0;
            }
            if (preorder_op == "sq") {
                embkit::QuotientPoset q = embkit::sq(p);
                if (format == "record") {
                    std::cout << "classes=" << q.classes.size() << "\n";
                    embkit::write_preorder(std::cout, q.order);
                } else {
                    std::cout << q.classes.size()
                              << (q.classes.size() == 1 ? " class" : " classes") << "\n";
                    embkit::write_preorder(std::cout, q.order);
                }
                return 0;
            }
            if (preorder_op == "atoms") {
                auto a = embkit::atoms(p);
                std::cout << "atoms:";
                for (int v : a) std::cout << " " << v;
                std::cout << "\n";
                return a.empty() ? 1 : 0;
            }
            if (preorder_op == "separative") {
                bool sep = embkit::is_separative(p);
                std::cout << "separative: " << (sep ? "true" : "false") << "\n";
                return sep ? 0 : 1;
            }
            std::cerr << "unknown poset op '" << preorder_op << "'\n";
            return 2;
        }

        if (verify_cmd->parsed()) {
            std::vector<embkit::verify::PropertyResult> results;
            if (suite == "all") {
                results = embkit::verify::run_all(seed);
            } else if (suite == "monomorphicity") {
                results.push_back(embkit::verify::monomorphicity_sweep(seed, 20000));
            } else if (suite == "posets") {
                results.push_back(embkit::verify::poset_laws(seed));
                results.push_back(embkit::verify::product_laws(seed + 1));
                results.push_back(embkit::verify::transfer_soundness(seed + 2));
            } else if (suite == "ideals") {
                results.push_back(embkit::verify::oracle_agreement(seed));
                results.push_back(embkit::verify::ideal_monotonicity(seed + 1));
                results.push_back(embkit::verify::ideal_union_and_dichotomy(seed + 2));
            } else if (suite == "classifier") {
                results.push_back(embkit::verify::golden_table());
                results.push_back(embkit::verify::n1_criterion());
                results.push_back(embkit::verify::witness_soundness(seed));
            } else {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
            bool all_pass = true;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                if (format == "record")
                    std::cout << "suite=" << r.name << " pass=" << (r.pass ? "true" : "false")
                              << " cases=" << r.cases << "\n";
                else
                    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " ("
                              << r.cases << " cases)"
                              << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
            }
            return all_pass ? 0 : 1;
        }
    } catch (const embkit::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
