#pragma once

// Command-line front end.  All subcommands are pure functions of their input
// files; exit code 0 means success, 1 flags negative findings under --strict
// (and catalog verification failures), 2 means the input could not be used.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghm/io.hpp"

namespace ghm::cli {

namespace detail {

inline CrystGroup load_group(const std::string& path) {
    auto in = group_input_from_file(path);
    return CrystGroup::from_affine_generators(in.rank, in.generators);
}

inline int do_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    CrystGroup g = load_group(path);
    auto defects = g.validate();
    if (!defects.empty()) {
        for (const auto& d : defects) {
            err << "cocycle identity fails at elements (" << d.g << ", " << d.h << "), defect (";
            for (std::size_t i = 0; i < d.defect.size(); ++i)
                err << (i ? ", " : "") << rat_to_string(d.defect[i]);
            err << ")\n";
        }
        return 2;
    }
    out << "valid: rank " << g.rank() << ", point group of order " << g.point_group().size()
        << "\n";
    return 0;
}

inline int do_analyze(const std::string& path, const std::string& format, bool sample,
                      bool strict, std::ostream& out) {
    CrystGroup g = load_group(path);
    AnalysisReport r = analyze(g, sample);
    if (format == "json")
        out << report_to_json(r).dump(2) << "\n";
    else
        out << report_to_text(r);
    if (strict && (!r.torsion.torsion_free || !r.iso.even)) return 1;
    return 0;
}

inline int do_cohomology(const std::string& path, int degree, const std::string& coefficients,
                         std::ostream& out) {
    CrystGroup g = load_group(path);
    const auto& pg = g.point_group();
    GModule mod = GModule::lattice(pg);
    if (coefficients.rfind("scaled:", 0) == 0) {
        Int d;
        try {
            d = Int(coefficients.substr(7));
        } catch (const std::runtime_error&) {
            throw IoError("bad scale in --coefficients " + coefficients);
        }
        if (d <= 0) throw IoError("scale must be positive in --coefficients " + coefficients);
        mod = GModule::scaled_lattice(pg, d);
    } else if (coefficients.rfind("quotient:", 0) == 0) {
        Json desc = json_from_file(coefficients.substr(9));
        if (!desc.contains("relations") || !desc["relations"].is_array())
            throw IoError("quotient file needs a \"relations\" array");
        std::vector<IntVector> relations;
        for (const auto& row : desc["relations"]) {
            IntMatrix m = int_matrix_from_json(Json::array({row}));
            IntVector v(m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m.at(0, j);
            if (v.size() != g.rank()) throw IoError("relation length does not match the rank");
            relations.push_back(std::move(v));
        }
        std::vector<IntMatrix> action;
        for (std::size_t i = 0; i < pg.size(); ++i) action.push_back(pg.element(i));
        mod = GModule::from_element_action(pg, g.rank(), relations, action);
    } else if (coefficients != "lattice") {
        throw IoError("unknown coefficients \"" + coefficients +
                      "\" (expected lattice, scaled:d, or quotient:<file>)");
    }
    CohomologyGroup h(mod, degree);
    out << "H^" << degree << ": ";
    if (h.group().invariant_factors().empty()) {
        out << "0\n";
    } else {
        const auto& f = h.group().invariant_factors();
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " x " : "") << "Z/" << f[i];
        out << "\n";
    }
    return 0;
}

inline int do_split(const std::string& path, const std::string& overfile, std::ostream& out) {
    CrystGroup g = load_group(path);
    Overlattice lattice = Overlattice::standard(g.rank());
    if (!overfile.empty()) {
        Json desc = json_from_file(overfile);
        if (!desc.contains("vectors") || !desc["vectors"].is_array())
            throw IoError("overlattice file needs a \"vectors\" array");
        std::vector<RatVector> vectors;
        for (const auto& row : desc["vectors"]) vectors.push_back(rat_vector_from_json(row));
        lattice = Overlattice::from_vectors(g.point_group(), vectors);
    }
    out << "overlattice index: " << lattice.index() << "\n";
    auto result = splitting_over(g, lattice);
    out << "splits: " << (result.splits ? "yes" : "no") << "\n";
    if (result.origin_shift) {
        out << "origin shift: (";
        for (std::size_t i = 0; i < result.origin_shift->size(); ++i)
            out << (i ? ", " : "") << rat_to_string((*result.origin_shift)[i]);
        out << ")\n";
    }
    return 0;
}

inline int do_reduce(const std::string& path, std::ostream& out) {
    auto in = group_input_from_file(path);
    ReducedGroup red = reduce_translations(in.rank, in.generators);
    Json result;
    result["group"] = group_to_json(red.group);
    result["basis"] = rat_matrix_to_json(red.new_basis);
    Json quotient = Json::array();
    for (const auto& d : red.translation_quotient.invariant_factors())
        quotient.push_back(int_to_json(d));
    result["translation_quotient"] = std::move(quotient);
    out << result.dump(2) << "\n";
    return 0;
}

inline int do_catalog(const std::string& action, const std::string& name, std::ostream& out,
                      std::ostream& err) {
    std::vector<const CatalogEntry*> entries;
    for (const auto& e : catalog())
        if (name.empty() || e.name == name) entries.push_back(&e);
    if (entries.empty()) throw IoError("no catalog entry named " + name);
    std::sort(entries.begin(), entries.end(),
              [](const CatalogEntry* a, const CatalogEntry* b) { return a->name < b->name; });

    if (action == "list") {
        for (const auto* e : entries)
            out << e->name << ": " << e->summary << " (rank " << e->rank << ")\n";
        return 0;
    }
    bool all_ok = true;
    for (const auto* e : entries) {
        auto result = verify_entry(*e);
        if (result.ok) {
            out << e->name << ": ok\n";
        } else {
            all_ok = false;
            err << e->name << ": MISMATCH";
            for (const auto& m : result.mismatches) err << " " << m;
            err << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of Euclidean crystallographic groups"};
    app.name("ghm");
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    std::string coefficients = "lattice";
    std::string overfile;
    std::string action;
    std::string name;
    int degree = 2;
    bool strict = false;
    bool sample = false;

    auto* validate = app.add_subcommand("validate", "check a group description file");
    validate->add_option("file", file, "group JSON file")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
    analyze_cmd->add_option("file", file, "group JSON file")->required();
    analyze_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    analyze_cmd->add_flag("--sample-structure", sample,
                          "construct a sample invariant complex structure");
    analyze_cmd->add_flag("--strict", strict, "exit 1 on torsion or odd multiplicities");

    auto* coh = app.add_subcommand("cohomology", "cohomology of the point group");
    coh->add_option("file", file, "group JSON file")->required();
    coh->add_option("--degree", degree, "cohomological degree")
        ->check(CLI::IsMember({1, 2}))
        ->required();
    coh->add_option("--coefficients", coefficients,
                    "lattice, scaled:d, or quotient:<relations file>");

    auto* split = app.add_subcommand("split", "test splitting over an overlattice");
    split->add_option("file", file, "group JSON file")->required();
    split->add_option("--overlattice", overfile, "overlattice JSON file");

    auto* reduce = app.add_subcommand("reduce", "factor out pure translations");
    reduce->add_option("file", file, "group JSON file")->required();

    auto* cat = app.add_subcommand("catalog", "built-in reference groups");
    cat->add_option("action", action, "list or verify")
        ->check(CLI::IsMember({"list", "verify"}))
        ->required();
    cat->add_option("name", name, "restrict to one entry");

    std::vector<const char*> argv;
    argv.push_back("ghm");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) return detail::do_validate(file, out, err);
        if (app.got_subcommand(analyze_cmd))
            return detail::do_analyze(file, format, sample, strict, out);
        if (app.got_subcommand(coh)) return detail::do_cohomology(file, degree, coefficients, out);
        if (app.got_subcommand(split)) return detail::do_split(file, overfile, out);
        if (app.got_subcommand(reduce)) return detail::do_reduce(file, out);
        if (app.got_subcommand(cat)) return detail::do_catalog(action, name, out, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotCrystallographic& e) {
        err << "error: not a crystallographic group: " << e.what() << "\n";
        return 2;
    } catch (const NotInvariant& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace ghm::cli
