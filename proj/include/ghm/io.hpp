#pragma once

// JSON serialization of groups and analysis reports.  All rationals cross the
// wire as reduced "p/q" strings (plain "p" when the denominator is one) and
// integers as JSON numbers when they fit, decimal strings otherwise, so the
// format is exact and the output deterministic.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghm/analysis.hpp"
#include "ghm/catalog.hpp"

namespace ghm {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << '/' << den(r);
    return os.str();
}

inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw IoError("empty rational");
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw IoError("zero denominator in \"" + s + "\"");
        return Rat(p, q);
    } catch (const std::runtime_error& e) {
        throw IoError("bad rational \"" + s + "\": " + e.what());
    }
}

inline Json int_to_json(const Int& v) {
    if (v >= Int(std::numeric_limits<std::int64_t>::min()) &&
        v <= Int(std::numeric_limits<std::int64_t>::max()))
        return to_int64(v);
    return v.str();
}

inline Json rat_vector_to_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(rat_to_string(r));
    return a;
}

inline RatVector rat_vector_from_json(const Json& a) {
    if (!a.is_array()) throw IoError("expected an array of rationals");
    RatVector v;
    for (const auto& e : a) {
        if (e.is_number_integer()) v.push_back(Rat(Int(e.get<std::int64_t>())));
        else if (e.is_string()) v.push_back(rat_from_string(e.get<std::string>()));
        else throw IoError("rational entries must be integers or \"p/q\" strings");
    }
    return v;
}

inline Json int_matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix int_matrix_from_json(const Json& a) {
    if (!a.is_array() || a.empty()) throw IoError("expected a non-empty integer matrix");
    std::size_t cols = 0;
    std::vector<std::vector<long long>> rows;
    for (const auto& r : a) {
        if (!r.is_array()) throw IoError("matrix rows must be arrays");
        std::vector<long long> row;
        for (const auto& e : r) {
            if (!e.is_number_integer()) throw IoError("matrix entries must be integers");
            row.push_back(e.get<long long>());
        }
        if (cols == 0) cols = row.size();
        if (row.size() != cols || cols == 0) throw IoError("ragged or empty matrix");
        rows.push_back(std::move(row));
    }
    return IntMatrix::of(rows);
}

inline Json rat_matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json int_vector_to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

// ---- group descriptions ----------------------------------------------------

struct GroupInput {
    std::size_t rank = 0;
    std::vector<AffineGenerator> generators;
};

inline GroupInput group_input_from_json(const Json& j) {
    if (!j.is_object()) throw IoError("group description must be a JSON object");
    if (!j.contains("rank") || !j["rank"].is_number_integer())
        throw IoError("missing integer field \"rank\"");
    GroupInput in;
    auto rank = j["rank"].get<std::int64_t>();
    if (rank <= 0) throw IoError("rank must be positive");
    in.rank = static_cast<std::size_t>(rank);
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw IoError("missing non-empty array \"generators\"");
    for (const auto& g : j["generators"]) {
        if (!g.is_object() || !g.contains("linear") || !g.contains("translation"))
            throw IoError("each generator needs \"linear\" and \"translation\"");
        AffineGenerator gen{int_matrix_from_json(g["linear"]),
                            rat_vector_from_json(g["translation"])};
        if (gen.linear.rows() != in.rank || gen.linear.cols() != in.rank)
            throw IoError("generator matrix shape does not match the rank");
        if (gen.translation.size() != in.rank)
            throw IoError("generator translation length does not match the rank");
        in.generators.push_back(std::move(gen));
    }
    return in;
}

inline GroupInput group_input_from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw IoError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return group_input_from_json(j);
}

inline Json json_from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open " + path);
    try {
        return Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw IoError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
}

// Canonical echo: the point group generators in input order with the stored
// representative translations.  Feeding the echo back reproduces the group.
inline Json group_to_json(const CrystGroup& g) {
    const auto& pg = g.point_group();
    Json out;
    out["rank"] = g.rank();
    Json gens = Json::array();
    for (const auto& mat : pg.generators()) {
        std::size_t idx = pg.index_of(mat);
        Json entry;
        entry["linear"] = int_matrix_to_json(mat);
        entry["translation"] = rat_vector_to_json(g.vector_system()[idx]);
        gens.push_back(std::move(entry));
    }
    out["generators"] = std::move(gens);
    return out;
}

// ---- analysis reports -------------------------------------------------------

inline Json cyclotomic_to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& r : c.coefficients()) coeffs.push_back(rat_to_string(r));
    return coeffs;
}

inline Json cyc_matrix_to_json(const CycMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cyclotomic_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json report_to_json(const AnalysisReport& r) {
    const auto& pg = r.group.point_group();
    Json out;
    out["input"] = group_to_json(r.group);
    out["valid"] = r.defects.empty();
    if (!r.defects.empty()) {
        Json defects = Json::array();
        for (const auto& d : r.defects) {
            Json e;
            e["g"] = d.g;
            e["h"] = d.h;
            e["defect"] = rat_vector_to_json(d.defect);
            defects.push_back(std::move(e));
        }
        out["defects"] = std::move(defects);
    }

    Json point;
    point["order"] = pg.size();
    point["abelian"] = pg.is_abelian();
    point["exponent"] = int_to_json(pg.exponent());
    out["point_group"] = std::move(point);

    out["torsion_free"] = r.torsion.torsion_free;
    Json witnesses = Json::array();
    for (const auto& t : r.torsion.elements) {
        Json w;
        w["element"] = t.element;
        w["word"] = pg.word(t.element);
        w["order"] = int_to_json(pg.element_order(t.element));
        w["fixed_point"] = rat_vector_to_json(t.fixed_point);
        w["lattice_shift"] = int_vector_to_json(t.lattice_shift);
        witnesses.push_back(std::move(w));
    }
    out["torsion_witnesses"] = std::move(witnesses);

    out["eigenvalue_one"] = r.eigenvalue_one;

    out["minimal_denominator"] = int_to_json(r.denominator.d);
    out["origin_shift"] = rat_vector_to_json(r.denominator.shift);
    Json realized = Json::array();
    for (const auto& u : r.denominator.realized.vector_system())
        realized.push_back(rat_vector_to_json(u));
    out["realized_vector_system"] = std::move(realized);

    out["extension_order"] = int_to_json(r.extension.order);
    Json invs = Json::array();
    for (const auto& d : r.extension.h2_invariants) invs.push_back(int_to_json(d));
    out["h2_invariants"] = std::move(invs);

    Json iso = Json::array();
    for (const auto& c : r.iso.components) {
        Json e;
        e["character"] = c.chi;
        e["degree"] = int_to_json(c.degree);
        e["multiplicity"] = int_to_json(c.multiplicity);
        e["real"] = c.real_char;
        e["partner"] = c.partner;
        iso.push_back(std::move(e));
    }
    out["isotypical"] = std::move(iso);
    out["character_field_order"] = r.iso.table.exponent_order();

    out["even"] = r.iso.even;
    if (!r.iso.even) {
        out["odd_real_characters"] = r.iso.odd_real_chars;
    }
    if (r.hodge) {
        Json hodge;
        hodge["type_count"] = int_to_json(r.hodge->count);
        Json types = Json::array();
        for (const auto& t : r.hodge->types) {
            Json e;
            e["nu"] = Json::array();
            for (const auto& v : t.nu) e["nu"].push_back(int_to_json(v));
            e["dimension"] = int_to_json(t.dimension);
            types.push_back(std::move(e));
        }
        hodge["types"] = std::move(types);
        out["hodge"] = std::move(hodge);
    }
    if (r.sample) {
        Json s;
        s["field_order"] = r.sample->field_order;
        s["type"] = Json::array();
        for (const auto& v : r.sample_nu) s["type"].push_back(int_to_json(v));
        s["j"] = cyc_matrix_to_json(r.sample->j);
        s["h10"] = cyc_matrix_to_json(r.sample->h10);
        s["orientation"] = r.sample->orientation;
        out["sample"] = std::move(s);
    } else if (!r.sample_error.empty()) {
        out["sample_error"] = r.sample_error;
    }
    return out;
}

// ---- plain-text rendering ---------------------------------------------------

inline std::string report_to_text(const AnalysisReport& r) {
    const auto& pg = r.group.point_group();
    std::ostringstream os;
    os << "rank " << r.group.rank() << ", point group of order " << pg.size()
       << (pg.is_abelian() ? " (abelian)" : "") << ", exponent " << pg.exponent() << "\n";
    os << "valid: " << (r.defects.empty() ? "yes" : "no") << "\n";
    for (const auto& d : r.defects)
        os << "  cocycle defect at (" << d.g << ", " << d.h << ")\n";

    os << "torsion-free: " << (r.torsion.torsion_free ? "yes" : "no") << "\n";
    for (const auto& t : r.torsion.elements) {
        os << "  element " << t.element << " (order " << pg.element_order(t.element)
           << ") fixes (";
        for (std::size_t i = 0; i < t.fixed_point.size(); ++i)
            os << (i ? ", " : "") << rat_to_string(t.fixed_point[i]);
        os << ")\n";
    }

    os << "minimal denominator: " << r.denominator.d << "\n";
    os << "origin shift: (";
    for (std::size_t i = 0; i < r.denominator.shift.size(); ++i)
        os << (i ? ", " : "") << rat_to_string(r.denominator.shift[i]);
    os << ")\n";
    os << "extension class order: " << r.extension.order << " in H^2 = ";
    if (r.extension.h2_invariants.empty()) {
        os << "0";
    } else {
        for (std::size_t i = 0; i < r.extension.h2_invariants.size(); ++i)
            os << (i ? " x " : "") << "Z/" << r.extension.h2_invariants[i];
    }
    os << "\n";
    os << "splits over the standard lattice: "
       << (r.extension.order == 1 ? "yes" : "no") << "\n";

    os << "isotypical decomposition:\n";
    os << "  chi  degree  multiplicity  real  partner\n";
    for (const auto& c : r.iso.components)
        os << "  " << c.chi << "    " << c.degree << "       " << c.multiplicity
           << "             " << (c.real_char ? "yes" : "no ") << "   " << c.partner << "\n";
    os << "even: " << (r.iso.even ? "yes" : "no") << "\n";

    if (r.hodge) {
        os << "Hodge types: " << r.hodge->count << "\n";
        for (const auto& t : r.hodge->types) {
            os << "  type (";
            for (std::size_t i = 0; i < t.nu.size(); ++i) os << (i ? ", " : "") << t.nu[i];
            os << "): dimension " << t.dimension;
            // Grassmannian factors of the component, one per contributing row
            bool first = true;
            for (const auto& c : r.iso.components) {
                if (c.multiplicity == 0) continue;
                std::ostringstream factor;
                if (c.real_char)
                    factor << "Gr(" << c.multiplicity / 2 << "," << c.multiplicity << ")";
                else if (c.chi < c.partner)
                    factor << "Gr(" << t.nu[c.chi] << "," << c.multiplicity << ") x Gr("
                           << t.nu[c.partner] << "," << c.multiplicity << ")";
                else
                    continue;
                os << (first ? " = " : " x ") << factor.str();
                first = false;
            }
            os << "\n";
        }
    }
    if (r.sample) {
        os << "sample structure over Q(zeta_" << r.sample->field_order
           << "), orientation " << r.sample->orientation << "\n";
    } else if (!r.sample_error.empty()) {
        os << "sample structure: " << r.sample_error << "\n";
    }
    return os.str();
}

}  // namespace ghm
