#include "charclass/report.hpp"

#include <sstream>

#include "charclass/errors.hpp"

namespace charclass {

namespace {

nlohmann::ordered_json int_to_json(const Int& v) {
    if (fits_int64(v))
        return to_int64(v);
    return v.str();
}

Int int_from_json(const nlohmann::ordered_json& j) {
    if (j.is_number_integer())
        return Int(j.get<long long>());
    if (j.is_string()) {
        auto parsed = parse_int(j.get<std::string>());
        if (parsed)
            return *parsed;
    }
    throw usage_error("expected an integer or a decimal string");
}

}  // namespace

ReportDocument make_report(const StiefelParams& p, bool with_derivation) {
    ReportDocument doc;
    doc.classification = classify(p);

    if (!doc.classification.cohomology_applicable)
        doc.caveats.push_back(
            "k >= n-1: the low-degree cohomology is not free on the generator, so "
            "coefficient values alone do not decide class vanishing here");
    if (doc.classification.span_cases.empty())
        doc.caveats.push_back(
            "span vs stable span: no sufficient condition applies; equality is "
            "unknown, not refuted");
    else if (!doc.classification.cohomology_applicable)
        doc.caveats.push_back(
            "span conditions are stated by the parameter parities and are reported "
            "verbatim in this range");

    if (with_derivation) {
        TangentEquation eq = tangent_stable_equation(p);
        CharClassReport classes = solve_stable(eq.known_summand, eq.rhs);
        TruncSeries rhs_chern = chern_of_complex_part(eq.rhs);
        TruncSeries known_chern = chern_of_complex_part(eq.known_summand);
        std::vector<DerivationStep> steps;
        steps.push_back({"whitney product over the right-hand side", eq.rhs.str(),
                         rhs_chern.str()});
        steps.push_back({"whitney product over the known complex summands",
                         eq.known_summand.str(), known_chern.str()});
        steps.push_back({"series inversion for the stable difference",
                         (eq.rhs - eq.known_summand).str(), classes.total_chern.str()});
        steps.push_back({"chern to pontrjagin", "p = alt(c) * c, sign-corrected",
                         classes.total_pontrjagin.str()});
        steps.push_back({"mod-2 reduction", "w = c mod 2", classes.total_sw.str()});
        doc.derivation = std::move(steps);
        if (classes.chern_from_complex_part)
            doc.caveats.push_back(
                "the stable difference carries real trivial summands; its Chern "
                "series is that of the complex part only");
    }
    return doc;
}

nlohmann::ordered_json report_to_json(const ReportDocument& doc) {
    const Classification& c = doc.classification;
    nlohmann::ordered_json j;
    j["schema_version"] = doc.schema_version;
    j["input"]["n"] = c.params.n;
    j["input"]["k"] = c.params.k;
    j["input"]["l"] = nlohmann::ordered_json::array();
    for (const Int& w : c.params.l)
        j["input"]["l"].push_back(int_to_json(w));
    j["dimension"] = int_to_json(c.dimension);
    j["orientable"] = c.orientable;
    j["parallelizable"] = c.parallelizable;
    j["stably_parallelizable"] = c.stably_parallelizable;
    j["p1_coefficient"] = int_to_json(c.p1_coefficient);
    j["w2_coefficient"] = c.w2_coefficient;
    j["w2_possibly_nonzero"] = c.w2_possibly_nonzero;
    j["span_cases"] = c.span_cases;
    j["cohomology_applicable"] = c.cohomology_applicable;
    j["caveats"] = doc.caveats;
    if (doc.derivation) {
        j["derivation"] = nlohmann::ordered_json::array();
        for (const DerivationStep& step : *doc.derivation) {
            nlohmann::ordered_json s;
            s["rule"] = step.rule;
            s["expression"] = step.expression;
            s["total_class"] = step.total_class;
            j["derivation"].push_back(std::move(s));
        }
    }
    return j;
}

ReportDocument report_from_json(const nlohmann::ordered_json& j) {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    Classification& c = doc.classification;
    c.params.n = j.at("input").at("n").get<long long>();
    c.params.k = j.at("input").at("k").get<long long>();
    for (const auto& w : j.at("input").at("l"))
        c.params.l.push_back(int_from_json(w));
    c.dimension = int_from_json(j.at("dimension"));
    c.orientable = j.at("orientable").get<bool>();
    c.parallelizable = j.at("parallelizable").get<bool>();
    c.stably_parallelizable = j.at("stably_parallelizable").get<bool>();
    c.p1_coefficient = int_from_json(j.at("p1_coefficient"));
    c.w2_coefficient = j.at("w2_coefficient").get<int>();
    c.w2_possibly_nonzero = j.at("w2_possibly_nonzero").get<bool>();
    c.span_cases = j.at("span_cases").get<std::set<int>>();
    c.cohomology_applicable = j.at("cohomology_applicable").get<bool>();
    doc.caveats = j.at("caveats").get<std::vector<std::string>>();
    if (j.contains("derivation")) {
        std::vector<DerivationStep> steps;
        for (const auto& s : j.at("derivation"))
            steps.push_back({s.at("rule").get<std::string>(),
                             s.at("expression").get<std::string>(),
                             s.at("total_class").get<std::string>()});
        doc.derivation = std::move(steps);
    }
    return doc;
}

std::string report_to_text(const ReportDocument& doc) {
    const Classification& c = doc.classification;
    std::ostringstream out;
    out << c.params.str() << "\n";
    out << "  dimension               " << c.dimension.str() << "\n";
    out << "  orientable              " << (c.orientable ? "yes" : "no") << "\n";
    out << "  parallelizable          " << (c.parallelizable ? "yes" : "no") << "\n";
    out << "  stably parallelizable   " << (c.stably_parallelizable ? "yes" : "no")
        << "\n";
    out << "  p1 coefficient          " << c.p1_coefficient.str() << "\n";
    out << "  w2 coefficient          " << c.w2_coefficient << "\n";
    out << "  w2 possibly nonzero     " << (c.w2_possibly_nonzero ? "yes" : "no")
        << "\n";
    out << "  span = stable span via  ";
    if (c.span_cases.empty()) {
        out << "(no case applies)";
    } else {
        bool first = true;
        for (int case_id : c.span_cases) {
            if (!first)
                out << ", ";
            out << "case " << case_id;
            first = false;
        }
    }
    out << "\n";
    out << "  cohomology applicable   " << (c.cohomology_applicable ? "yes" : "no")
        << "\n";
    for (const std::string& caveat : doc.caveats)
        out << "  note: " << caveat << "\n";
    if (doc.derivation) {
        out << "  derivation:\n";
        for (const DerivationStep& step : *doc.derivation) {
            out << "    " << step.rule << "\n";
            out << "      " << step.expression << "\n";
            out << "      => " << step.total_class << "\n";
        }
    }
    return out.str();
}

}  // namespace charclass
